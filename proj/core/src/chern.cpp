#include "hk/chern.hpp"

#include <stdexcept>

namespace hk {

TruncatedClass trunc_mul(const TruncatedClass& x, const TruncatedClass& y) {
    return TruncatedClass(x.c0 * y.c0, x.c0 * y.c1 + x.c1 * y.c0,
                          x.c0 * y.c2 + x.c1 * y.c1 + x.c2 * y.c0);
}

TruncatedClass trunc_pow(TruncatedClass x, int n) {
    TruncatedClass r(1);
    for (; n > 0; --n) r = trunc_mul(r, x);
    return r;
}

TruncatedClass chern_product(const std::vector<ChernFactor>& factors) {
    TruncatedClass r(1);
    for (auto& f : factors) {
        TruncatedClass g = trunc_mul(f.base, TruncatedClass(1, f.twist, 0));
        r = trunc_mul(r, trunc_pow(g, f.power));
    }
    return r;
}

Int pushforward_c2(const Int& r, const TruncatedClass& c_push) {
    if (c_push.c1 != Rat(-3) * Rat(r))
        throw std::invalid_argument("pushforward_c2: c1 of the pushforward must be -3r");
    Rat v = Rat(-9, 2) * Rat(r) * Rat(r - 1) + c_push.c2;
    if (!is_integer(v)) throw std::logic_error("pushforward_c2: non-integral result");
    return num(v);
}

OrderTwoTrace order_two_example() {
    OrderTwoTrace t;
    // c(E^dual) = (1+h)^3 on the degree-two K3; identify h^2 with its degree 2
    TruncatedClass cE = trunc_pow(TruncatedClass(1, 1, 0), 3);
    t.c2_E_dual = num(cE.c2 * 2);           // 3 h^2 = 6
    t.c1_correction = cE.c1 - Rat(3);       // c1 - [C_K], with [C_K] = 3h
    t.c2_correction = Rat(9 * 2) - Rat(3) * Rat(3) * Rat(2);  // [C_K]^2 - i_* c1(L(3))
    Rat res = Rat(t.c2_E_dual) - t.c2_correction;
    t.result = num(res);
    return t;
}

Rat fujiki_product(const QMat& q, const QVec& a, const QVec& b, const QVec& c, const QVec& e) {
    if (q.rows != q.cols) throw std::invalid_argument("fujiki_product: Gram must be square");
    auto ip = [&](const QVec& x, const QVec& y) {
        Rat s = 0;
        for (int i = 0; i < q.rows; ++i)
            for (int j = 0; j < q.cols; ++j) s += x[i] * q(i, j) * y[j];
        return s;
    };
    return ip(a, b) * ip(c, e) + ip(a, c) * ip(b, e) + ip(a, e) * ip(b, c);
}

ConicInvariants conic_invariants() {
    ConicInvariants ci;
    ci.c2w = 6;
    ci.ke3 = 2 * ci.c2w;
    ci.c2e_fiber_coeff = 24;
    ci.c3e = 48;
    ci.hodge = {1, 0, 1, 21, 0, 0};
    ci.betti = {1, 0, 23, 0, 23, 0, 1};
    return ci;
}

}  // namespace hk
