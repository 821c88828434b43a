#include "hk/lattice.hpp"

#include <stdexcept>

namespace hk {

Lattice lat_U() { return Lattice{ZMat{{Int(0), Int(1)}, {Int(1), Int(0)}}}; }

Lattice lat_E8_minus() {
    // Bourbaki node ordering; diagram edges (1,3),(2,4),(3,4),(4,5),(5,6),(6,7),(7,8)
    static const int edges[][2] = {{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
    ZMat g(8, 8);
    for (int i = 0; i < 8; ++i) g(i, i) = -2;
    for (auto& e : edges) {
        g(e[0], e[1]) = 1;
        g(e[1], e[0]) = 1;
    }
    return Lattice{g};
}

Lattice lat_diag(const Int& n) {
    ZMat g(1, 1);
    g(0, 0) = n;
    return Lattice{g};
}

Lattice direct_sum(const std::vector<Lattice>& parts) {
    int n = 0;
    for (auto& p : parts) n += p.rank();
    ZMat g(n, n);
    int o = 0;
    for (auto& p : parts) {
        for (int i = 0; i < p.rank(); ++i)
            for (int j = 0; j < p.rank(); ++j) g(o + i, o + j) = p.gram(i, j);
        o += p.rank();
    }
    return Lattice{g};
}

Lattice lat_K3() { return direct_sum({lat_U(), lat_U(), lat_U(), lat_E8_minus(), lat_E8_minus()}); }

Lattice lat_Lambda_K3_2() { return direct_sum({lat_K3(), lat_diag(-2)}); }

Lattice lat_Lambda_prime() { return direct_sum({lat_U(), lat_U(), lat_E8_minus(), lat_E8_minus()}); }

Lattice lat_MukaiK3() {
    // coord 0 = r, coords 1..22 = K3, coord 23 = s; <e_r, e_s> = -1
    Lattice k3 = lat_K3();
    ZMat g(24, 24);
    for (int i = 0; i < 22; ++i)
        for (int j = 0; j < 22; ++j) g(1 + i, 1 + j) = k3.gram(i, j);
    g(0, 23) = -1;
    g(23, 0) = -1;
    return Lattice{g};
}

Lattice make_standard(const std::string& name, const Int& param) {
    if (name == "U") return lat_U();
    if (name == "E8_minus") return lat_E8_minus();
    if (name == "diag") {
        if (param % 2 != 0) throw std::invalid_argument("diag(n): n must be even");
        return lat_diag(param);
    }
    if (name == "K3") return lat_K3();
    if (name == "Lambda_K3_2") return lat_Lambda_K3_2();
    if (name == "Lambda_prime") return lat_Lambda_prime();
    if (name == "MukaiK3") return lat_MukaiK3();
    throw std::invalid_argument("unknown lattice name: " + name);
}

ZVec uvec(int n, int block, const Int& a, const Int& b) {
    ZVec v(n, 0);
    v[2 * (block - 1)] = a;
    v[2 * (block - 1) + 1] = b;
    return v;
}

Rat inner(const Lattice& L, const QVec& x, const QVec& y) {
    if (int(x.size()) != L.rank() || int(y.size()) != L.rank())
        throw std::invalid_argument("inner: dimension mismatch");
    Rat s = 0;
    for (int i = 0; i < L.rank(); ++i) {
        if (x[i] == 0) continue;
        Rat t = 0;
        for (int j = 0; j < L.rank(); ++j) t += Rat(L.gram(i, j)) * y[j];
        s += x[i] * t;
    }
    return s;
}

Int inner_z(const Lattice& L, const ZVec& x, const ZVec& y) {
    if (int(x.size()) != L.rank() || int(y.size()) != L.rank())
        throw std::invalid_argument("inner: dimension mismatch");
    Int s = 0;
    for (int i = 0; i < L.rank(); ++i) {
        if (x[i] == 0) continue;
        Int t = 0;
        for (int j = 0; j < L.rank(); ++j) t += L.gram(i, j) * y[j];
        s += x[i] * t;
    }
    return s;
}

DiscriminantGroup discriminant_group(const Lattice& L) {
    const int n = L.rank();
    if (det_z(L.gram) == 0) throw std::domain_error("discriminant_group: degenerate Gram");
    SnfResult s = smith_normal_form(L.gram);
    ZMat Uinv = inverse_unimodular(s.U);
    QMat Ginv = inverse_q(to_q(L.gram));
    DiscriminantGroup dg;
    for (int i = 0; i < n; ++i) {
        if (s.D(i, i) <= 1) continue;
        dg.cyclic_orders.push_back(s.D(i, i));
        // generator lift: y = G^-1 * (column i of U^-1)
        QVec z(n);
        for (int r = 0; r < n; ++r) z[r] = Rat(Uinv(r, i));
        QVec y(n, Rat(0));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) y[r] += Ginv(r, c) * z[c];
        dg.generators.push_back(std::move(y));
    }
    const int k = int(dg.generators.size());
    dg.q_values.resize(k);
    dg.bilinear = QMat(k, k);
    for (int i = 0; i < k; ++i) {
        dg.q_values[i] = mod_reduce(inner(L, dg.generators[i], dg.generators[i]), Rat(2));
        for (int j = 0; j < k; ++j)
            dg.bilinear(i, j) = mod_reduce(inner(L, dg.generators[i], dg.generators[j]), Rat(1));
    }
    return dg;
}

Int divisibility(const Lattice& L, const ZVec& x) {
    bool zero = true;
    for (auto& c : x) zero = zero && c == 0;
    if (zero) throw std::invalid_argument("divisibility of zero vector");
    Int g = 0;
    for (int i = 0; i < L.rank(); ++i) {
        Int p = 0;
        for (int j = 0; j < L.rank(); ++j) p += L.gram(i, j) * x[j];
        g = gcd_int(g, p);
    }
    return abs(g);
}

Int divisibility_in(const Lattice& ambient, const ZMat& basis, const ZVec& x) {
    Int g = 0;
    for (int i = 0; i < basis.rows; ++i) g = gcd_int(g, inner_z(ambient, basis.row(i), x));
    return abs(g);
}

Lattice induced_gram(const Lattice& L, const ZMat& basis) {
    ZMat g(basis.rows, basis.rows);
    for (int i = 0; i < basis.rows; ++i)
        for (int j = 0; j < basis.rows; ++j) g(i, j) = inner_z(L, basis.row(i), basis.row(j));
    return Lattice{g};
}

Sublattice orthogonal_complement(const Lattice& L, const std::vector<ZVec>& S) {
    const int n = L.rank();
    ZMat A(n, int(S.size()));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < int(S.size()); ++j) {
            Int v = 0;
            for (int t = 0; t < n; ++t) v += L.gram(i, t) * S[j][t];
            A(i, j) = v;
        }
    ZMat B = left_kernel(A);
    return Sublattice{B, induced_gram(L, B)};
}

Sublattice saturate(const Lattice& L, const std::vector<ZVec>& gens) {
    ZMat R(int(gens.size()), L.rank());
    for (int i = 0; i < R.rows; ++i)
        for (int j = 0; j < R.cols; ++j) R(i, j) = gens[i][j];
    ZMat B = saturation(R);
    return Sublattice{B, induced_gram(L, B)};
}

bool verify_isometry(const ZMat& S, const Lattice& M1, const Lattice& M2) {
    if (S.rows != S.cols || S.rows != M1.rank() || M1.rank() != M2.rank())
        throw std::invalid_argument("verify_isometry: dimension mismatch");
    Int d = det_z(S);
    if (d != 1 && d != -1) return false;
    return S * M1.gram * S.transpose() == M2.gram;
}

std::optional<std::pair<ZVec, ZVec>> find_hyperbolic_pair(const Lattice& L, Int bound,
                                                          long long max_points) {
    const int n = L.rank();
    if (bound <= 0) {
        Int m = 0;
        for (auto& e : L.gram.a)
            if (abs(e) > m) m = abs(e);
        bound = 2 * m * n;
        if (bound <= 0) bound = 1;
    }
    long long b = bound.convert_to<long long>();
    // enumerate the box, collect isotropic vectors, scan pairs with u.v = 1
    std::vector<ZVec> iso;
    ZVec cur(n, 0);
    long long visited = 0;
    bool truncated = false;
    auto rec = [&](auto&& self, int pos) -> void {
        if (truncated) return;
        if (pos == n) {
            ++visited;
            if (visited > max_points) {
                truncated = true;
                return;
            }
            bool zero = true;
            for (auto& c : cur) zero = zero && c == 0;
            if (zero) return;
            if (inner_z(L, cur, cur) == 0) iso.push_back(cur);
            return;
        }
        for (long long v = -b; v <= b; ++v) {
            cur[pos] = v;
            self(self, pos + 1);
        }
        cur[pos] = 0;
    };
    rec(rec, 0);
    for (size_t i = 0; i < iso.size(); ++i)
        for (size_t j = 0; j < iso.size(); ++j) {
            if (i == j) continue;
            if (inner_z(L, iso[i], iso[j]) == 1) return std::make_pair(iso[i], iso[j]);
        }
    return std::nullopt;
}

bool is_member(const ZMat& basis, const ZVec& x, ZVec* coords) {
    auto sol = solve_left(basis, x);
    if (!sol) return false;
    if (coords) *coords = *sol;
    return true;
}

}  // namespace hk
