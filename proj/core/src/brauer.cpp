#include "hk/brauer.hpp"

#include <bit>
#include <stdexcept>

namespace hk {

namespace {
const Lattice& K3() {
    static Lattice L = lat_K3();
    return L;
}
const Lattice& LPRIME() {
    static Lattice L = lat_Lambda_prime();
    return L;
}
// K3 coord = Lambda' coord + 2 (the first hyperbolic block hosts h and v)
QVec embed_rest(const QVec& rest20) {
    QVec out(22, Rat(0));
    for (int i = 0; i < 20; ++i) out[2 + i] = rest20[i];
    return out;
}
}  // namespace

ZVec k3_h(int d) { return uvec(22, 1, 1, d); }
ZVec k3_v(int d) { return uvec(22, 1, 1, -d); }

Lattice t_K(int d) {
    ZMat g(21, 21);
    g(0, 0) = -2 * d;
    const Lattice& lp = LPRIME();
    for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 20; ++j) g(1 + i, 1 + j) = lp.gram(i, j);
    return Lattice{g};
}

BField bfield_of_class(const BrauerClass& c) {
    BField B;
    B.d = c.d;
    B.coords.assign(22, Rat(0));
    B.coords[1] = Rat(c.a, 2);
    for (int i = 0; i < 20; ++i) B.coords[2 + i] = Rat(c.lambda[i], 2);
    return B;
}

Rat invariant_Bh(const BField& B) {
    Rat bh = inner(K3(), B.coords, to_q(k3_h(B.d)));
    return mod_reduce(bh, Rat(1));
}

Rat bfield_b2(const BField& B) { return inner(K3(), B.coords, B.coords); }

std::optional<Rat> invariant_B2(const BField& B) {
    Rat bh = inner(K3(), B.coords, to_q(k3_h(B.d)));
    Rat crit = Rat(4) * bh + Rat(2 * B.d);
    if (!is_integer(crit) || num(crit) % 4 != 0) return std::nullopt;
    return mod_reduce(bfield_b2(B), Rat(1));
}

BrauerClass class_of_bfield(const BField& B) {
    // alpha(x) = (2B).x mod 2 on T_K = <v> + Lambda'
    ZVec beta(22);
    for (int i = 0; i < 22; ++i) {
        Rat t = Rat(2) * B.coords[i];
        if (!is_integer(t)) throw std::invalid_argument("B-field must be half-integral");
        beta[i] = num(t);
    }
    BrauerClass c;
    c.d = B.d;
    c.a = int(((inner_z(K3(), beta, k3_v(B.d)) % 2) + 2) % 2);
    c.lambda.assign(beta.begin() + 2, beta.end());
    bool lz = true;
    for (auto& x : c.lambda) lz = lz && (x % 2 == 0);
    c.is_trivial = (c.a == 0) && lz;
    return c;
}

BrauerTypeInfo brauer_type(const BrauerClass& c) {
    if (c.is_trivial) throw std::invalid_argument("brauer_type: trivial class");
    Int lsq = 0;
    const Lattice& lp = LPRIME();
    for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 20; ++j) lsq += c.lambda[i] * lp.gram(i, j) * c.lambda[j];
    int l4 = int(((lsq % 4) + 4) % 4);
    BrauerTypeInfo t;
    t.lambda_sq_mod4 = l4;
    bool deven = c.d % 2 == 0;
    if (c.a == 0) {
        t.bh = Rat(0);
        if (deven) {
            t.id = (l4 == 0) ? BrauerTypeId::Bh0_B20 : BrauerTypeId::Bh0_B2Half;
            t.b2 = (l4 == 0) ? Rat(0) : Rat(1, 2);
        } else {
            t.id = BrauerTypeId::Bh0;
            t.b2 = std::nullopt;  // not an invariant
            if (c.d == 1) t.classical = "order-two point";
        }
    } else {
        t.bh = Rat(1, 2);
        if (deven) {
            t.id = BrauerTypeId::BhHalf;
            t.b2 = std::nullopt;
        } else {
            t.id = (l4 == 0) ? BrauerTypeId::BhHalf_B20 : BrauerTypeId::BhHalf_B2Half;
            t.b2 = (l4 == 0) ? Rat(0) : Rat(1, 2);
            if (c.d == 1) t.classical = (l4 == 0) ? "even theta" : "odd theta";
        }
    }
    t.label = type_label(t.id);
    return t;
}

std::string type_label(BrauerTypeId id) {
    switch (id) {
        case BrauerTypeId::Bh0_B20: return "bh0-b20";
        case BrauerTypeId::Bh0_B2Half: return "bh0-b2half";
        case BrauerTypeId::BhHalf: return "bhhalf";
        case BrauerTypeId::Bh0: return "bh0";
        case BrauerTypeId::BhHalf_B20: return "bhhalf-b20";
        case BrauerTypeId::BhHalf_B2Half: return "bhhalf-b2half";
    }
    return "?";
}

BrauerTypeId type_from_string(const std::string& s, int d) {
    bool deven = d % 2 == 0;
    auto need = [&](bool cond) {
        if (!cond) throw std::invalid_argument("type '" + s + "' does not exist for this d");
    };
    if (s == "bh0-b20") { need(deven); return BrauerTypeId::Bh0_B20; }
    if (s == "bh0-b2half") { need(deven); return BrauerTypeId::Bh0_B2Half; }
    if (s == "bhhalf") { need(deven); return BrauerTypeId::BhHalf; }
    if (s == "bh0" || s == "order-two-point") { need(!deven); return BrauerTypeId::Bh0; }
    if (s == "bhhalf-b20" || s == "even-theta") { need(!deven); return BrauerTypeId::BhHalf_B20; }
    if (s == "bhhalf-b2half" || s == "odd-theta") { need(!deven); return BrauerTypeId::BhHalf_B2Half; }
    throw std::invalid_argument("unknown Brauer type: " + s);
}

BField canonical_bfield(int d, BrauerTypeId id) {
    BField B;
    B.d = d;
    B.coords.assign(22, Rat(0));
    auto set = [&](int idx, Rat v) { B.coords[idx] = v; };
    switch (id) {
        case BrauerTypeId::Bh0:
        case BrauerTypeId::Bh0_B2Half:
            set(2, Rat(1, 2));
            set(3, Rat(1, 2));  // (1/2)(1,1)_2
            break;
        case BrauerTypeId::Bh0_B20:
            set(2, Rat(1, 2));  // (1/2)(1,0)_2
            break;
        case BrauerTypeId::BhHalf_B20:
            set(1, Rat(1, 2));  // (1/2)(0,1)_1
            break;
        case BrauerTypeId::BhHalf:
        case BrauerTypeId::BhHalf_B2Half:
            set(1, Rat(1, 2));
            set(2, Rat(1, 2));
            set(3, Rat(1, 2));  // (1/2)(0,1)_1 + (1/2)(1,1)_2
            break;
    }
    return B;
}

BrauerClass class_from(int d, int a, int lambda_sq_mod4) {
    if (lambda_sq_mod4 != 0 && lambda_sq_mod4 != 2)
        throw std::invalid_argument("lambda^2 mod 4 must be 0 or 2");
    BrauerClass c;
    c.d = d;
    c.a = a;
    c.lambda.assign(20, 0);
    if (lambda_sq_mod4 == 2) {
        c.lambda[0] = 1;
        c.lambda[1] = 1;  // (1,1) in the first U block of Lambda'
    } else if (a == 0) {
        c.lambda[0] = 1;  // (1,0): lambda^2 = 0, class nonzero
    }
    c.is_trivial = false;
    return c;
}

Sublattice gamma_alpha(const BrauerClass& c) {
    if (c.is_trivial) throw std::invalid_argument("gamma_alpha: trivial class");
    Lattice TK = t_K(c.d);
    const Lattice& lp = LPRIME();
    std::vector<int> alpha(21, 0);
    alpha[0] = ((c.a % 2) + 2) % 2;
    for (int j = 0; j < 20; ++j) {
        Int v = 0;
        for (int i = 0; i < 20; ++i) v += c.lambda[i] * lp.gram(i, j);
        alpha[1 + j] = int(((v % 2) + 2) % 2);
    }
    int piv = -1;
    for (int i = 0; i < 21; ++i)
        if (alpha[i]) {
            piv = i;
            break;
        }
    if (piv < 0) throw std::invalid_argument("gamma_alpha: class acts trivially on T_K");
    ZMat basis(21, 21);
    int r = 0;
    for (int i = 0; i < 21; ++i) {
        if (i == piv) continue;
        basis(r, i) = 1;
        if (alpha[i]) basis(r, piv) = -1;
        ++r;
    }
    basis(20, piv) = 2;
    return Sublattice{basis, induced_gram(TK, basis)};
}

BField normalize_bfield(const BField& Bin) {
    const Lattice& k3 = K3();
    const int d = Bin.d;
    // residue of 2B mod 2 determines everything
    ZVec eps(22);
    for (int i = 0; i < 22; ++i) {
        Rat t = Rat(2) * Bin.coords[i];
        if (!is_integer(t)) throw std::invalid_argument("B-field must be half-integral");
        eps[i] = ((num(t) % 2) + 2) % 2;
    }
    ZVec hmod(22, 0);
    hmod[0] = 1;
    hmod[1] = ((d % 2) + 2) % 2;
    bool iszero = true, ish = true;
    for (int i = 0; i < 22; ++i) {
        iszero = iszero && eps[i] == 0;
        ish = ish && eps[i] == hmod[i];
    }
    if (iszero || ish) throw std::invalid_argument("normalize_bfield: trivial class");

    bool w_zero = true;
    for (int i = 2; i < 22; ++i) w_zero = w_zero && eps[i] == 0;
    if (eps[0] == 1 && w_zero) {
        // shift by (1/2) h to clear the (1, *)_1 residue; the rest part stays zero
        eps[0] = 0;
        eps[1] = (eps[1] + d) % 2;
    }

    QVec B(22);
    for (int i = 0; i < 22; ++i) B[i] = Rat(eps[i], 2);
    ZVec h = k3_h(d);

    // exact Bh fix with t = (0,1)_1, th = 1
    {
        Rat bh = inner(k3, B, to_q(h));
        Int bh2 = num(Rat(2) * bh);
        Int k = floor_div(bh2, 2);
        B[1] -= Rat(k);  // subtract k * t
    }

    // exact B^2 fix with moves orthogonal to h (inside U_2 + U_3 + E8 + E8)
    Rat b2 = inner(k3, B, B);
    Rat tgt = mod_reduce(b2, Rat(1));
    Rat Vr = b2 - tgt;
    if (!is_integer(Vr)) throw std::logic_error("normalize_bfield: non-integral defect");
    Int V = num(Vr);
    if (V != 0) {
        // w = rest-part of 2B, entries in {0,1}
        ZVec w(20);
        for (int i = 0; i < 20; ++i) w[i] = eps[2 + i];
        const Lattice& lp = LPRIME();
        QVec c22(22, Rat(0));
        // hot U coordinate of w?
        int hot_u = -1;
        for (int i = 0; i < 4; ++i)
            if (w[i] == 1) {
                hot_u = i;
                break;
            }
        if (hot_u >= 0) {
            int partner = hot_u ^ 1;  // other coord of the same hyperbolic block
            c22[2 + partner] = Rat(V);
        } else {
            int hot = -1;
            for (int i = 4; i < 20; ++i)
                if (w[i] == 1) {
                    hot = i;
                    break;
                }
            if (hot < 0) throw std::logic_error("normalize_bfield: V != 0 with w = 0");
            // e' = G^-1 e_hot lives in the same E8 block; w.e' = 1
            QMat Ginv = inverse_q(to_q(lp.gram));
            QVec ep(20);
            for (int r2 = 0; r2 < 20; ++r2) ep[r2] = Ginv(r2, hot);
            Rat mu2 = inner(lp, ep, ep);
            Int mu = num(mu2);
            QVec c20(20, Rat(0));
            if (V % 2 == 0) {
                c20[0] = 1;
                c20[1] = Rat(-V / 2);  // a u + b u* in the first U block of Lambda'
            } else {
                for (int r2 = 0; r2 < 20; ++r2) c20[r2] = ep[r2];
                c20[0] += 1;
                c20[1] += Rat((1 - mu - V) / 2);
            }
            for (int r2 = 0; r2 < 20; ++r2) c22[2 + r2] = c20[r2];
        }
        for (int i = 0; i < 22; ++i) {
            if (!is_integer(c22[i])) throw std::logic_error("normalize_bfield: non-integral move");
            B[i] -= c22[i];
        }
    }

    // primitive-part extraction (only fires when Bh = B^2 = 0)
    {
        Int g = 0;
        for (int i = 0; i < 22; ++i) g = gcd_int(g, num(Rat(2) * B[i]));
        g = abs(g);
        if (g > 1) {
            if (g % 2 == 0) throw std::logic_error("normalize_bfield: even content");
            for (auto& x : B) x /= Rat(g);
        }
    }

    BField out;
    out.d = d;
    out.coords = B;
    // postconditions
    Rat bh = inner(k3, out.coords, to_q(h));
    Rat bb = inner(k3, out.coords, out.coords);
    if (!(bh == 0 || bh == Rat(1, 2)) || !(bb == 0 || bb == Rat(1, 2)))
        throw std::logic_error("normalize_bfield: postcondition failed");
    return out;
}

ClassCounts count_classes() {
    const Lattice& lp = LPRIME();
    long long g[20][20];
    for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 20; ++j) g[i][j] = lp.gram(i, j).convert_to<long long>();
    long long s[20] = {0};
    unsigned bits = 0;
    long long q = 0;
    long long n0 = 0, n2 = 0;
    auto tally = [&] {
        long long m = ((q % 4) + 4) % 4;
        if (m == 0)
            ++n0;
        else
            ++n2;
    };
    tally();  // lambda = 0
    const unsigned N = 1u << 20;
    for (unsigned k = 1; k < N; ++k) {
        int i = std::countr_zero(k);  // Gray code flip position
        long long sgn = (bits >> i) & 1 ? -1 : 1;
        q += sgn * 2 * s[i] + g[i][i];
        for (int j = 0; j < 20; ++j) s[j] += sgn * g[i][j];
        bits ^= 1u << i;
        tally();
    }
    ClassCounts c;
    c.bh0_l0 = n0 - 1;  // drop the trivial class
    c.bh0_l2 = n2;
    c.bhhalf_l0 = n0;
    c.bhhalf_l2 = n2;
    return c;
}

}  // namespace hk
