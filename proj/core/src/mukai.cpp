#include "hk/mukai.hpp"

#include <stdexcept>

namespace hk {

namespace {
const Lattice& K3() {
    static Lattice L = lat_K3();
    return L;
}
}  // namespace

Rat mukai_pairing(const MukaiElement& x, const MukaiElement& y) {
    return inner(K3(), x.lam, y.lam) - x.r * y.s - y.r * x.s;
}

MukaiElement mukai_mul(const MukaiElement& x, const MukaiElement& y) {
    MukaiElement z;
    z.r = x.r * y.r;
    for (int i = 0; i < 22; ++i) z.lam[i] = x.r * y.lam[i] + y.r * x.lam[i];
    z.s = x.r * y.s + y.r * x.s + inner(K3(), x.lam, y.lam);
    return z;
}

MukaiElement exp_B(const BField& B) {
    MukaiElement e;
    e.r = 1;
    e.lam = B.coords;
    e.s = inner(K3(), B.coords, B.coords) / Rat(2);
    return e;
}

ZVec to_mukai24(const MukaiElement& x) {
    ZVec v(24);
    auto cast = [](const Rat& q) {
        if (!is_integer(q)) throw std::invalid_argument("Mukai element not integral");
        return num(q);
    };
    v[0] = cast(x.r);
    for (int i = 0; i < 22; ++i) v[1 + i] = cast(x.lam[i]);
    v[23] = cast(x.s);
    return v;
}

MukaiElement from_mukai24(const ZVec& v) {
    MukaiElement x;
    x.r = Rat(v[0]);
    for (int i = 0; i < 22; ++i) x.lam[i] = Rat(v[1 + i]);
    x.s = Rat(v[23]);
    return x;
}

TwistedNS build_ns(int d, const BField& B) {
    TwistedNS ns;
    ns.d = d;
    ns.B = B;
    bool zero = true;
    for (auto& c : B.coords) zero = zero && c == 0;
    MukaiElement v0;
    if (zero) {
        v0.r = 1;
    } else {
        v0.r = 2;
        for (int i = 0; i < 22; ++i) v0.lam[i] = Rat(2) * B.coords[i];
    }
    MukaiElement H(Rat(0), to_q(k3_h(d)), Rat(0));
    MukaiElement pt;
    pt.s = 1;
    ns.basis = {v0, H, pt};
    ns.gram = QMat(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) ns.gram(i, j) = mukai_pairing(ns.basis[i], ns.basis[j]);
    return ns;
}

bool vperp_member(const MukaiElement& v, const MukaiElement& x) {
    return mukai_pairing(v, x) == 0;
}

std::pair<Int, Int> conic_bundle_c2(const MukaiElement& vU) {
    if (vU.r != 2) throw std::invalid_argument("conic_bundle_c2: rank must be two");
    Rat sq = mukai_pairing(vU, vU);
    if (!is_integer(sq)) throw std::invalid_argument("conic_bundle_c2: non-integral square");
    Int c2 = num(sq) + 8;
    return {c2, 2 * c2};
}

Minus2Result exists_minus2_sheaf(int d, BrauerTypeId type) {
    BField B = canonical_bfield(d, type);
    Rat bh = inner(K3(), B.coords, to_q(k3_h(d)));
    Rat b2 = bfield_b2(B);
    Int h2 = 2 * d;
    Minus2Result res;
    Rat crit = Rat(4) * bh + Rat(h2);
    bool b2_integral = is_integer(b2);
    if (is_integer(crit) && num(crit) % 4 == 0 && b2_integral) {
        // v^2 = -4s - 8 + 4B^2 + 4kBh + k^2 h^2 lies in 4Z for every k, s
        res.exists = false;
        for (int k = 0; k <= 1; ++k) {
            Rat v2 = Rat(-8) + Rat(4) * b2 + Rat(4 * k) * bh + Rat(k * k) * Rat(h2);
            Int m = ((num(v2) % 4) + 4) % 4;
            res.residues.push_back({k, int(m)});
            if (m != 0) throw std::logic_error("exists_minus2_sheaf: residue not 0 mod 4");
        }
        return res;
    }
    // choose k = 0 (B^2 = 1/2 in all canonical forms here): -2 = -4s - 8 + 4B^2
    Rat s_r = (Rat(4) * b2 - Rat(6)) / Rat(4);
    if (!is_integer(s_r)) throw std::logic_error("exists_minus2_sheaf: non-integral s");
    res.exists = true;
    res.k = 0;
    res.s = num(s_r);
    MukaiElement v;
    v.r = 2;
    for (int i = 0; i < 22; ++i) v.lam[i] = Rat(2) * B.coords[i];
    v.s = Rat(res.s) + 2;
    if (mukai_pairing(v, v) != Rat(-2)) throw std::logic_error("exists_minus2_sheaf: v^2 != -2");
    res.witness = v;
    return res;
}

MukaiElement normalize_u(int d, const BField& B, const MukaiElement& ch) {
    Rat bh = inner(K3(), B.coords, to_q(k3_h(d)));
    Rat b2 = bfield_b2(B);
    Rat crit = Rat(4) * bh + Rat(2 * d);
    if (!is_integer(crit) || num(crit) % 4 != 2 || b2 != Rat(1, 2))
        throw std::invalid_argument("normalize_u: needs 4Bh + h^2 = 2 mod 4 and B^2 = 1/2");
    if (ch.r != 2) throw std::invalid_argument("normalize_u: rank must be two");
    // ch = (2, 2B + k h, s): recover k from the h-component
    ZVec h = k3_h(d);
    QVec diff(22);
    for (int i = 0; i < 22; ++i) diff[i] = ch.lam[i] - Rat(2) * B.coords[i];
    // diff must be k * h
    Rat k;
    bool found = false;
    for (int i = 0; i < 22 && !found; ++i)
        if (h[i] != 0) {
            k = diff[i] / Rat(h[i]);
            found = true;
        }
    for (int i = 0; i < 22; ++i)
        if (diff[i] != k * Rat(h[i]))
            throw std::invalid_argument("normalize_u: ch is not of the form (2, 2B + k h, s)");
    if (!is_integer(k) || num(k) % 2 != 0)
        throw std::invalid_argument("normalize_u: the twist k must be an even integer");
    Int m = num(k) / 2;
    // twist by the line bundle with class -m h: ch(L) = (1, -m h, m^2 h^2 / 2)
    MukaiElement L;
    L.r = 1;
    for (int i = 0; i < 22; ++i) L.lam[i] = Rat(-m) * Rat(h[i]);
    L.s = Rat(m * m) * Rat(2 * d) / Rat(2);
    MukaiElement twisted = mukai_mul(ch, L);
    // Mukai vector: v = ch * sqrt(td) = (r, lam, s + r)
    MukaiElement v = twisted;
    v.s += twisted.r;
    MukaiElement expect;
    expect.r = 2;
    for (int i = 0; i < 22; ++i) expect.lam[i] = Rat(2) * B.coords[i];
    expect.s = 1;
    if (mukai_pairing(v, v) != Rat(-2) || !(v == expect))
        throw std::invalid_argument("normalize_u: normalization did not reach (2, 2B, 1)");
    return v;
}

MukaiElement mukai_bundle_vector(int d) {
    if (d % 2 == 0) throw std::invalid_argument("mukai_bundle_vector: d must be odd");
    MukaiElement v;
    v.r = 2;
    v.lam = to_q(k3_h(d));
    v.s = Rat((d + 1) / 2);
    if (mukai_pairing(v, v) != Rat(-2)) throw std::logic_error("mukai_bundle_vector: v^2 != -2");
    return v;
}

}  // namespace hk
