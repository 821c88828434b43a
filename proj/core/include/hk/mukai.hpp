#pragma once

#include "hk/brauer.hpp"

#include <array>

namespace hk {

// Element (r, lam, s) of the rational Mukai lattice of a K3 surface;
// <(r,l,s),(r',l',s')> = l.l' - r s' - r' s.
struct MukaiElement {
    Rat r;
    QVec lam;  // 22 K3 coords
    Rat s;

    MukaiElement() : r(0), lam(22, Rat(0)), s(0) {}
    MukaiElement(Rat rr, QVec l, Rat ss) : r(rr), lam(std::move(l)), s(ss) {}
    bool operator==(const MukaiElement&) const = default;
};

Rat mukai_pairing(const MukaiElement& x, const MukaiElement& y);

// cup product on truncated cohomology: (r,l,s)(r',l',s') = (rr', rl'+r'l, rs'+r's+l.l')
MukaiElement mukai_mul(const MukaiElement& x, const MukaiElement& y);

MukaiElement exp_B(const BField& B);  // (1, B, B^2/2)

// integral Mukai element as a 24-vector (r, k3..., s) of the MukaiK3 lattice
ZVec to_mukai24(const MukaiElement& x);
MukaiElement from_mukai24(const ZVec& v);

struct TwistedNS {
    int d = 1;
    BField B;
    std::array<MukaiElement, 3> basis;
    QMat gram;
};

// basis {(2,2B,0),(0,h,0),(0,0,1)} for nonzero alpha, {(1,0,0),(0,h,0),(0,0,1)}
// for B = 0.
TwistedNS build_ns(int d, const BField& B);

bool vperp_member(const MukaiElement& v, const MukaiElement& x);

// c2(A) = <vU,vU> + 8 and K_E^3 = 2 c2(A); vU must have rank two.
std::pair<Int, Int> conic_bundle_c2(const MukaiElement& vU);

struct Minus2Result {
    bool exists = false;
    std::optional<MukaiElement> witness;          // v with v^2 = -2
    int k = 0;
    Int s = 0;                                    // ch = (2, 2B + k h, s)
    std::vector<std::pair<int, int>> residues;    // (k mod 2, v^2 mod 4) table when impossible
};

// Existence of a locally free rank-two twisted sheaf with v^2 = -2 for the
// given class type, via v^2 = -4s - 8 + 4B^2 + 4kBh + k^2 h^2.
Minus2Result exists_minus2_sheaf(int d, BrauerTypeId type);

// Line-bundle twist normalization to (2, 2B, 1); requires 4Bh + h^2 = 2 mod 4
// and B^2 = 1/2.
MukaiElement normalize_u(int d, const BField& B, const MukaiElement& ch);

// (2, h, (d+1)/2) for odd d; asserts v^2 = -2.
MukaiElement mukai_bundle_vector(int d);

}  // namespace hk
