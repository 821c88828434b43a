#pragma once

#include "hk/smith.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hk {

// An even integral lattice given by its Gram matrix on a fixed basis.
//
// Basis conventions used throughout (hyperbolic-plane blocks first, then
// E8(-1) blocks, then rank-one blocks):
//   K3            U+U+U+E8(-1)+E8(-1)                rank 22
//   Lambda_K3_2   U+U+U+E8(-1)+E8(-1)+<-2>           rank 23, delta = last coord
//   Lambda_prime  U+U+E8(-1)+E8(-1)                  rank 20
//   MukaiK3       triples (r, k3, s): coord 0 = r, 1..22 = K3, 23 = s,
//                 with <(r,l,s),(r',l',s')> = l.l' - r s' - r' s
// The pair (a,b)_i of the i-th hyperbolic block sits at coords (2i-2, 2i-1).
struct Lattice {
    ZMat gram;
    int rank() const { return gram.rows; }
};

Lattice lat_U();
Lattice lat_E8_minus();
Lattice lat_diag(const Int& n);
Lattice lat_K3();
Lattice lat_Lambda_K3_2();
Lattice lat_Lambda_prime();
Lattice lat_MukaiK3();
Lattice direct_sum(const std::vector<Lattice>& parts);

// names: U | E8_minus | diag | K3 | Lambda_K3_2 | MukaiK3 | Lambda_prime
// (diag takes the even integer parameter n).
Lattice make_standard(const std::string& name, const Int& param = 0);

// (a,b) placed in hyperbolic block `block` (1-based) of an n-dim lattice.
ZVec uvec(int n, int block, const Int& a, const Int& b);

Rat inner(const Lattice& L, const QVec& x, const QVec& y);
Int inner_z(const Lattice& L, const ZVec& x, const ZVec& y);

// Invariant factors > 1 of L*/L together with the discriminant quadratic form
// on dual-basis lifts. q values live in Q/2Z reduced to [0,2); the bilinear
// form values live in Q/Z reduced to [0,1).
struct DiscriminantGroup {
    std::vector<Int> cyclic_orders;
    std::vector<QVec> generators;  // lifts in L* (coords of the ambient basis)
    QVec q_values;                 // q(generator_i) in [0,2)
    QMat bilinear;                 // b(g_i, g_j) in [0,1)
    Int order() const {
        Int o = 1;
        for (auto& d : cyclic_orders) o *= d;
        return o;
    }
};

DiscriminantGroup discriminant_group(const Lattice& L);

// gcd of the pairings of x with the ambient basis; x integral nonzero.
Int divisibility(const Lattice& L, const ZVec& x);

// gcd of the pairings of x with the rows of `basis` (x in ambient coords).
Int divisibility_in(const Lattice& ambient, const ZMat& basis, const ZVec& x);

struct Sublattice {
    ZMat basis;       // rows, ambient coords
    Lattice induced;  // Gram of the rows
};

// Saturated basis of { x in L : <x, s> = 0 for all s in S }.
Sublattice orthogonal_complement(const Lattice& L, const std::vector<ZVec>& S);

// Primitive closure of the span of `gens` inside L.
Sublattice saturate(const Lattice& L, const std::vector<ZVec>& gens);

Lattice induced_gram(const Lattice& L, const ZMat& basis);

// true iff det S = +-1 and S * M1.gram * S^T = M2.gram.
bool verify_isometry(const ZMat& S, const Lattice& M1, const Lattice& M2);

// Bounded box search for u, v with u^2 = v^2 = 0, u.v = 1. Absence within the
// bound is not a proof of nonexistence. bound <= 0 selects the default
// 2 * max|gram entry| * rank.
std::optional<std::pair<ZVec, ZVec>> find_hyperbolic_pair(const Lattice& L, Int bound = 0,
                                                          long long max_points = 20'000'000);

bool is_member(const ZMat& basis, const ZVec& x, ZVec* coords = nullptr);

}  // namespace hk
