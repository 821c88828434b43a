#pragma once

#include "hk/lattice.hpp"
#include "hk/report.hpp"

#include <optional>
#include <string>

namespace hk {

// Order-two Brauer class on a degree-2d K3 surface, written as
// alpha = (a, lambda) on T_K = <v> + Lambda', v = (1,-d)_1, h = (1,d)_1.
// lambda is an integral lift in Lambda' (20 coords); only lambda mod 2 matters.
struct BrauerClass {
    int d = 1;
    int a = 0;
    ZVec lambda;  // 20 coords
    bool is_trivial = false;
};

// Half-integral vector in the 22-dim K3 lattice.
struct BField {
    int d = 1;
    QVec coords;  // 22 coords, 2*coords integral
};

enum class BrauerTypeId {
    // d even
    Bh0_B20,
    Bh0_B2Half,
    BhHalf,
    // d odd
    Bh0,
    BhHalf_B20,
    BhHalf_B2Half,
};

struct BrauerTypeInfo {
    BrauerTypeId id;
    Rat bh;                    // 0 or 1/2
    std::optional<Rat> b2;     // invariant value when defined
    int lambda_sq_mod4 = 0;
    std::string label;         // neutral name
    std::string classical;     // d=1 vocabulary where it applies
};

ZVec k3_h(int d);   // h = (1,d)_1 as a 22-vector
ZVec k3_v(int d);   // v = (1,-d)_1
Lattice t_K(int d);  // <-2d> + Lambda', coord 0 = v

BField bfield_of_class(const BrauerClass& c);

// Bh mod Z reduced into {0, 1/2}.
Rat invariant_Bh(const BField& B);
Rat bfield_b2(const BField& B);  // exact value of B^2

// B^2 mod Z when 4Bh + h^2 = 0 mod 4; nullopt when it is not an invariant.
std::optional<Rat> invariant_B2(const BField& B);

// Canonical representative of the class of B: 2B' primitive, B'h and B'^2 in
// {0, 1/2} exactly, B' - B in H^2(Z) + (1/2) Z h. Deterministic in the class,
// hence idempotent. Throws on the trivial class.
BField normalize_bfield(const BField& B);

BrauerClass class_of_bfield(const BField& B);
BrauerTypeInfo brauer_type(const BrauerClass& c);
BrauerTypeId type_from_string(const std::string& s, int d);
std::string type_label(BrauerTypeId id);

// Canonical B-field with the (Bh, B^2) normal form of the given type.
BField canonical_bfield(int d, BrauerTypeId id);
BrauerClass class_from(int d, int a, int lambda_sq_mod4);

// Index-two sublattice ker(alpha) of T_K, with basis in T_K coordinates.
Sublattice gamma_alpha(const BrauerClass& c);

struct ClassCounts {
    long long bh0_l0 = 0;     // a=0, lambda^2 = 0 mod 4 (trivial class excluded)
    long long bh0_l2 = 0;     // a=0, lambda^2 = 2 mod 4
    long long bhhalf_l0 = 0;  // a=1, lambda^2 = 0 mod 4
    long long bhhalf_l2 = 0;  // a=1, lambda^2 = 2 mod 4
    long long total() const { return bh0_l0 + bh0_l2 + bhhalf_l0 + bhhalf_l2; }
};

// Brute-force enumeration of the 2^21 - 1 nonzero pairs (a, lambda mod 2).
ClassCounts count_classes();

}  // namespace hk
