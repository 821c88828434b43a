#pragma once

#include "hk/mat.hpp"

#include <array>
#include <vector>

namespace hk {

// Element c0 + c1*H + c2*H^2 of the cohomology ring of the plane truncated
// above degree two, with H^2 the point class of degree one.
struct TruncatedClass {
    Rat c0, c1, c2;

    TruncatedClass(Rat a = 0, Rat b = 0, Rat c = 0) : c0(a), c1(b), c2(c) {}
    bool operator==(const TruncatedClass&) const = default;
};

TruncatedClass trunc_mul(const TruncatedClass& x, const TruncatedClass& y);
TruncatedClass trunc_pow(TruncatedClass x, int n);

// total Chern class of Omega^1 of the plane
inline TruncatedClass omega1_plane() { return TruncatedClass(1, -3, 3); }

struct ChernFactor {
    int twist;            // line-bundle twist t contributing (1 + t*H) per rank-one step
    int power;            // multiplicity of the factor
    TruncatedClass base;  // base class (use 1 for a pure twist factor)
};

TruncatedClass chern_product(const std::vector<ChernFactor>& factors);

// c2(A) = -(9/2) r (r-1) + c2(pi_* A), requiring c1(pi_* A) = -3r.
Int pushforward_c2(const Int& r, const TruncatedClass& c_push);

struct OrderTwoTrace {
    Int c2_E_dual;        // 3 h^2 with h^2 = 2
    Rat c1_correction;    // 3h - [C_K] coefficient, must be 0
    Rat c2_correction;    // [C_K]^2 - i_* c1(L(3)) = 9h^2 - 9h^2
    Int result;
};
OrderTwoTrace order_two_example();

// Full polarization (a,b)(c,e)+(a,c)(b,e)+(a,e)(b,c) of x^4 = 3(x,x)^2.
Rat fujiki_product(const QMat& q, const QVec& a, const QVec& b, const QVec& c, const QVec& e);

struct ConicInvariants {
    Int ke3;                    // = 2 * c2w
    Int c2w;
    Int c2e_fiber_coeff;        // c2(E) = 24 f
    Int c3e;                    // 48
    std::array<int, 6> hodge;   // (h00,h10,h20,h11,h30,h21)
    std::array<int, 7> betti;   // b0..b6
};
ConicInvariants conic_invariants();

}  // namespace hk
