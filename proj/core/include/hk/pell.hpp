#pragma once

#include "hk/mat.hpp"
#include "hk/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hk {

// Solutions of x^2 - D y^2 = N. In the cone conventions used downstream the
// roles are (a, b) = (y, x), i.e. b^2 - D a^2 = N.
struct PellSolution {
    Int x, y;
    bool fundamental = false;
};

struct ParityReq {
    enum P { Any, Odd, Even };
    P x = Any, y = Any;
    bool ok(const Int& xx, const Int& yy) const {
        auto m = [](const Int& v, P p) {
            if (p == Any) return true;
            return (v % 2 != 0) == (p == Odd);
        };
        return m(xx, x) && m(yy, y);
    }
};

// Fundamental solution of x^2 - D y^2 = 1 via the continued fraction of sqrt(D).
// D > 0 and not a perfect square.
std::pair<Int, Int> pell_fundamental(const Int& D);

// All solutions with 0 < y <= bound (plus, for N=1, y=0 is never reported).
// For N = +-1 the solutions come from the fundamental one by the standard
// recurrence; for other N a brute-force scan over y is used.
std::vector<PellSolution> solve_pell(const Int& D, const Int& N, const ParityReq& req,
                                     const Int& bound);

// Brute-force oracle: scan 0 < y <= bound directly.
std::vector<PellSolution> solve_pell_brute(const Int& D, const Int& N, const ParityReq& req,
                                           const Int& bound);

struct Certificate {
    std::string kind;     // "square-factorization" | "modular"
    Int modulus = 0;      // for modular certificates
    std::string detail;
    bool valid = false;
};

// Nonexistence certificate for x^2 - D y^2 = N under the parity constraints.
//   square-factorization: D a perfect square c^2, N = 1; (x-cy)(x+cy)=1 forces
//     y = 0, contradicting a parity constraint on y.
//   modular: viable residues of x^2 - D y^2 = N (mod m) are empty, where
//     residue pairs with x = y = 0 (mod p), p | m, p^2 not dividing N are
//     discarded (they cannot lift). Throws if the kind does not apply or if
//     solutions exist.
Certificate no_solution_certificate(const Int& D, const Int& N, const ParityReq& req,
                                    const std::string& kind, const Int& modulus = 0);

struct Hilb2Decision {
    bool birational = false;
    std::optional<PellSolution> witness;   // (x,y) with x^2 - d y^2 = 1
    std::optional<Certificate> certificate;
    std::string note;
};

// column "8d8d_b": d = 0 mod 8, needs b^2 - d a^2 = 1 with a, b odd;
// column "2d2d_2": d = 3 mod 4, needs b^2 - d a^2 = 1 with b even.
Hilb2Decision birational_to_hilb2(const std::string& column, int d);

struct BossRays {
    ZVec ray1, ray2;           // H and 3H - 8 xi in the (H, xi) basis
    ZVec contracted1, contracted2;  // xi and H - 3 xi
    PellSolution min_solution;      // of a^2 - 8 b^2 = 1
    Certificate no_flops;           // a^2 - 32 b^2 = 5 insolvable
    Report checks;
};
BossRays nef_rays_boss();

}  // namespace hk
