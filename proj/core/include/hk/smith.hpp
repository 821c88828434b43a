#pragma once

#include "hk/mat.hpp"

#include <optional>

namespace hk {

// U * M * V = D with U, V unimodular and D diagonal with d1 | d2 | ... (non-negative).
struct SnfResult {
    ZMat U, D, V;
    int rank = 0;
};

SnfResult smith_normal_form(ZMat M);

// Saturated basis (as rows) of { x : x * A = 0 }.
ZMat left_kernel(const ZMat& A);

// Saturation (primitive closure) of the row span of `rows` inside Z^n.
ZMat saturation(const ZMat& rows);

// Exact determinant (square matrices).
Int det_z(const ZMat& M);
Rat det_q(const QMat& M);

QMat inverse_q(const QMat& M);       // throws on singular
ZMat inverse_unimodular(const ZMat& M);  // M must have det +-1

// Solve x * M = b over the integers; nullopt if unsolvable.
std::optional<ZVec> solve_left(const ZMat& M, const ZVec& b);

// Index of the row lattice of `rows` (full column rank k <= n assumed to equal cols)
// inside Z^cols; infinite (returns 0) if rank < cols.
Int row_lattice_index(const ZMat& rows);

}  // namespace hk
