#include "hk/smith.hpp"

#include <stdexcept>

namespace hk {

namespace {

void swap_rows(ZMat& M, ZMat& U, int i, int j) {
    for (int c = 0; c < M.cols; ++c) std::swap(M(i, c), M(j, c));
    for (int c = 0; c < U.cols; ++c) std::swap(U(i, c), U(j, c));
}

void swap_cols(ZMat& M, ZMat& V, int i, int j) {
    for (int r = 0; r < M.rows; ++r) std::swap(M(r, i), M(r, j));
    for (int r = 0; r < V.rows; ++r) std::swap(V(r, i), V(r, j));
}

void add_row(ZMat& M, ZMat& U, int i, int j, const Int& c) {  // row i += c * row j
    for (int k = 0; k < M.cols; ++k) M(i, k) += c * M(j, k);
    for (int k = 0; k < U.cols; ++k) U(i, k) += c * U(j, k);
}

void add_col(ZMat& M, ZMat& V, int i, int j, const Int& c) {  // col i += c * col j
    for (int k = 0; k < M.rows; ++k) M(k, i) += c * M(k, j);
    for (int k = 0; k < V.rows; ++k) V(k, i) += c * V(k, j);
}

}  // namespace

SnfResult smith_normal_form(ZMat M) {
    const int n = M.rows, m = M.cols;
    ZMat U = ZMat::identity(n), V = ZMat::identity(m);
    int t = 0;
    while (t < std::min(n, m)) {
        // smallest nonzero pivot in the trailing block
        int pi = -1, pj = -1;
        for (int i = t; i < n; ++i)
            for (int j = t; j < m; ++j)
                if (M(i, j) != 0 &&
                    (pi < 0 || abs(M(i, j)) < abs(M(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        if (pi != t) swap_rows(M, U, t, pi);
        if (pj != t) swap_cols(M, V, t, pj);
        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < n; ++i) {
                if (M(i, t) == 0) continue;
                Int q = M(i, t) / M(t, t);
                add_row(M, U, i, t, -q);
                if (M(i, t) != 0) {
                    swap_rows(M, U, t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < m; ++j) {
                if (M(t, j) == 0) continue;
                Int q = M(t, j) / M(t, t);
                add_col(M, V, j, t, -q);
                if (M(t, j) != 0) {
                    swap_cols(M, V, t, j);
                    clean = false;
                }
            }
            if (clean) break;
        }
        // pivot must divide the remaining block
        bool restart = false;
        for (int i = t + 1; i < n && !restart; ++i)
            for (int j = t + 1; j < m && !restart; ++j)
                if (M(i, j) % M(t, t) != 0) {
                    add_row(M, U, t, i, 1);
                    restart = true;
                }
        if (restart) continue;
        if (M(t, t) < 0) {
            for (int k = 0; k < m; ++k) M(t, k) = -M(t, k);
            for (int k = 0; k < n; ++k) U(t, k) = -U(t, k);
        }
        ++t;
    }
    SnfResult r{std::move(U), std::move(M), std::move(V), t};
    return r;
}

ZMat left_kernel(const ZMat& A) {
    SnfResult s = smith_normal_form(A);
    // rows of U beyond the rank form a saturated basis of the left kernel
    ZMat K(A.rows - s.rank, A.rows);
    for (int i = s.rank; i < A.rows; ++i)
        for (int j = 0; j < A.rows; ++j) K(i - s.rank, j) = s.U(i, j);
    return K;
}

ZMat saturation(const ZMat& rows) {
    SnfResult s = smith_normal_form(rows);
    ZMat Vinv = inverse_unimodular(s.V);
    ZMat out(s.rank, rows.cols);
    for (int i = 0; i < s.rank; ++i)
        for (int j = 0; j < rows.cols; ++j) out(i, j) = Vinv(i, j);
    return out;
}

Rat det_q(const QMat& Min) {
    if (Min.rows != Min.cols) throw std::invalid_argument("det of non-square");
    QMat M = Min;
    const int n = M.rows;
    Rat det = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (M(r, c) != 0) {
                p = r;
                break;
            }
        if (p < 0) return Rat(0);
        if (p != c) {
            for (int k = 0; k < n; ++k) std::swap(M(c, k), M(p, k));
            det = -det;
        }
        det *= M(c, c);
        Rat inv = Rat(1) / M(c, c);
        for (int k = c; k < n; ++k) M(c, k) *= inv;
        for (int r = c + 1; r < n; ++r) {
            if (M(r, c) == 0) continue;
            Rat f = M(r, c);
            for (int k = c; k < n; ++k) M(r, k) -= f * M(c, k);
        }
    }
    return det;
}

Int det_z(const ZMat& M) {
    Rat d = det_q(to_q(M));
    return num(d);
}

QMat inverse_q(const QMat& Min) {
    if (Min.rows != Min.cols) throw std::invalid_argument("inverse of non-square");
    const int n = Min.rows;
    QMat M = Min, I = QMat::identity(n);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (M(r, c) != 0) {
                p = r;
                break;
            }
        if (p < 0) throw std::domain_error("singular matrix");
        if (p != c)
            for (int k = 0; k < n; ++k) {
                std::swap(M(c, k), M(p, k));
                std::swap(I(c, k), I(p, k));
            }
        Rat inv = Rat(1) / M(c, c);
        for (int k = 0; k < n; ++k) {
            M(c, k) *= inv;
            I(c, k) *= inv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || M(r, c) == 0) continue;
            Rat f = M(r, c);
            for (int k = 0; k < n; ++k) {
                M(r, k) -= f * M(c, k);
                I(r, k) -= f * I(c, k);
            }
        }
    }
    return I;
}

ZMat inverse_unimodular(const ZMat& M) {
    QMat inv = inverse_q(to_q(M));
    ZMat out(M.rows, M.cols);
    for (size_t i = 0; i < inv.a.size(); ++i) {
        if (!is_integer(inv.a[i])) throw std::domain_error("matrix not unimodular");
        out.a[i] = num(inv.a[i]);
    }
    return out;
}

std::optional<ZVec> solve_left(const ZMat& M, const ZVec& b) {
    SnfResult s = smith_normal_form(M);
    // x M = b  <=>  (x U^-1) D = b V ; y_i = (bV)_i / d_i
    ZVec bv(M.cols, 0);
    for (int j = 0; j < M.cols; ++j)
        for (int i = 0; i < M.cols; ++i) bv[j] += b[i] * s.V(i, j);
    ZVec y(M.rows, 0);
    for (int i = 0; i < M.cols; ++i) {
        Int d = (i < std::min(M.rows, M.cols)) ? s.D(i, i) : Int(0);
        if (d == 0) {
            if (bv[i] != 0) return std::nullopt;
        } else {
            if (bv[i] % d != 0) return std::nullopt;
            y[i] = bv[i] / d;
        }
    }
    ZVec x(M.rows, 0);
    for (int j = 0; j < M.rows; ++j)
        for (int i = 0; i < M.rows; ++i) x[j] += y[i] * s.U(i, j);
    return x;
}

Int row_lattice_index(const ZMat& rows) {
    SnfResult s = smith_normal_form(rows);
    if (s.rank < rows.cols) return 0;
    Int idx = 1;
    for (int i = 0; i < rows.cols; ++i) idx *= s.D(i, i);
    return idx;
}

}  // namespace hk
