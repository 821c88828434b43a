#pragma once

#include "hk/numeric.hpp"

#include <cassert>
#include <initializer_list>
#include <vector>

namespace hk {

template <class T>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
    Mat(std::initializer_list<std::initializer_list<T>> init) {
        rows = int(init.size());
        cols = rows ? int(init.begin()->size()) : 0;
        a.reserve(size_t(rows) * cols);
        for (auto& row : init) {
            assert(int(row.size()) == cols);
            for (auto& x : row) a.push_back(x);
        }
    }

    T& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
    const T& operator()(int i, int j) const { return a[size_t(i) * cols + j]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    Mat transpose() const {
        Mat m(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    std::vector<T> row(int i) const {
        return std::vector<T>(a.begin() + size_t(i) * cols, a.begin() + size_t(i + 1) * cols);
    }

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

template <class T>
Mat<T> operator*(const Mat<T>& A, const Mat<T>& B) {
    assert(A.cols == B.rows);
    Mat<T> C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const T& v = A(i, k);
            if (v == T(0)) continue;
            for (int j = 0; j < B.cols; ++j) C(i, j) += v * B(k, j);
        }
    return C;
}

template <class T>
std::vector<T> operator*(const Mat<T>& A, const std::vector<T>& x) {
    assert(int(x.size()) == A.cols);
    std::vector<T> y(A.rows, T(0));
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) y[i] += A(i, j) * x[j];
    return y;
}

using ZMat = Mat<Int>;
using QMat = Mat<Rat>;
using ZVec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline QVec to_q(const ZVec& v) {
    QVec q(v.size());
    for (size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
    return q;
}

inline QMat to_q(const ZMat& m) {
    QMat q(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) q.a[i] = Rat(m.a[i]);
    return q;
}

// vector arithmetic helpers
template <class T>
std::vector<T> vadd(const std::vector<T>& x, const std::vector<T>& y) {
    assert(x.size() == y.size());
    std::vector<T> r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}

template <class T>
std::vector<T> vsub(const std::vector<T>& x, const std::vector<T>& y) {
    assert(x.size() == y.size());
    std::vector<T> r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
}

template <class T, class S>
std::vector<T> vscale(const S& c, const std::vector<T>& x) {
    std::vector<T> r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = T(c) * x[i];
    return r;
}

}  // namespace hk
