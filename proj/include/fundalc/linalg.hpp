#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fundalc/rational.hpp"

namespace fundalc {

using IVec = std::vector<long long>;
using QVec = std::vector<Rat>;

// Dense row-major integer matrix. Ranks in this library are <= 8, so nothing
// here is tuned for size.
struct IMat {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;

    IMat() = default;
    IMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    long long& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    long long at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static IMat identity(int n) {
        IMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bool is_identity() const {
        if (rows != cols) return false;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (at(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    friend IMat operator*(const IMat& x, const IMat& y) {
        IMat r(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                long long v = x.at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
            }
        return r;
    }

    IVec apply(const IVec& v) const {
        IVec r(rows, 0);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r[i] += at(i, j) * v[j];
        return r;
    }

    QVec apply(const QVec& v) const {
        QVec r(rows, Rat(0));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r[i] += Rat(at(i, j)) * v[j];
        return r;
    }

    // v |-> M^T v; used for the inverse action on characters when M is a
    // lattice isometry (chi . M as a coordinate vector).
    IVec apply_transpose(const IVec& v) const {
        IVec r(cols, 0);
        for (int j = 0; j < cols; ++j)
            for (int i = 0; i < rows; ++i) r[j] += at(i, j) * v[i];
        return r;
    }

    friend bool operator==(const IMat& x, const IMat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    friend bool operator!=(const IMat& x, const IMat& y) { return !(x == y); }
};

inline IVec ivec_add(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IVec ivec_sub(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IVec ivec_neg(const IVec& a) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline bool ivec_is_zero(const IVec& a) {
    for (long long x : a) if (x != 0) return false;
    return true;
}

inline long long dot(const IVec& a, const IVec& b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const IVec& a, const QVec& b) {
    Rat s(0);
    for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

inline Rat dot(const QVec& a, const QVec& b) {
    Rat s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline QVec to_qvec(const IVec& v) {
    QVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

inline QVec qvec_add(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline QVec qvec_sub(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline QVec qvec_scale(const Rat& c, const QVec& a) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool qvec_is_zero(const QVec& a) {
    for (const Rat& x : a) if (!x.is_zero()) return false;
    return true;
}

// Rational dense matrix with just enough elimination machinery for the
// library: particular solutions, kernels, and inverses of unimodular maps.
struct QMat {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> a;

    QMat() = default;
    QMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}

    static QMat from(const IMat& m) {
        QMat q(m.rows, m.cols);
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) q.at(i, j) = Rat(m.at(i, j));
        return q;
    }

    Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    QVec apply(const QVec& v) const {
        QVec r(rows, Rat(0));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r[i] += at(i, j) * v[j];
        return r;
    }
};

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<int> rref(QMat& m);

// One solution of A x = b, if consistent.
std::optional<QVec> solve_linear(const QMat& A, const QVec& b);

// Basis of the null space of A.
std::vector<QVec> kernel_basis(const QMat& A);

// Inverse of an integer matrix with determinant +-1. Throws if the inverse
// is not integral.
IMat unimodular_inverse(const IMat& m);

// Linear constraint a.x (<|<=) c in the Fourier-Motzkin solver.
struct LinearConstraint {
    QVec coeff;
    Rat rhs;
    bool strict = false;
};

// Exact feasibility for small systems; returns a satisfying point when one
// exists. Dimension is the ambient rank (<= 8), so the doubly exponential
// worst case never bites.
std::optional<QVec> feasible_point(const std::vector<LinearConstraint>& cons, int dim);

}  // namespace fundalc
