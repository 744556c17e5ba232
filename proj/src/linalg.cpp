#include "fundalc/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace fundalc {

std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int i = row; i < m.rows; ++i)
            if (!m.at(i, col).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
        Rat inv = Rat(1) / m.at(row, col);
        for (int j = 0; j < m.cols; ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Rat f = m.at(i, col);
            for (int j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::optional<QVec> solve_linear(const QMat& A, const QVec& b) {
    QMat aug(A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols) = b[i];
    }
    std::vector<int> pivots = rref(aug);
    for (size_t k = 0; k < pivots.size(); ++k)
        if (pivots[k] == A.cols) return std::nullopt;  // row [0 ... 0 | 1]
    QVec x(A.cols, Rat(0));
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(static_cast<int>(k), A.cols);
    return x;
}

std::vector<QVec> kernel_basis(const QMat& A) {
    QMat m = A;
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(A.cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<QVec> basis;
    for (int free = 0; free < A.cols; ++free) {
        if (is_pivot[free]) continue;
        QVec v(A.cols, Rat(0));
        v[free] = Rat(1);
        for (size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -m.at(static_cast<int>(k), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

IMat unimodular_inverse(const IMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("unimodular_inverse: not square");
    int n = m.rows;
    QMat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = Rat(m.at(i, j));
        aug.at(i, n + i) = Rat(1);
    }
    std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != n)
        throw std::invalid_argument("unimodular_inverse: singular matrix");
    IMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat v = aug.at(i, n + j);
            if (!v.is_integer())
                throw std::invalid_argument("unimodular_inverse: inverse not integral");
            inv.at(i, j) = v.num;
        }
    return inv;
}

namespace {

// One Fourier-Motzkin elimination step on variable `var`.
std::vector<LinearConstraint> eliminate_var(const std::vector<LinearConstraint>& cons, int var) {
    std::vector<LinearConstraint> lower, upper, rest;
    for (const auto& c : cons) {
        int s = c.coeff[var].sign();
        if (s == 0) rest.push_back(c);
        else if (s > 0) upper.push_back(c);   // x <= (rhs - rest)/coeff
        else lower.push_back(c);              // x >= ...
    }
    for (const auto& lo : lower)
        for (const auto& up : upper) {
            // Combine lo (coeff<0) and up (coeff>0) to drop `var`.
            Rat a = -lo.coeff[var];
            Rat b = up.coeff[var];
            LinearConstraint c;
            c.coeff.assign(lo.coeff.size(), Rat(0));
            for (size_t j = 0; j < c.coeff.size(); ++j)
                c.coeff[j] = lo.coeff[j] * b + up.coeff[j] * a;
            c.coeff[var] = Rat(0);
            c.rhs = lo.rhs * b + up.rhs * a;
            c.strict = lo.strict || up.strict;
            rest.push_back(std::move(c));
        }
    return rest;
}

bool constraint_trivial(const LinearConstraint& c, int dim) {
    for (int j = 0; j < dim; ++j)
        if (!c.coeff[j].is_zero()) return false;
    return true;
}

}  // namespace

std::optional<QVec> feasible_point(const std::vector<LinearConstraint>& cons, int dim) {
    // Eliminate variables back to front, keeping each stage for back-substitution.
    std::vector<std::vector<LinearConstraint>> stages;
    stages.push_back(cons);
    for (int var = dim - 1; var >= 1; --var)
        stages.push_back(eliminate_var(stages.back(), var));

    // Constant consistency after full elimination of x_1..x_{dim-1}: the last
    // stage involves only x_0; treat it during back-substitution below, with
    // pure constants checked for every stage.
    for (const auto& stage : stages)
        for (const auto& c : stage)
            if (constraint_trivial(c, dim)) {
                if (c.strict ? !(Rat(0) < c.rhs) : (Rat(0) > c.rhs)) return std::nullopt;
            }

    QVec x(dim, Rat(0));
    for (int var = 0; var < dim; ++var) {
        const auto& stage = stages[static_cast<size_t>(dim - 1 - var)];
        bool has_lo = false, has_up = false, lo_strict = false, up_strict = false;
        Rat lo, up;
        for (const auto& c : stage) {
            int s = c.coeff[var].sign();
            if (s == 0) continue;
            // Evaluate the already-fixed coordinates (> var are still free =
            // 0 in stage terms; stages only involve x_0..x_var).
            Rat rest = c.rhs;
            for (int j = 0; j < var; ++j) rest -= c.coeff[j] * x[j];
            Rat bound = rest / c.coeff[var];
            if (s > 0) {
                if (!has_up || bound < up || (bound == up && c.strict)) { up = bound; up_strict = c.strict; }
                else if (bound == up) up_strict = up_strict || c.strict;
                has_up = true;
            } else {
                if (!has_lo || bound > lo || (bound == lo && c.strict)) { lo = bound; lo_strict = c.strict; }
                else if (bound == lo) lo_strict = lo_strict || c.strict;
                has_lo = true;
            }
        }
        if (has_lo && has_up) {
            if (lo > up) return std::nullopt;
            if (lo == up) {
                if (lo_strict || up_strict) return std::nullopt;
                x[var] = lo;
            } else {
                x[var] = (lo + up) / Rat(2);
            }
        } else if (has_lo) {
            x[var] = lo_strict ? lo + Rat(1) : lo;
        } else if (has_up) {
            x[var] = up_strict ? up - Rat(1) : up;
        }
    }

    // The midpoint back-substitution must satisfy every original constraint,
    // strict ones included; fall back to infeasible if it does not.
    for (const auto& c : cons) {
        Rat v(0);
        for (int j = 0; j < dim; ++j) v += c.coeff[j] * x[j];
        if (c.strict ? !(v < c.rhs) : !(v <= c.rhs)) return std::nullopt;
    }
    return x;
}

}  // namespace fundalc
