#include "fundalc/smith.hpp"

#include <algorithm>
#include <cstdlib>

namespace fundalc {

namespace {

void swap_rows(IMat& a, IMat& u, int i, int j) {
    for (int c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
}

void swap_cols(IMat& a, int i, int j) {
    for (int r = 0; r < a.rows; ++r) std::swap(a.at(r, i), a.at(r, j));
}

void add_row(IMat& a, IMat& u, int dst, int src, long long f) {
    for (int c = 0; c < a.cols; ++c) a.at(dst, c) += f * a.at(src, c);
    for (int c = 0; c < u.cols; ++c) u.at(dst, c) += f * u.at(src, c);
}

void add_col(IMat& a, int dst, int src, long long f) {
    for (int r = 0; r < a.rows; ++r) a.at(r, dst) += f * a.at(r, src);
}

void negate_row(IMat& a, IMat& u, int i) {
    for (int c = 0; c < a.cols; ++c) a.at(i, c) = -a.at(i, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
}

}  // namespace

SmithForm smith_normal_form(const IMat& input) {
    IMat a = input;
    IMat u = IMat::identity(a.rows);
    int n = std::min(a.rows, a.cols);

    for (int s = 0; s < n; ++s) {
        // Move a nonzero entry of minimal absolute value into (s, s).
        for (;;) {
            int pi = -1, pj = -1;
            long long best = 0;
            for (int i = s; i < a.rows; ++i)
                for (int j = s; j < a.cols; ++j) {
                    long long v = std::llabs(a.at(i, j));
                    if (v != 0 && (best == 0 || v < best)) { best = v; pi = i; pj = j; }
                }
            if (pi < 0) break;  // lower-right block is zero
            if (pi != s) swap_rows(a, u, s, pi);
            if (pj != s) swap_cols(a, s, pj);
            if (a.at(s, s) < 0) negate_row(a, u, s);

            bool clean = true;
            for (int i = s + 1; i < a.rows; ++i) {
                long long q = a.at(i, s) / a.at(s, s);
                if (q != 0) add_row(a, u, i, s, -q);
                if (a.at(i, s) != 0) clean = false;
            }
            for (int j = s + 1; j < a.cols; ++j) {
                long long q = a.at(s, j) / a.at(s, s);
                if (q != 0) add_col(a, j, s, -q);
                if (a.at(s, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Enforce divisibility: fold any bad entry into column s and loop.
            bool divides = true;
            for (int i = s + 1; i < a.rows && divides; ++i)
                for (int j = s + 1; j < a.cols && divides; ++j)
                    if (a.at(i, j) % a.at(s, s) != 0) {
                        add_col(a, s, j, 1);
                        divides = false;
                    }
            if (divides) break;
        }
    }

    SmithForm f;
    f.u = std::move(u);
    f.d.assign(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        f.d[static_cast<size_t>(i)] = a.at(i, i);
        if (a.at(i, i) != 0) ++f.rank;
    }
    return f;
}

}  // namespace fundalc
