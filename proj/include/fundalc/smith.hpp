#pragma once

#include "fundalc/linalg.hpp"

namespace fundalc {

// Smith normal form U * A * V = diag(d_1, ..., d_k) with d_i | d_{i+1}.
// Only the row transform U is kept: it is what quotient-group
// canonicalization needs (x mod im(A)  <->  reduce (Ux)_i mod d_i).
struct SmithForm {
    IMat u;                   // unimodular, rows x rows of A
    std::vector<long long> d; // diagonal, length min(rows, cols), zeros allowed
    int rank = 0;             // number of nonzero d_i
};

SmithForm smith_normal_form(const IMat& a);

}  // namespace fundalc
