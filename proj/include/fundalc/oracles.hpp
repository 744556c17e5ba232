#pragma once

#include <unordered_set>

#include "fundalc/affine.hpp"

namespace fundalc {

// Brute-force baselines for the primary implementations. These share no
// formulas or traversals with the code they check: lengths come from moving
// an exact interior point, Bruhat from a subword scan, class closures from
// an uncapped-step BFS.

// Counts integers crossed by <alpha, .> between the base interior point and
// its image, summed over the positive roots.
long long length_oracle(const RootDatum& d, const AffElt& x);

// Subword scan over one reduced word of y; guard: length(y) <= 14.
bool bruhat_oracle(const RootDatum& d, const AffElt& x, const AffElt& y);
bool bruhat_oracle_word(const RootDatum& d, const AffElt& x, const ReducedWord& word_of_y);

// Closure of {x} under g |-> s g sigma(s) for every simple affine s and
// every Omega generator (and inverse), intersected with {length <= cap}.
std::unordered_set<AffElt, AffEltHash> class_bfs_oracle(const RootDatum& d,
                                                        const DiagramAutomorphism& s,
                                                        const AffElt& x, long long cap);

// length((x sigma)^N sigma^{-N}) / N; approaches <2 rho, dominant Newton
// point> and equals length(x) exactly for straight x.
Rat newton_limit_oracle(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x, int n);

}  // namespace fundalc
