#pragma once

#include <unordered_map>
#include <unordered_set>

#include "fundalc/alcove.hpp"
#include "fundalc/newton.hpp"

namespace fundalc {

// One twisted conjugation step by a simple affine reflection.
struct ReductionStep {
    int letter;  // index into simple_affine_reflections
    AffElt from;
    AffElt to;   // s . from . sigma(s)
    bool drops;  // length went down (never up along a reduction path)
};

AffElt sigma_conjugate_simple(const RootDatum& d, const DiagramAutomorphism& s,
                              const AffElt& x, int letter);

// Non-length-increasing twisted-conjugation search. `finite_letters_only`
// restricts the moves to the finite simple reflections.
struct MinimalReduction {
    std::vector<AffElt> minimal;  // all reached elements of minimal length, sorted
    long long min_length = 0;
    std::unordered_map<AffElt, std::pair<AffElt, int>, AffEltHash> parent;
    AffElt source;
};
MinimalReduction reduce_to_minimal(const RootDatum& d, const DiagramAutomorphism& s,
                                   const AffElt& x, bool finite_letters_only = false);

std::vector<ReductionStep> reduction_path(const RootDatum& d, const MinimalReduction& red,
                                          const AffElt& target);

// Straight-times-finite certificate for the class of x: a reduction path to
// a minimal w', a straight element `straight` with w' = straight . u,
// u in the finite parabolic generated by sigma(J), and straight conjugating
// sigma(J) onto J.
struct ReductionCertificate {
    std::vector<ReductionStep> path;
    AffElt minimal;   // w'
    AffElt straight;  // x in the decomposition w' = x u
    std::vector<int> j_letters;
    AffElt u;
    // Whether the moved subspace of w' meets the closed base alcove in a
    // regular point: 0 = yes, 1 = meets but only degenerately, 2 = empty.
    int regular_point_status = 2;
};
ReductionCertificate straight_decomposition(const RootDatum& d, const DiagramAutomorphism& s,
                                            const AffElt& x);

int regular_point_status(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x);

// Mutual reachability by length-preserving steps (equivalent to equal
// lengths plus one-way reachability).
bool approx_equiv(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x, const AffElt& y);

// All elements reachable from x by length-preserving simple twisted
// conjugations, sorted.
std::vector<AffElt> length_preserving_closure(const RootDatum& d, const DiagramAutomorphism& s,
                                              const AffElt& x);

// Twisted-conjugation reachability closure with a length cap; steps may
// raise the length up to the cap. Conjugators: simple affine reflections
// and the length-zero generators.
std::unordered_set<AffElt, AffEltHash> capped_conjugation_closure(
    const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x, long long cap,
    bool include_omega = true);

// Straight elements up to the length bound, grouped by capped reachability;
// one minimal representative per group with its invariants.
struct StraightClassRep {
    AffElt rep;
    QVec nu_dom;
    KottwitzClass kappa;
    std::vector<AffElt> members;  // straight members found within the bound
};
std::vector<StraightClassRep> straight_class_reps(const RootDatum& d, const DiagramAutomorphism& s,
                                                  long long length_bound, long long cap,
                                                  int omega_window_size = 2);

}  // namespace fundalc
