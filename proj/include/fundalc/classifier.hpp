#pragma once

#include "fundalc/reduction.hpp"

namespace fundalc {

// Straightness (the operative notion of fundamental here) with an explicit
// alcove witness: a stable vector v with x a P_v-alcove element of zero
// relative length, found by length-preserving reduction and transported
// back along the path.
struct FundamentalResult {
    bool fundamental = false;
    std::optional<VDatum> witness;
};
FundamentalResult is_fundamental(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x);

// The unique y in the twisted coset x sigma W^a_{nu_x} whose relative
// length vanishes, by greedy right descents along the relative simple
// affine reflections.
AffElt x_part(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x);
AffElt x_part_in(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x,
                 const LeviContext& nu_levi);

// Coset-decomposition criterion for one-class double cosets, relative to an
// ambient Levi subsystem (the full system at top level; the Newton Levi of
// x when run inside it). `k_variant` restricts the finite parabolic J to
// the finite relative simples.
struct CosetCriterion {
    bool holds = false;
    AffElt y;                 // the zero-relative-length coset point
    bool y_straight = false;  // straight inside the ambient subsystem
    bool additive = false;    // ambient length = length(y) + relative length(x)
    std::optional<std::vector<int>> j;  // letters into the Newton Levi's reflections
};
CosetCriterion coset_criterion(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x,
                               const LeviContext& ambient, bool k_variant);

// One-class tests at the two group scales. Both the coset criterion and the
// P-alcove/Levi criterion are evaluated; disagreement is a hard failure.
bool is_k_fundamental(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x);
bool is_gl_fundamental(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x);

// Table for the minuscule double coset W t^mu W: every element should
// Bruhat-dominate a straight element twisted-conjugate (by the affine Weyl
// group) to its reduction certificate.
struct MinusculeRow {
    AffElt elt;
    long long length = 0;
    AffElt straight_rep;
    QVec nu_dom;
    KottwitzClass kappa;
    std::optional<AffElt> witness;  // straight, below elt, conjugate to the rep
    bool ok = false;
};
struct MinusculeReport {
    std::vector<MinusculeRow> rows;
    bool all_ok = true;
};
MinusculeReport minuscule_report(const RootDatum& d, const DiagramAutomorphism& s, const IVec& mu);

bool is_minuscule(const RootDatum& d, const IVec& mu);

}  // namespace fundalc
