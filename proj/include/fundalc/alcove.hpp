#pragma once

#include <optional>

#include "fundalc/affine.hpp"

namespace fundalc {

// A rational vector with its root-hyperplane shadow: the roots vanishing on
// it and the roots positive on it. The induced parabolic only depends on
// the (zero, plus) pair.
struct VDatum {
    QVec v;
    std::vector<int> zero;  // sorted root indices, closed under negation
    std::vector<int> plus;  // sorted root indices
};

VDatum make_vdatum(const RootDatum& d, const QVec& v);

// Alcove geometry of the root subsystem spanned by a Levi root set: its
// positive system, relative simples, relative length and reduced words.
struct LeviContext {
    const RootDatum* datum = nullptr;
    std::vector<int> all;          // the subsystem, sorted
    std::vector<int> pos;          // positive part, sorted
    std::vector<int> rel_simples;  // root indices, canonical order
    std::vector<int> comp_of_simple;
    int num_components = 0;
    std::vector<int> highest;      // per component, root index
    IVec two_rho;                  // of the subsystem
    SimpleAffineSet sa;            // relative simple affine reflections

    bool contains(int root_idx) const;
    bool preserved_by(const IMat& isometry) const;

    // Hyperplane separation count within the subsystem between the base
    // alcove chamber and the x-image chamber. For the twisted composite
    // x sigma this is the relative length whenever the composite preserves
    // the subsystem (sigma fixes the base alcove, so only x enters).
    long long rel_length(const AffElt& x) const;

    // Greedy left-descent word over the relative simple affine reflections;
    // throws if x is not in the affine Weyl group of the subsystem.
    std::vector<int> rel_word(const AffElt& x) const;

    // Dominant representative under the subsystem's finite Weyl group.
    std::pair<QVec, WeylElt> rel_dominant(const QVec& v) const;

    // Wall roots of the subsystem's base region: -alpha + 0 on the relative
    // simples and theta + 1 on the component highest roots.
    std::vector<AffRoot> wall_set() const;
};

LeviContext levi_context(const RootDatum& d, const std::vector<int>& levi_roots);
LeviContext levi_context_full(const RootDatum& d);

// x(base alcove) >=_alpha y(base alcove): no integer separates strictly in
// the alpha-direction with x on the low side.
bool alcove_ge(const RootDatum& d, const AffElt& x, const AffElt& y, int root_idx);

// P-alcove test: the (zero, plus) pair is stable under the linear part of
// x sigma, and x(base) >=_alpha base for every alpha in the plus part.
bool is_p_alcove(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x, const VDatum& vd);

// Relative length of the composite x sigma in the Levi of vd; throws when
// the composite does not preserve the subsystem.
long long relative_length(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x,
                          const VDatum& vd);

// P-alcove with zero relative length.
bool is_p_fundamental(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x,
                      const VDatum& vd);

// All parabolic (zero, plus) pairs arising from some v, each with one
// representative vector.
struct ParabolicPair {
    std::vector<int> zero;
    std::vector<int> plus;
    QVec rep;
};
const std::vector<ParabolicPair>& parabolic_pairs(const RootDatum& d);

// Pairs stable under the linear part of x sigma, with a fixed representative
// obtained by orbit-averaging inside the defining cone. Ordered with the
// most refined pairs (smallest Levi) first; the v = 0 pair is always last.
std::vector<VDatum> stable_v_data(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x);

// First stable vd that makes x a P-alcove element; with a constraint, only
// pairs whose Levi sits inside the given root set qualify.
std::optional<VDatum> find_p_alcove_witness(const RootDatum& d, const DiagramAutomorphism& s,
                                            const AffElt& x,
                                            const std::optional<std::vector<int>>& levi_constraint);

}  // namespace fundalc
