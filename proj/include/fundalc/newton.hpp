#pragma once

#include <optional>

#include "fundalc/affine.hpp"

namespace fundalc {

// Drift data of the twisted affine isometry x sigma: the translation part
// nu of its power averages, the dominant representative, and the affine
// subspace moved by exactly nu.
struct NewtonDatum {
    QVec nu;            // nu_x, with n * nu integral
    QVec nu_dom;        // dominant representative
    long long period;   // order of the linear part of x sigma
    KottwitzClass kappa;
    QVec base;               // a point of V_x
    std::vector<QVec> dirs;  // direction space of V_x
};

NewtonDatum newton_point(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x);

// Just nu and its dominant representative; cheaper inner loop form.
QVec newton_vector(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x);

Rat two_rho_pairing(const RootDatum& d, const QVec& v);

// length(x) == <2 rho, dominant nu>, exact.
bool is_straight(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x);

// Existence of a w-sigma-fixed cocharacter whose centralizer root set is
// exactly levi_roots (given as root indices, closed under negation and
// spanning intersection). Decided by a fixed-subspace rank argument; the
// witness, when present, is an explicit fixed vector with that zero set.
bool l_permissible(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x,
                   const std::vector<int>& levi_roots);
std::optional<QVec> l_permissible_witness(const RootDatum& d, const DiagramAutomorphism& s,
                                          const AffElt& x, const std::vector<int>& levi_roots);

// Checks levi_roots = Phi intersect span(levi_roots); throws otherwise.
void require_levi_subset(const RootDatum& d, const std::vector<int>& levi_roots);

}  // namespace fundalc
