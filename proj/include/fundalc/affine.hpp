#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fundalc/root_datum.hpp"

namespace fundalc {

// Element t^lambda . w of the extended affine Weyl group, acting on V by
// v |-> w(v) + lambda.
struct AffElt {
    IVec t;
    IMat w;

    friend bool operator==(const AffElt& a, const AffElt& b) { return a.t == b.t && a.w == b.w; }
    friend bool operator!=(const AffElt& a, const AffElt& b) { return !(a == b); }
    friend bool operator<(const AffElt& a, const AffElt& b) {
        if (a.t != b.t) return a.t < b.t;
        return a.w.a < b.w.a;
    }
};

struct AffEltHash {
    size_t operator()(const AffElt& x) const {
        IVecHash h;
        size_t a = h(x.t);
        size_t b = h(x.w.a);
        return a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
    }
};

AffElt aff_identity(const RootDatum& d);
AffElt aff_translation(const IVec& lambda);
AffElt aff_from_weyl(const WeylElt& w);
AffElt aff_mul(const AffElt& x, const AffElt& y);
AffElt aff_inverse(const AffElt& x);
bool aff_is_identity(const AffElt& x);
QVec aff_act(const AffElt& x, const QVec& v);

AffElt sigma_aff(const DiagramAutomorphism& s, const AffElt& x);

// Integer m with m < <alpha, p> < m + 1 for p interior to x(base alcove);
// defined for every root, positive or negative.
long long alcove_floor(const RootDatum& d, const AffElt& x, int root_idx);
long long alcove_floor_base(const RootDatum& d, int root_idx);

// m_alpha over the positive roots, in root order.
std::vector<long long> m_vector(const RootDatum& d, const AffElt& x);

// Number of affine root hyperplanes separating the base alcove from its
// image (closed form over the m-vector).
long long aff_length(const RootDatum& d, const AffElt& x);

// Simple affine reflections: the finite simples in diagram order, then one
// affine reflection t^{-theta^vee} s_theta per irreducible component.
struct SimpleAffineSet {
    std::vector<AffElt> elts;
    std::vector<int> finite_simple;  // diagram position, or -1 for affine letters
    std::vector<int> component;      // component of the wall
    int size() const { return static_cast<int>(elts.size()); }
};
const SimpleAffineSet& simple_affine_reflections(const RootDatum& d);

// Index permutation of the simple affine letters under sigma.
std::vector<int> sigma_on_letters(const RootDatum& d, const DiagramAutomorphism& s);

// x = elts of letters multiplied left to right, followed by omega.
struct ReducedWord {
    AffElt omega;
    std::vector<int> letters;  // indices into simple_affine_reflections
};
ReducedWord reduced_word(const RootDatum& d, const AffElt& x, bool prefer_high_index = false);

// Length-zero subgroup. For semisimple data `elements` is the whole group;
// when the coroot lattice has a free complement (GL_n) the group is infinite
// and `free_generator` generates it modulo the finite part.
struct OmegaGroup {
    bool finite = true;
    std::vector<AffElt> elements;          // complete iff finite
    std::vector<AffElt> generators;        // small generating set
    std::optional<AffElt> free_generator;  // set iff infinite
};
const OmegaGroup& omega_group(const RootDatum& d);

// Length-zero elements available for enumeration: all of Omega when finite,
// otherwise powers tau^k, |k| <= window.
std::vector<AffElt> omega_window(const RootDatum& d, int window);

bool bruhat_leq(const RootDatum& d, const AffElt& x, const AffElt& y);

// Class in the sigma-coinvariants of Omega: lattice quotient
// X / (Q^vee + (1 - sigma) X), canonicalized through Smith normal form.
struct KottwitzClass {
    std::vector<std::pair<long long, long long>> torsion;  // (value, modulus)
    IVec free_part;

    friend bool operator==(const KottwitzClass& a, const KottwitzClass& b) {
        return a.torsion == b.torsion && a.free_part == b.free_part;
    }
    friend bool operator!=(const KottwitzClass& a, const KottwitzClass& b) { return !(a == b); }
    friend bool operator<(const KottwitzClass& a, const KottwitzClass& b) {
        if (a.torsion != b.torsion) return a.torsion < b.torsion;
        return a.free_part < b.free_part;
    }
    bool is_zero() const;
    std::string str() const;
};

struct KottwitzProjector {
    IMat u;
    std::vector<long long> d;
    KottwitzClass project(const IVec& lambda) const;
};
KottwitzProjector kottwitz_projector(const RootDatum& d, const DiagramAutomorphism& s);
KottwitzClass kottwitz_point(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x);

// (x sigma)^n sigma^{-n} as a group element.
AffElt twisted_power(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x, int n);

// Affine root alpha + k as (root index, level).
struct AffRoot {
    int root;
    long long level;
    friend bool operator==(const AffRoot& a, const AffRoot& b) { return a.root == b.root && a.level == b.level; }
    friend bool operator<(const AffRoot& a, const AffRoot& b) {
        if (a.root != b.root) return a.root < b.root;
        return a.level < b.level;
    }
};

// Positivity: positive values on the negative of the base alcove.
bool aff_root_positive(const RootDatum& d, const AffRoot& a);

// Image of an affine root under the affine isometry with the given linear
// part and translation (functions pull back along the inverse).
AffRoot aff_root_apply(const RootDatum& d, const IMat& linear, const IVec& translation, const AffRoot& a);
AffRoot aff_root_apply(const RootDatum& d, const AffElt& x, const AffRoot& a);

}  // namespace fundalc
