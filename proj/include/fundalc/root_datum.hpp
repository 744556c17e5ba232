#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fundalc/linalg.hpp"

namespace fundalc {

struct IVecHash {
    size_t operator()(const IVec& v) const {
        size_t h = 1469598103934665603ull;
        for (long long x : v) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Element of the finite Weyl group, stored as its action on the cocharacter
// lattice.
struct WeylElt {
    IMat m;

    bool is_identity() const { return m.is_identity(); }
    friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.m == b.m; }
    friend bool operator!=(const WeylElt& a, const WeylElt& b) { return !(a == b); }
    friend WeylElt operator*(const WeylElt& a, const WeylElt& b) { return {a.m * b.m}; }
};

struct WeylEltHash {
    size_t operator()(const WeylElt& w) const {
        IVecHash h;
        return h(w.m.a);
    }
};

// Finite-order lattice isometry permuting the simple roots; plays the role
// of the Frobenius twist. Split data carry the identity.
struct DiagramAutomorphism {
    IMat m;                        // action on cocharacters
    IMat mi;                       // inverse
    int order = 1;
    std::vector<int> simple_perm;  // 0-based, image position per simple

    bool is_identity() const { return m.is_identity(); }
};

class RootDatum {
public:
    RootDatum() = default;
    // Lazy caches are guarded by once-flags, which pins the object in place;
    // moving transfers the mathematical content and drops the caches.
    RootDatum(RootDatum&& o) noexcept
        : label(std::move(o.label)), rank(o.rank), roots(std::move(o.roots)),
          coroots(std::move(o.coroots)), simples(std::move(o.simples)),
          num_positive(o.num_positive), sigma(std::move(o.sigma)),
          simple_coords(std::move(o.simple_coords)), height(std::move(o.height)),
          component_of_simple(std::move(o.component_of_simple)),
          component_of_root(std::move(o.component_of_root)),
          num_components(o.num_components), highest_root(std::move(o.highest_root)),
          coxeter_number(std::move(o.coxeter_number)), two_rho(std::move(o.two_rho)),
          base_point(std::move(o.base_point)), inner_product(std::move(o.inner_product)),
          root_lookup_(std::move(o.root_lookup_)), coroot_lookup_(std::move(o.coroot_lookup_)) {}
    RootDatum(const RootDatum&) = delete;
    RootDatum& operator=(const RootDatum&) = delete;
    RootDatum& operator=(RootDatum&&) = delete;

    std::string label;
    int rank = 0;

    // Roots in dual (character) coordinates; coroots in lattice coordinates.
    // Positive roots occupy indices [0, num_positive); root i + num_positive
    // is the negative of root i.
    std::vector<IVec> roots;
    std::vector<IVec> coroots;
    std::vector<int> simples;  // indices of the simple roots, in diagram order
    int num_positive = 0;

    DiagramAutomorphism sigma;

    // Derived structure, filled by finalize().
    std::vector<IVec> simple_coords;     // expansion of each root over simples
    std::vector<int> height;             // signed height of each root
    std::vector<int> component_of_simple;
    std::vector<int> component_of_root;
    int num_components = 0;
    std::vector<int> highest_root;       // per component, root index
    std::vector<int> coxeter_number;     // per component
    IVec two_rho;                        // sum of positive roots (character coords)
    QVec base_point;                     // exact interior point of the base alcove
    QMat inner_product;                  // W-invariant form on cocharacter space

    int num_roots() const { return static_cast<int>(roots.size()); }
    int ss_rank() const { return static_cast<int>(simples.size()); }
    bool is_positive(int root_idx) const { return root_idx < num_positive; }
    int negative_of(int root_idx) const {
        return root_idx < num_positive ? root_idx + num_positive : root_idx - num_positive;
    }

    int root_index(const IVec& char_coords) const;         // -1 if not a root
    int coroot_index(const IVec& lattice_coords) const;    // -1 if not a coroot
    int root_index_checked(const IVec& char_coords) const; // throws if not a root

    long long pair(int root_idx, const IVec& v) const { return dot(roots[root_idx], v); }
    Rat pair(int root_idx, const QVec& v) const { return dot(roots[root_idx], v); }

    WeylElt simple_reflection(int simple_pos) const;  // position into `simples`
    WeylElt reflection(int root_idx) const;

    // Image of a root index under a lattice isometry, computed through the
    // root/coroot correspondence (no matrix inversion).
    int apply_to_root(const IMat& isometry, int root_idx) const;

    // All elements of the finite Weyl group (computed on first use).
    const std::vector<WeylElt>& weyl_elements() const;

    // Any rational solution of <alpha_i, y> = delta_{ij} over the simple
    // roots; "fundamental coweight up to central drift".
    const std::vector<QVec>& fundamental_coweights() const;

    void finalize();    // computes all derived structure
    void validate() const;  // throws std::runtime_error on broken invariants

    // Slots for derived structure attached lazily by other modules
    // (simple affine reflections, length-zero subgroup, parabolic pair
    // catalogue). Each slot is filled exactly once.
    static constexpr int kNumLazySlots = 4;
    mutable std::once_flag lazy_once[kNumLazySlots];
    mutable std::shared_ptr<void> lazy_slot[kNumLazySlots];

private:
    std::unordered_map<IVec, int, IVecHash> root_lookup_;
    std::unordered_map<IVec, int, IVecHash> coroot_lookup_;
    mutable std::once_flag weyl_once_;
    mutable std::vector<WeylElt> weyl_cache_;
    mutable std::once_flag fcw_once_;
    mutable std::vector<QVec> fcw_cache_;
};

// Catalogue construction. Keys: "GL{n}", "SL{n}", "PGL{n}", "Sp{2n}-sc",
// "SO{2n+1}-sc|-ad", "SO{2n}-sc|-ad", "G2-sc"; suffix "@2"/"@3" picks the
// diagram twist of that order. "file:<path>" loads and validates a JSON datum.
RootDatum build_root_datum(const std::string& key);

// Keys and notes for the `types list` command.
std::vector<std::pair<std::string, std::string>> catalogue_entries();

// External product of two data (concatenated coordinates).
RootDatum product_datum(const RootDatum& a, const RootDatum& b);

// sigma actions on the various kinds of objects.
IVec sigma_cochar(const DiagramAutomorphism& s, const IVec& v);
QVec sigma_cochar(const DiagramAutomorphism& s, const QVec& v);
IVec sigma_char(const DiagramAutomorphism& s, const IVec& chi);
WeylElt sigma_weyl(const DiagramAutomorphism& s, const WeylElt& w);
DiagramAutomorphism sigma_power(const RootDatum& d, int k);

// Unique dominant point of the W-orbit together with a w moving v there.
std::pair<QVec, WeylElt> dominant_representative(const RootDatum& d, const QVec& v);

// Serialization (exact; rationals as "p/q" strings).
std::string datum_to_json(const RootDatum& d);
RootDatum datum_from_json(const std::string& json_text);

}  // namespace fundalc
