#include "fundalc/oracles.hpp"

#include <stdexcept>

namespace fundalc {

long long length_oracle(const RootDatum& d, const AffElt& x) {
    // Both endpoints are provably non-integral: the base point pairs to
    // -height/h on every positive root, and x moves it by an integer
    // translate of another such value.
    QVec p0 = d.base_point;
    QVec p1 = aff_act(x, p0);
    long long count = 0;
    for (int i = 0; i < d.num_positive; ++i) {
        Rat a = d.pair(i, p0);
        Rat b = d.pair(i, p1);
        if (a.is_integer() || b.is_integer())
            throw std::logic_error("length_oracle: endpoint on a hyperplane");
        long long fa = a.floor(), fb = b.floor();
        count += fb > fa ? fb - fa : fa - fb;
    }
    return count;
}

bool bruhat_oracle_word(const RootDatum& d, const AffElt& x, const ReducedWord& wy) {
    ReducedWord wx = reduced_word(d, x);
    if (!(wx.omega == wy.omega)) return false;
    // Target: the W^a-part of x, i.e. x * omega^{-1}.
    AffElt target = aff_identity(d);
    const auto& sa = simple_affine_reflections(d);
    for (int letter : wx.letters) target = aff_mul(target, sa.elts[static_cast<size_t>(letter)]);

    // All subword products of the word of y.
    std::unordered_set<AffElt, AffEltHash> reach;
    reach.insert(aff_identity(d));
    for (int letter : wy.letters) {
        const AffElt& s = sa.elts[static_cast<size_t>(letter)];
        std::vector<AffElt> grown;
        grown.reserve(reach.size());
        for (const AffElt& z : reach) grown.push_back(aff_mul(z, s));
        for (AffElt& z : grown) reach.insert(std::move(z));
    }
    return reach.count(target) > 0;
}

bool bruhat_oracle(const RootDatum& d, const AffElt& x, const AffElt& y) {
    if (aff_length(d, y) > 14) throw std::invalid_argument("bruhat_oracle: cost guard exceeded");
    return bruhat_oracle_word(d, x, reduced_word(d, y));
}

std::unordered_set<AffElt, AffEltHash> class_bfs_oracle(const RootDatum& d,
                                                        const DiagramAutomorphism& sig,
                                                        const AffElt& x, long long cap) {
    std::unordered_set<AffElt, AffEltHash> seen;
    if (aff_length(d, x) > cap) return seen;
    std::vector<AffElt> conj = simple_affine_reflections(d).elts;
    for (const AffElt& g : omega_group(d).generators) {
        conj.push_back(g);
        conj.push_back(aff_inverse(g));
    }
    std::vector<AffElt> frontier{x};
    seen.insert(x);
    while (!frontier.empty()) {
        std::vector<AffElt> next;
        for (const AffElt& z : frontier)
            for (const AffElt& g : conj) {
                AffElt z2 = aff_mul(aff_mul(aff_inverse(g), z), sigma_aff(sig, g));
                if (aff_length(d, z2) > cap) continue;
                if (seen.insert(z2).second) next.push_back(z2);
            }
        frontier = std::move(next);
    }
    return seen;
}

Rat newton_limit_oracle(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x, int n) {
    return Rat(aff_length(d, twisted_power(d, s, x, n)), n);
}

}  // namespace fundalc
