#include "fundalc/reduction.hpp"

#include <algorithm>
#include <stdexcept>

#include "fundalc/enumerate.hpp"

namespace fundalc {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }
}

AffElt sigma_conjugate_simple(const RootDatum& d, const DiagramAutomorphism& s,
                              const AffElt& x, int letter) {
    const auto& sa = simple_affine_reflections(d);
    const AffElt& r = sa.elts[static_cast<size_t>(letter)];
    return aff_mul(aff_mul(r, x), sigma_aff(s, r));
}

MinimalReduction reduce_to_minimal(const RootDatum& d, const DiagramAutomorphism& sig,
                                   const AffElt& x, bool finite_letters_only) {
    const auto& sa = simple_affine_reflections(d);
    MinimalReduction red;
    red.source = x;
    std::unordered_set<AffElt, AffEltHash> seen{x};
    std::vector<AffElt> frontier{x};
    long long best = aff_length(d, x);
    while (!frontier.empty()) {
        std::vector<AffElt> next;
        for (const AffElt& z : frontier) {
            long long lz = aff_length(d, z);
            for (int i = 0; i < sa.size(); ++i) {
                if (finite_letters_only && sa.finite_simple[static_cast<size_t>(i)] < 0) continue;
                AffElt z2 = sigma_conjugate_simple(d, sig, z, i);
                long long l2 = aff_length(d, z2);
                if (l2 > lz) continue;
                if (seen.insert(z2).second) {
                    red.parent.emplace(z2, std::make_pair(z, i));
                    next.push_back(z2);
                    best = std::min(best, l2);
                }
            }
        }
        frontier = std::move(next);
    }
    red.min_length = best;
    for (const AffElt& z : seen)
        if (aff_length(d, z) == best) red.minimal.push_back(z);
    std::sort(red.minimal.begin(), red.minimal.end());
    return red;
}

std::vector<ReductionStep> reduction_path(const RootDatum& d, const MinimalReduction& red,
                                          const AffElt& target) {
    std::vector<ReductionStep> path;
    AffElt cur = target;
    while (!(cur == red.source)) {
        auto it = red.parent.find(cur);
        if (it == red.parent.end()) fail("target not reached by the reduction");
        const auto& [from, letter] = it->second;
        ReductionStep step;
        step.letter = letter;
        step.from = from;
        step.to = cur;
        step.drops = aff_length(d, cur) < aff_length(d, from);
        path.push_back(step);
        cur = from;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

int regular_point_status(const RootDatum& d, const DiagramAutomorphism& sig, const AffElt& x) {
    NewtonDatum nd = newton_point(d, sig, x);
    int k = static_cast<int>(nd.dirs.size());

    // Parametrize V_x = base + span(dirs) and intersect with the closed
    // base alcove: -1 <= <alpha, v> <= 0 on the positive roots.
    std::vector<LinearConstraint> cons;
    for (int r = 0; r < d.num_positive; ++r) {
        Rat c0 = d.pair(r, nd.base);
        QVec coeff(static_cast<size_t>(std::max(k, 1)), Rat(0));
        for (int i = 0; i < k; ++i) coeff[static_cast<size_t>(i)] = d.pair(r, nd.dirs[static_cast<size_t>(i)]);
        LinearConstraint up{coeff, Rat(0) - c0, false};       // <alpha, v> <= 0
        LinearConstraint lo{coeff, Rat(0), false};            // -<alpha, v> <= 1
        for (auto& q : lo.coeff) q = -q;
        lo.rhs = Rat(1) + c0;
        cons.push_back(up);
        cons.push_back(lo);
    }
    int dim = std::max(k, 1);
    if (k == 0)
        for (auto& c : cons) c.coeff.assign(1, Rat(0));
    if (!feasible_point(cons, dim)) return 2;

    // A regular point exists iff the intersection polytope is not contained
    // in any affine root hyperplane that misses V_x. Only levels 0 and 1
    // can touch the closed alcove.
    for (int r = 0; r < d.num_positive; ++r)
        for (long long level : {0LL, 1LL}) {
            Rat c0 = d.pair(r, nd.base) + Rat(level);
            QVec coeff(static_cast<size_t>(dim), Rat(0));
            bool contains_v = c0.is_zero();
            for (int i = 0; i < k; ++i) {
                coeff[static_cast<size_t>(i)] = d.pair(r, nd.dirs[static_cast<size_t>(i)]);
                contains_v = contains_v && coeff[static_cast<size_t>(i)].is_zero();
            }
            if (contains_v) continue;  // hyperplane contains all of V_x
            // Q not inside the hyperplane <alpha, v> + level = 0?
            std::vector<LinearConstraint> above = cons;
            above.push_back({coeff, Rat(0) - c0, true});  // value < 0 side... (coeff.u < -c0)
            bool off_low = feasible_point(above, dim).has_value();
            std::vector<LinearConstraint> below = cons;
            QVec neg = coeff;
            for (auto& q : neg) q = -q;
            below.push_back({neg, c0, true});             // value > 0 side
            bool off_high = feasible_point(below, dim).has_value();
            if (!off_low && !off_high) return 1;  // Q sits inside this hyperplane
        }
    return 0;
}

ReductionCertificate straight_decomposition(const RootDatum& d, const DiagramAutomorphism& sig,
                                            const AffElt& x) {
    const auto& sa = simple_affine_reflections(d);
    std::vector<int> sperm = sigma_on_letters(d, sig);
    MinimalReduction red = reduce_to_minimal(d, sig, x);

    // Subsets of the simple affine letters by increasing size, lexicographic
    // within; only finite parabolics qualify.
    int nl = sa.size();
    std::vector<std::vector<int>> subsets;
    for (unsigned mask = 0; mask < (1u << nl); ++mask) {
        std::vector<int> j;
        for (int i = 0; i < nl; ++i)
            if (mask & (1u << i)) j.push_back(i);
        subsets.push_back(std::move(j));
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    auto parabolic_finite = [&](const std::vector<int>& j) {
        std::vector<int> count(static_cast<size_t>(d.num_components), 0);
        std::vector<int> total(static_cast<size_t>(d.num_components), 0);
        for (int i = 0; i < nl; ++i) ++total[static_cast<size_t>(sa.component[static_cast<size_t>(i)])];
        for (int i : j) ++count[static_cast<size_t>(sa.component[static_cast<size_t>(i)])];
        for (int c = 0; c < d.num_components; ++c)
            if (count[static_cast<size_t>(c)] == total[static_cast<size_t>(c)]) return false;
        return true;
    };

    for (const AffElt& w1 : red.minimal) {
        for (const auto& j : subsets) {
            if (!parabolic_finite(j)) continue;
            std::vector<int> sj;
            for (int i : j) sj.push_back(sperm[static_cast<size_t>(i)]);

            // Minimal representative of w1 W_{sigma(J)} by greedy right
            // descents, accumulating u.
            AffElt rep = w1;
            AffElt u = aff_identity(d);
            long long lr = aff_length(d, rep);
            bool moved = true;
            while (moved) {
                moved = false;
                for (int t : sj) {
                    AffElt cand = aff_mul(rep, sa.elts[static_cast<size_t>(t)]);
                    long long lc = aff_length(d, cand);
                    if (lc < lr) {
                        rep = cand;
                        u = aff_mul(sa.elts[static_cast<size_t>(t)], u);
                        lr = lc;
                        moved = true;
                        break;
                    }
                }
            }
            // rep must be shortest on both sides.
            bool two_sided = true;
            for (int i : j)
                two_sided = two_sided &&
                            aff_length(d, aff_mul(sa.elts[static_cast<size_t>(i)], rep)) > lr;
            for (int t : sj)
                two_sided = two_sided &&
                            aff_length(d, aff_mul(rep, sa.elts[static_cast<size_t>(t)])) > lr;
            if (!two_sided) continue;

            // rep must conjugate sigma(J) onto J.
            AffElt repi = aff_inverse(rep);
            std::vector<AffElt> expect;
            for (int i : j) expect.push_back(sa.elts[static_cast<size_t>(i)]);
            std::sort(expect.begin(), expect.end());
            std::vector<AffElt> got;
            for (int t : sj) got.push_back(aff_mul(aff_mul(rep, sa.elts[static_cast<size_t>(t)]), repi));
            std::sort(got.begin(), got.end());
            if (!(expect == got)) continue;

            if (!is_straight(d, sig, rep)) continue;
            if (!(aff_mul(rep, u) == w1)) fail("coset reduction lost the quotient");
            if (!(newton_vector(d, sig, w1) == newton_vector(d, sig, rep))) continue;
            if (!bruhat_leq(d, rep, w1)) continue;

            ReductionCertificate cert;
            cert.path = reduction_path(d, red, w1);
            cert.minimal = w1;
            cert.straight = rep;
            cert.j_letters = j;
            cert.u = u;
            cert.regular_point_status = regular_point_status(d, sig, w1);
            return cert;
        }
    }
    fail("no straight-times-finite certificate found; this contradicts the reduction theorem");
}

std::vector<AffElt> length_preserving_closure(const RootDatum& d, const DiagramAutomorphism& s,
                                              const AffElt& x) {
    const auto& sa = simple_affine_reflections(d);
    long long len = aff_length(d, x);
    std::unordered_set<AffElt, AffEltHash> seen{x};
    std::vector<AffElt> frontier{x}, out{x};
    while (!frontier.empty()) {
        std::vector<AffElt> next;
        for (const AffElt& z : frontier)
            for (int i = 0; i < sa.size(); ++i) {
                AffElt z2 = sigma_conjugate_simple(d, s, z, i);
                if (aff_length(d, z2) != len) continue;
                if (seen.insert(z2).second) { next.push_back(z2); out.push_back(z2); }
            }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool approx_equiv(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x, const AffElt& y) {
    if (aff_length(d, x) != aff_length(d, y)) return false;
    const auto closure = length_preserving_closure(d, s, x);
    return std::binary_search(closure.begin(), closure.end(), y);
}

std::unordered_set<AffElt, AffEltHash> capped_conjugation_closure(
    const RootDatum& d, const DiagramAutomorphism& sig, const AffElt& x, long long cap,
    bool include_omega) {
    std::unordered_set<AffElt, AffEltHash> seen;
    if (aff_length(d, x) > cap) return seen;
    std::vector<AffElt> conj = simple_affine_reflections(d).elts;
    if (include_omega)
        for (const AffElt& g : omega_group(d).generators) {
            conj.push_back(g);
            conj.push_back(aff_inverse(g));
        }
    seen.insert(x);
    std::vector<AffElt> frontier{x};
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

std::vector<StraightClassRep> straight_class_reps(const RootDatum& d, const DiagramAutomorphism& sig,
                                                  long long length_bound, long long cap,
                                                  int omega_window_size) {
    std::vector<AffElt> straights;
    for (const AffElt& x : enumerate_elements(d, length_bound, omega_window_size))
        if (is_straight(d, sig, x)) straights.push_back(x);

    std::vector<StraightClassRep> groups;
    std::unordered_set<AffElt, AffEltHash> grouped;
    for (const AffElt& x : straights) {
        if (grouped.count(x)) continue;
        auto closure = capped_conjugation_closure(d, sig, x, cap);
        StraightClassRep g;
        for (const AffElt& y : straights)
            if (closure.count(y)) {
                g.members.push_back(y);
                grouped.insert(y);
            }
        std::sort(g.members.begin(), g.members.end());
        g.rep = g.members.front();
        long long best = aff_length(d, g.rep);
        for (const AffElt& y : g.members) {
            long long ly = aff_length(d, y);
            if (ly < best || (ly == best && y < g.rep)) { g.rep = y; best = ly; }
        }
        g.nu_dom = dominant_representative(d, newton_vector(d, sig, g.rep)).first;
        g.kappa = kottwitz_point(d, sig, g.rep);
        groups.push_back(std::move(g));
    }
    std::sort(groups.begin(), groups.end(), [](const StraightClassRep& a, const StraightClassRep& b) {
        return a.rep < b.rep;
    });
    return groups;
}

}  // namespace fundalc
