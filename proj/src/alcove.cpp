#include "fundalc/alcove.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace fundalc {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

bool sorted_contains(const std::vector<int>& v, int x) {
    return std::binary_search(v.begin(), v.end(), x);
}
}  // namespace

VDatum make_vdatum(const RootDatum& d, const QVec& v) {
    VDatum vd;
    vd.v = v;
    for (int i = 0; i < d.num_roots(); ++i) {
        int s = d.pair(i, v).sign();
        if (s == 0) vd.zero.push_back(i);
        else if (s > 0) vd.plus.push_back(i);
    }
    return vd;
}

bool LeviContext::contains(int root_idx) const { return sorted_contains(all, root_idx); }

bool LeviContext::preserved_by(const IMat& isometry) const {
    for (int r : all)
        if (!contains(datum->apply_to_root(isometry, r))) return false;
    return true;
}

long long LeviContext::rel_length(const AffElt& x) const {
    long long len = 0;
    for (int r : pos) {
        long long m = alcove_floor(*datum, x, r) + 1;
        len += m < 0 ? -m : m;
    }
    return len;
}

std::vector<int> LeviContext::rel_word(const AffElt& x) const {
    std::vector<int> letters;
    AffElt cur = x;
    long long len = rel_length(cur);
    while (len > 0) {
        int pick = -1;
        for (int i = 0; i < sa.size(); ++i) {
            AffElt nx = aff_mul(sa.elts[static_cast<size_t>(i)], cur);
            if (rel_length(nx) < len) { pick = i; cur = nx; break; }
        }
        if (pick < 0) fail("no relative descent");
        letters.push_back(pick);
        --len;
    }
    if (!aff_is_identity(cur)) fail("element is not in the affine Weyl group of the Levi");
    return letters;
}

std::pair<QVec, WeylElt> LeviContext::rel_dominant(const QVec& v) const {
    QVec cur = v;
    WeylElt w{IMat::identity(datum->rank)};
    for (;;) {
        int neg = -1;
        for (size_t i = 0; i < rel_simples.size(); ++i)
            if (datum->pair(rel_simples[i], cur).sign() < 0) { neg = static_cast<int>(i); break; }
        if (neg < 0) return {cur, w};
        WeylElt s = datum->reflection(rel_simples[static_cast<size_t>(neg)]);
        cur = s.m.apply(cur);
        w = s * w;
    }
}

std::vector<AffRoot> LeviContext::wall_set() const {
    std::vector<AffRoot> walls;
    for (int r : rel_simples) walls.push_back({datum->negative_of(r), 0});
    for (int h : highest) walls.push_back({h, 1});
    std::sort(walls.begin(), walls.end());
    return walls;
}

LeviContext levi_context(const RootDatum& d, const std::vector<int>& levi_roots) {
    LeviContext lc;
    lc.datum = &d;
    lc.all = levi_roots;
    std::sort(lc.all.begin(), lc.all.end());
    for (int r : lc.all)
        if (d.is_positive(r)) lc.pos.push_back(r);

    // Relative simples: indecomposables of the positive part.
    std::set<IVec> pos_set;
    for (int r : lc.pos) pos_set.insert(d.roots[static_cast<size_t>(r)]);
    for (int r : lc.pos) {
        bool decomposable = false;
        for (int a : lc.pos) {
            if (a == r) continue;
            IVec diff = ivec_sub(d.roots[static_cast<size_t>(r)], d.roots[static_cast<size_t>(a)]);
            if (pos_set.count(diff)) { decomposable = true; break; }
        }
        if (!decomposable) lc.rel_simples.push_back(r);
    }

    // Components of the relative diagram.
    int n = static_cast<int>(lc.rel_simples.size());
    lc.comp_of_simple.assign(static_cast<size_t>(n), -1);
    lc.num_components = 0;
    for (int i = 0; i < n; ++i) {
        if (lc.comp_of_simple[static_cast<size_t>(i)] >= 0) continue;
        std::vector<int> stack{i};
        lc.comp_of_simple[static_cast<size_t>(i)] = lc.num_components;
        while (!stack.empty()) {
            int a = stack.back(); stack.pop_back();
            for (int b = 0; b < n; ++b) {
                if (lc.comp_of_simple[static_cast<size_t>(b)] >= 0) continue;
                if (dot(d.roots[static_cast<size_t>(lc.rel_simples[static_cast<size_t>(a)])],
                        d.coroots[static_cast<size_t>(lc.rel_simples[static_cast<size_t>(b)])]) != 0) {
                    lc.comp_of_simple[static_cast<size_t>(b)] = lc.num_components;
                    stack.push_back(b);
                }
            }
        }
        ++lc.num_components;
    }

    // Heights over the relative simples locate the component highest roots.
    lc.highest.assign(static_cast<size_t>(lc.num_components), -1);
    if (n > 0) {
        QMat st(d.rank, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < d.rank; ++j)
                st.at(j, i) = Rat(d.roots[static_cast<size_t>(lc.rel_simples[static_cast<size_t>(i)])][static_cast<size_t>(j)]);
        std::vector<long long> ht(lc.pos.size(), 0);
        std::vector<int> comp(lc.pos.size(), -1);
        for (size_t k = 0; k < lc.pos.size(); ++k) {
            auto sol = solve_linear(st, to_qvec(d.roots[static_cast<size_t>(lc.pos[k])]));
            if (!sol) fail("positive part does not span over the relative simples");
            long long h = 0;
            for (size_t i = 0; i < sol->size(); ++i) {
                if (!(*sol)[i].is_integer() || (*sol)[i].sign() < 0)
                    fail("relative simple expansion is not a nonnegative integer vector");
                h += (*sol)[i].num;
                if ((*sol)[i].num != 0 && comp[k] < 0)
                    comp[k] = lc.comp_of_simple[i];
            }
            ht[k] = h;
        }
        for (size_t k = 0; k < lc.pos.size(); ++k) {
            int c = comp[k];
            int& best = lc.highest[static_cast<size_t>(c)];
            if (best < 0) { best = lc.pos[k]; continue; }
            size_t bk = static_cast<size_t>(std::lower_bound(lc.pos.begin(), lc.pos.end(), best) - lc.pos.begin());
            if (ht[k] > ht[bk]) best = lc.pos[k];
        }
    }

    lc.two_rho.assign(static_cast<size_t>(d.rank), 0);
    for (int r : lc.pos) lc.two_rho = ivec_add(lc.two_rho, d.roots[static_cast<size_t>(r)]);

    for (size_t i = 0; i < lc.rel_simples.size(); ++i) {
        lc.sa.elts.push_back(aff_from_weyl(d.reflection(lc.rel_simples[i])));
        lc.sa.finite_simple.push_back(static_cast<int>(i));
        lc.sa.component.push_back(lc.comp_of_simple[i]);
    }
    for (int c = 0; c < lc.num_components; ++c) {
        int theta = lc.highest[static_cast<size_t>(c)];
        lc.sa.elts.push_back(aff_mul(aff_translation(ivec_neg(d.coroots[static_cast<size_t>(theta)])),
                                     aff_from_weyl(d.reflection(theta))));
        lc.sa.finite_simple.push_back(-1);
        lc.sa.component.push_back(c);
    }
    return lc;
}

LeviContext levi_context_full(const RootDatum& d) {
    std::vector<int> all(static_cast<size_t>(d.num_roots()));
    for (int i = 0; i < d.num_roots(); ++i) all[static_cast<size_t>(i)] = i;
    return levi_context(d, all);
}

bool alcove_ge(const RootDatum& d, const AffElt& x, const AffElt& y, int root_idx) {
    return alcove_floor(d, x, root_idx) >= alcove_floor(d, y, root_idx);
}

namespace {

bool pair_stable(const RootDatum& d, const IMat& g, const VDatum& vd) {
    for (int r : vd.zero)
        if (!sorted_contains(vd.zero, d.apply_to_root(g, r))) return false;
    for (int r : vd.plus)
        if (!sorted_contains(vd.plus, d.apply_to_root(g, r))) return false;
    return true;
}

}  // namespace

bool is_p_alcove(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x, const VDatum& vd) {
    IMat g = x.w * s.m;
    if (!pair_stable(d, g, vd)) return false;
    for (int r : vd.plus)
        if (alcove_floor(d, x, r) < alcove_floor_base(d, r)) return false;
    return true;
}

long long relative_length(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x,
                          const VDatum& vd) {
    IMat g = x.w * s.m;
    LeviContext lc = levi_context(d, vd.zero);
    if (!lc.preserved_by(g)) fail("composite does not preserve the Levi subsystem");
    return lc.rel_length(x);
}

bool is_p_fundamental(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x,
                      const VDatum& vd) {
    if (!is_p_alcove(d, s, x, vd)) return false;
    return relative_length(d, s, x, vd) == 0;
}

const std::vector<ParabolicPair>& parabolic_pairs(const RootDatum& d) {
    std::call_once(d.lazy_once[2], [&d] {
        auto out = std::make_shared<std::vector<ParabolicPair>>();
        std::map<std::pair<std::vector<int>, std::vector<int>>, QVec> seen;
        const auto& fcw = d.fundamental_coweights();
        int n = d.ss_rank();
        std::vector<QVec> frontier;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            QVec v(static_cast<size_t>(d.rank), Rat(0));
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) v = qvec_add(v, fcw[static_cast<size_t>(i)]);
            VDatum vd = make_vdatum(d, v);
            auto key = std::make_pair(vd.zero, vd.plus);
            if (seen.emplace(key, v).second) frontier.push_back(v);
        }
        while (!frontier.empty()) {
            std::vector<QVec> next;
            for (const QVec& v : frontier)
                for (int i = 0; i < n; ++i) {
                    QVec u = d.simple_reflection(i).m.apply(v);
                    VDatum vd = make_vdatum(d, u);
                    auto key = std::make_pair(vd.zero, vd.plus);
                    if (seen.emplace(key, u).second) next.push_back(u);
                }
            frontier = std::move(next);
        }
        for (auto& [key, rep] : seen)
            out->push_back({key.first, key.second, rep});
        // Most refined first: fewest vanishing roots, then lexicographic.
        std::sort(out->begin(), out->end(), [](const ParabolicPair& a, const ParabolicPair& b) {
            if (a.zero.size() != b.zero.size()) return a.zero.size() < b.zero.size();
            if (a.zero != b.zero) return a.zero < b.zero;
            return a.plus < b.plus;
        });
        d.lazy_slot[2] = std::move(out);
    });
    return *static_cast<const std::vector<ParabolicPair>*>(d.lazy_slot[2].get());
}

std::vector<VDatum> stable_v_data(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x) {
    IMat g = x.w * s.m;
    std::vector<VDatum> out;
    for (const ParabolicPair& p : parabolic_pairs(d)) {
        VDatum vd{p.rep, p.zero, p.plus};
        if (!pair_stable(d, g, vd)) continue;
        // Orbit-average the representative inside the (convex, stable)
        // defining cone; the result is a fixed vector with the same pair.
        QVec acc = p.rep;
        QVec cur = p.rep;
        int count = 1;
        for (;;) {
            cur = g.apply(cur);
            if (cur == p.rep) break;
            acc = qvec_add(acc, cur);
            ++count;
            if (count > 10000) fail("orbit of representative does not close");
        }
        QVec fixed = qvec_scale(Rat(1, count), acc);
        VDatum vfixed = make_vdatum(d, fixed);
        if (vfixed.zero != p.zero || vfixed.plus != p.plus)
            fail("orbit average left the defining cone");
        if (!(g.apply(fixed) == fixed)) fail("orbit average is not fixed");
        out.push_back(std::move(vfixed));
    }
    return out;
}

std::optional<VDatum> find_p_alcove_witness(const RootDatum& d, const DiagramAutomorphism& s,
                                            const AffElt& x,
                                            const std::optional<std::vector<int>>& levi_constraint) {
    std::optional<std::vector<int>> constraint = levi_constraint;
    if (constraint) std::sort(constraint->begin(), constraint->end());
    for (const VDatum& vd : stable_v_data(d, s, x)) {
        if (constraint) {
            bool inside = true;
            for (int r : vd.zero) inside = inside && sorted_contains(*constraint, r);
            if (!inside) continue;
        }
        if (is_p_alcove(d, s, x, vd)) return vd;
    }
    return std::nullopt;
}

}  // namespace fundalc
