#include "fundalc/affine.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fundalc/smith.hpp"

namespace fundalc {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }
}

AffElt aff_identity(const RootDatum& d) {
    return {IVec(static_cast<size_t>(d.rank), 0), IMat::identity(d.rank)};
}

AffElt aff_translation(const IVec& lambda) {
    return {lambda, IMat::identity(static_cast<int>(lambda.size()))};
}

AffElt aff_from_weyl(const WeylElt& w) {
    return {IVec(static_cast<size_t>(w.m.rows), 0), w.m};
}

AffElt aff_mul(const AffElt& x, const AffElt& y) {
    if (x.t.size() != y.t.size()) fail("elements from data of different rank");
    return {ivec_add(x.t, x.w.apply(y.t)), x.w * y.w};
}

AffElt aff_inverse(const AffElt& x) {
    IMat wi = unimodular_inverse(x.w);
    return {ivec_neg(wi.apply(x.t)), wi};
}

bool aff_is_identity(const AffElt& x) { return ivec_is_zero(x.t) && x.w.is_identity(); }

QVec aff_act(const AffElt& x, const QVec& v) {
    QVec r = x.w.apply(v);
    for (size_t i = 0; i < r.size(); ++i) r[i] += Rat(x.t[i]);
    return r;
}

AffElt sigma_aff(const DiagramAutomorphism& s, const AffElt& x) {
    return {s.m.apply(x.t), s.m * x.w * s.mi};
}

long long alcove_floor(const RootDatum& d, const AffElt& x, int root_idx) {
    // m = <alpha, lambda> - [w^{-1} alpha positive]; w^{-1} on characters is
    // the transpose of the matrix on cocharacters.
    long long v = d.pair(root_idx, x.t);
    IVec wa = x.w.apply_transpose(d.roots[static_cast<size_t>(root_idx)]);
    int idx = d.root_index(wa);
    if (idx < 0) fail("element does not normalize the root system");
    return v - (d.is_positive(idx) ? 1 : 0);
}

long long alcove_floor_base(const RootDatum& d, int root_idx) {
    return d.is_positive(root_idx) ? -1 : 0;
}

std::vector<long long> m_vector(const RootDatum& d, const AffElt& x) {
    std::vector<long long> m(static_cast<size_t>(d.num_positive));
    for (int i = 0; i < d.num_positive; ++i) m[static_cast<size_t>(i)] = alcove_floor(d, x, i);
    return m;
}

long long aff_length(const RootDatum& d, const AffElt& x) {
    long long len = 0;
    for (int i = 0; i < d.num_positive; ++i) {
        long long m = alcove_floor(d, x, i) + 1;
        len += m < 0 ? -m : m;
    }
    return len;
}

const SimpleAffineSet& simple_affine_reflections(const RootDatum& d) {
    std::call_once(d.lazy_once[0], [&d] {
        auto s = std::make_shared<SimpleAffineSet>();
        for (int i = 0; i < d.ss_rank(); ++i) {
            s->elts.push_back(aff_from_weyl(d.simple_reflection(i)));
            s->finite_simple.push_back(i);
            s->component.push_back(d.component_of_simple[static_cast<size_t>(i)]);
        }
        for (int c = 0; c < d.num_components; ++c) {
            int theta = d.highest_root[static_cast<size_t>(c)];
            AffElt s0 = aff_mul(aff_translation(ivec_neg(d.coroots[static_cast<size_t>(theta)])),
                                aff_from_weyl(d.reflection(theta)));
            s->elts.push_back(s0);
            s->finite_simple.push_back(-1);
            s->component.push_back(c);
        }
        d.lazy_slot[0] = std::move(s);
    });
    return *static_cast<const SimpleAffineSet*>(d.lazy_slot[0].get());
}

std::vector<int> sigma_on_letters(const RootDatum& d, const DiagramAutomorphism& s) {
    const auto& sa = simple_affine_reflections(d);
    std::vector<int> perm(static_cast<size_t>(sa.size()), -1);
    for (int i = 0; i < sa.size(); ++i) {
        AffElt img = sigma_aff(s, sa.elts[static_cast<size_t>(i)]);
        for (int j = 0; j < sa.size(); ++j)
            if (img == sa.elts[static_cast<size_t>(j)]) { perm[static_cast<size_t>(i)] = j; break; }
        if (perm[static_cast<size_t>(i)] < 0) fail("sigma does not permute the simple affine reflections");
    }
    return perm;
}

ReducedWord reduced_word(const RootDatum& d, const AffElt& x, bool prefer_high_index) {
    const auto& sa = simple_affine_reflections(d);
    ReducedWord rw;
    AffElt cur = x;
    long long len = aff_length(d, cur);
    while (len > 0) {
        int pick = -1;
        for (int k = 0; k < sa.size(); ++k) {
            int i = prefer_high_index ? sa.size() - 1 - k : k;
            AffElt nx = aff_mul(sa.elts[static_cast<size_t>(i)], cur);
            if (aff_length(d, nx) < len) { pick = i; break; }
        }
        if (pick < 0) fail("no descent on an element of positive length");
        rw.letters.push_back(pick);
        cur = aff_mul(sa.elts[static_cast<size_t>(pick)], cur);
        --len;
    }
    rw.omega = cur;
    return rw;
}

namespace {

// Solves for all length-zero elements with a given finite part: the floor
// conditions pin <alpha_i, lambda> on the simples, leaving the central
// lattice free.
struct OmegaSolve {
    bool consistent = false;
    IVec particular;
    std::vector<IVec> lattice;  // integral kernel basis
};

OmegaSolve solve_length_zero(const RootDatum& d, const WeylElt& w) {
    OmegaSolve res;
    int n = d.ss_rank();
    IMat a(n, d.rank);
    IVec c(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        int si = d.simples[static_cast<size_t>(i)];
        for (int j = 0; j < d.rank; ++j) a.at(i, j) = d.roots[static_cast<size_t>(si)][static_cast<size_t>(j)];
        IVec wa = w.m.apply_transpose(d.roots[static_cast<size_t>(si)]);
        int idx = d.root_index(wa);
        c[static_cast<size_t>(i)] = (d.is_positive(idx) ? 1 : 0) - 1;  // target <alpha_i, lambda>
    }
    // Rational solve plus an integral shift along the central lattice.
    QMat qa = QMat::from(a);
    auto sol = solve_linear(qa, to_qvec(c));
    if (!sol) return res;
    std::vector<QVec> ker = kernel_basis(qa);
    // The kernel here is the central subspace; its integral points form the
    // central sublattice. Scale kernel basis vectors to primitive integral.
    std::vector<IVec> lattice;
    for (const auto& kv : ker) {
        long long lcm = 1;
        for (const auto& q : kv) lcm = std::lcm(lcm, q.den);
        IVec iv(kv.size());
        long long g = 0;
        for (size_t i = 0; i < kv.size(); ++i) {
            iv[i] = kv[i].num * (lcm / kv[i].den);
            g = std::gcd(g, iv[i] < 0 ? -iv[i] : iv[i]);
        }
        if (g > 1) for (auto& v : iv) v /= g;
        lattice.push_back(iv);
    }
    // Shift the particular solution integral if possible: search small
    // combinations of the lattice (coordinates of catalogue data are tiny).
    QVec p = *sol;
    bool integral = true;
    for (const auto& q : p) integral = integral && q.is_integer();
    if (!integral) {
        if (lattice.empty()) return res;
        // One free direction suffices for the supported data.
        bool fixed = false;
        for (const auto& dir : lattice) {
            for (long long t = -24; t <= 24 && !fixed; ++t) {
                bool ok = true;
                for (size_t i = 0; i < p.size(); ++i)
                    if (!(p[i] + Rat(t) * Rat(dir[i])).is_integer()) { ok = false; break; }
                if (ok) {
                    for (size_t i = 0; i < p.size(); ++i) p[i] += Rat(t) * Rat(dir[i]);
                    fixed = true;
                }
            }
            if (fixed) break;
        }
        if (!fixed) return res;
    }
    res.consistent = true;
    res.particular.resize(p.size());
    for (size_t i = 0; i < p.size(); ++i) res.particular[i] = p[i].num;
    res.lattice = std::move(lattice);
    return res;
}

// Checks all positive roots, not only the simples.
bool is_length_zero(const RootDatum& d, const AffElt& x) { return aff_length(d, x) == 0; }

}  // namespace

namespace {
OmegaGroup compute_omega_group(const RootDatum& d) {
    OmegaGroup g;
    std::vector<std::pair<WeylElt, OmegaSolve>> hits;
    for (const WeylElt& w : d.weyl_elements()) {
        OmegaSolve s = solve_length_zero(d, w);
        if (s.consistent) hits.emplace_back(w, s);
    }
    bool has_center = false;
    for (const auto& h : hits) has_center = has_center || !h.second.lattice.empty();

    if (!has_center) {
        g.finite = true;
        for (const auto& h : hits) {
            AffElt x{h.second.particular, h.first.m};
            if (!is_length_zero(d, x)) continue;  // nonsimple positive root failed
            g.elements.push_back(x);
        }
        std::sort(g.elements.begin(), g.elements.end());
        // Minimal generating set by greedy closure.
        std::vector<AffElt> gen;
        std::vector<AffElt> closed{aff_identity(d)};
        auto contains = [&](const AffElt& x) {
            return std::find(closed.begin(), closed.end(), x) != closed.end();
        };
        for (const auto& x : g.elements) {
            if (contains(x)) continue;
            gen.push_back(x);
            for (size_t head = 0; head < closed.size(); ++head)
                for (const auto& y : gen) {
                    AffElt p = aff_mul(closed[head], y);
                    if (!contains(p)) closed.push_back(p);
                }
        }
        g.generators = gen;
    } else {
        g.finite = false;
        // The free coordinate of the untwisted lattice quotient X / Q^vee
        // distinguishes the powers of the free generator (the length-zero
        // subgroup itself does not depend on the twist); pick a
        // representative with free part 1.
        DiagramAutomorphism untwisted;
        untwisted.m = IMat::identity(d.rank);
        untwisted.mi = IMat::identity(d.rank);
        untwisted.order = 1;
        KottwitzProjector kp = kottwitz_projector(d, untwisted);
        std::vector<AffElt> candidates;
        for (const auto& h : hits) {
            // Normalize the smallest entry to 0 when the central direction
            // is the all-ones vector (GL_n); otherwise keep as solved.
            IVec lam = h.second.particular;
            if (h.second.lattice.size() == 1) {
                const IVec& dir = h.second.lattice[0];
                bool all_ones = true;
                for (long long v : dir) all_ones = all_ones && v == 1;
                if (all_ones) {
                    long long mn = lam[0];
                    for (long long v : lam) mn = std::min(mn, v);
                    for (auto& v : lam) v -= mn;
                }
            }
            AffElt x{lam, h.first.m};
            if (!is_length_zero(d, x)) continue;
            candidates.push_back(x);
        }
        std::sort(candidates.begin(), candidates.end());
        for (const auto& x : candidates) {
            KottwitzClass k = kp.project(x.t);
            if (k.free_part.size() == 1 && k.free_part[0] == 1 && k.torsion.empty()) {
                g.free_generator = x;
                break;
            }
        }
        if (!g.free_generator) fail("no free generator found for infinite Omega");
        g.generators = {*g.free_generator};
    }
    return g;
}
}  // namespace

const OmegaGroup& omega_group(const RootDatum& d) {
    std::call_once(d.lazy_once[1], [&d] {
        d.lazy_slot[1] = std::make_shared<OmegaGroup>(compute_omega_group(d));
    });
    return *static_cast<const OmegaGroup*>(d.lazy_slot[1].get());
}

std::vector<AffElt> omega_window(const RootDatum& d, int window) {
    const OmegaGroup& g = omega_group(d);
    if (g.finite) return g.elements;
    std::vector<AffElt> out;
    AffElt tau = *g.free_generator;
    AffElt taui = aff_inverse(tau);
    AffElt cur = aff_identity(d);
    out.push_back(cur);
    AffElt up = cur, down = cur;
    for (int k = 1; k <= window; ++k) {
        up = aff_mul(up, tau);
        down = aff_mul(down, taui);
        out.push_back(up);
        out.push_back(down);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool bruhat_leq(const RootDatum& d, const AffElt& x0, const AffElt& y0) {
    const auto& sa = simple_affine_reflections(d);
    AffElt x = x0, y = y0;
    long long lx = aff_length(d, x), ly = aff_length(d, y);
    while (ly > 0) {
        if (lx > ly) return false;
        int pick = -1;
        for (int i = 0; i < sa.size(); ++i) {
            AffElt ny = aff_mul(sa.elts[static_cast<size_t>(i)], y);
            if (aff_length(d, ny) < ly) { pick = i; y = ny; break; }
        }
        if (pick < 0) fail("no descent on an element of positive length");
        --ly;
        AffElt nx = aff_mul(sa.elts[static_cast<size_t>(pick)], x);
        long long lnx = aff_length(d, nx);
        if (lnx < lx) { x = nx; lx = lnx; }
    }
    return x == y;
}

bool KottwitzClass::is_zero() const {
    for (const auto& t : torsion) if (t.first != 0) return false;
    return ivec_is_zero(free_part);
}

std::string KottwitzClass::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : torsion) {
        if (!first) os << ";";
        os << t.first << " mod " << t.second;
        first = false;
    }
    for (long long v : free_part) {
        if (!first) os << ";";
        os << v;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

KottwitzClass KottwitzProjector::project(const IVec& lambda) const {
    IVec c = u.apply(lambda);
    KottwitzClass k;
    for (size_t i = 0; i < c.size(); ++i) {
        long long di = i < d.size() ? d[i] : 0;
        if (di == 1) continue;
        if (di == 0) {
            k.free_part.push_back(c[i]);
        } else {
            long long v = c[i] % di;
            if (v < 0) v += di;
            k.torsion.emplace_back(v, di);
        }
    }
    return k;
}

KottwitzProjector kottwitz_projector(const RootDatum& dat, const DiagramAutomorphism& s) {
    int r = dat.rank;
    int n = dat.ss_rank();
    IMat a(r, n + r);
    for (int j = 0; j < n; ++j) {
        const IVec& cv = dat.coroots[static_cast<size_t>(dat.simples[static_cast<size_t>(j)])];
        for (int i = 0; i < r; ++i) a.at(i, j) = cv[static_cast<size_t>(i)];
    }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            a.at(i, n + j) = (i == j ? 1 : 0) - s.m.at(i, j);
    SmithForm f = smith_normal_form(a);
    // Normalize free rows of U: first nonzero entry positive.
    int nmin = std::min(a.rows, a.cols);
    for (int i = 0; i < r; ++i) {
        bool free_row = i >= nmin || f.d[static_cast<size_t>(i)] == 0;
        if (!free_row) continue;
        for (int j = 0; j < r; ++j) {
            if (f.u.at(i, j) == 0) continue;
            if (f.u.at(i, j) < 0)
                for (int k = 0; k < r; ++k) f.u.at(i, k) = -f.u.at(i, k);
            break;
        }
    }
    KottwitzProjector kp;
    kp.u = f.u;
    kp.d = f.d;
    return kp;
}

KottwitzClass kottwitz_point(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x) {
    return kottwitz_projector(d, s).project(x.t);
}

AffElt twisted_power(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x, int n) {
    // (x sigma)^n sigma^{-n} = x . sigma(x) . sigma^2(x) ... sigma^{n-1}(x)
    AffElt acc = aff_identity(d);
    AffElt cur = x;
    for (int i = 0; i < n; ++i) {
        acc = aff_mul(acc, cur);
        if (i + 1 < n) cur = sigma_aff(s, cur);
    }
    return acc;
}

bool aff_root_positive(const RootDatum& d, const AffRoot& a) {
    return d.is_positive(a.root) ? a.level >= 0 : a.level >= 1;
}

AffRoot aff_root_apply(const RootDatum& d, const IMat& linear, const IVec& translation, const AffRoot& a) {
    int img = d.apply_to_root(linear, a.root);
    return {img, a.level - d.pair(img, translation)};
}

AffRoot aff_root_apply(const RootDatum& d, const AffElt& x, const AffRoot& a) {
    return aff_root_apply(d, x.w, x.t, a);
}

}  // namespace fundalc
