#include "fundalc/newton.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fundalc {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

int linear_order(const IMat& l) {
    IMat p = l;
    int n = 1;
    while (!p.is_identity()) {
        p = p * l;
        if (++n > 10000) fail("linear part has no small finite order");
    }
    return n;
}
}  // namespace

QVec newton_vector(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x) {
    IMat l = x.w * s.m;
    int n = linear_order(l);
    QVec sum = to_qvec(x.t);
    QVec cur = to_qvec(x.t);
    for (int i = 1; i < n; ++i) {
        cur = l.apply(cur);
        sum = qvec_add(sum, cur);
    }
    (void)d;
    return qvec_scale(Rat(1, n), sum);
}

NewtonDatum newton_point(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x) {
    NewtonDatum nd;
    IMat l = x.w * s.m;
    nd.period = linear_order(l);
    nd.nu = newton_vector(d, s, x);
    nd.nu_dom = dominant_representative(d, nd.nu).first;
    nd.kappa = kottwitz_point(d, s, x);

    // V_x = { v : (L - Id) v = nu - lambda }.
    QMat a(d.rank, d.rank);
    for (int i = 0; i < d.rank; ++i)
        for (int j = 0; j < d.rank; ++j)
            a.at(i, j) = Rat(l.at(i, j) - (i == j ? 1 : 0));
    QVec rhs = qvec_sub(nd.nu, to_qvec(x.t));
    auto base = solve_linear(a, rhs);
    if (!base) fail("moved subspace is empty");
    nd.base = *base;
    nd.dirs = kernel_basis(a);
    return nd;
}

Rat two_rho_pairing(const RootDatum& d, const QVec& v) { return dot(d.two_rho, v); }

bool is_straight(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x) {
    QVec nu = newton_vector(d, s, x);
    QVec nu_dom = dominant_representative(d, nu).first;
    return Rat(aff_length(d, x)) == two_rho_pairing(d, nu_dom);
}

void require_levi_subset(const RootDatum& d, const std::vector<int>& levi_roots) {
    std::set<int> in(levi_roots.begin(), levi_roots.end());
    for (int i : levi_roots) {
        if (i < 0 || i >= d.num_roots()) fail("levi root index out of range");
        if (!in.count(d.negative_of(i))) fail("levi root set is not symmetric");
    }
    if (levi_roots.empty()) return;
    // Phi intersect span(levi_roots) must equal levi_roots: check every root
    // for membership in the span of the given characters.
    QMat span(static_cast<int>(levi_roots.size()), d.rank);
    for (size_t k = 0; k < levi_roots.size(); ++k)
        for (int j = 0; j < d.rank; ++j)
            span.at(static_cast<int>(k), j) = Rat(d.roots[static_cast<size_t>(levi_roots[k])][static_cast<size_t>(j)]);
    QMat spanT(d.rank, static_cast<int>(levi_roots.size()));
    for (int i = 0; i < span.rows; ++i)
        for (int j = 0; j < span.cols; ++j) spanT.at(j, i) = span.at(i, j);
    for (int r = 0; r < d.num_roots(); ++r) {
        bool member = in.count(r) > 0;
        bool in_span = solve_linear(spanT, to_qvec(d.roots[static_cast<size_t>(r)])).has_value();
        if (in_span && !member) fail("levi root set is not of Levi type (not span-closed)");
    }
}

std::optional<QVec> l_permissible_witness(const RootDatum& d, const DiagramAutomorphism& s,
                                          const AffElt& x, const std::vector<int>& levi_roots) {
    require_levi_subset(d, levi_roots);
    IMat g = x.w * s.m;

    // g must stabilize the Levi root set.
    std::set<int> in(levi_roots.begin(), levi_roots.end());
    for (int i : levi_roots)
        if (!in.count(d.apply_to_root(g, i))) return std::nullopt;

    // Fixed subspace orthogonal to the Levi roots: kernel of the stacked
    // system [ pairing rows ; g - Id ].
    int nl = static_cast<int>(levi_roots.size());
    QMat sys(nl + d.rank, d.rank);
    for (int k = 0; k < nl; ++k)
        for (int j = 0; j < d.rank; ++j)
            sys.at(k, j) = Rat(d.roots[static_cast<size_t>(levi_roots[static_cast<size_t>(k)])][static_cast<size_t>(j)]);
    for (int i = 0; i < d.rank; ++i)
        for (int j = 0; j < d.rank; ++j)
            sys.at(nl + i, j) = Rat(g.at(i, j) - (i == j ? 1 : 0));
    std::vector<QVec> basis = kernel_basis(sys);
    // Integral basis vectors keep all root pairings integral, which makes
    // the dominating-weight bound below valid.
    for (QVec& b : basis) {
        long long lcm = 1;
        for (const Rat& q : b) lcm = std::lcm(lcm, q.den);
        for (Rat& q : b) q *= Rat(lcm);
    }
    if (basis.empty()) {
        // Only the zero vector is fixed; works exactly when the Levi is all
        // of Phi.
        if (2 * nl == d.num_roots())
            return QVec(static_cast<size_t>(d.rank), Rat(0));
        return std::nullopt;
    }

    // Every root outside the Levi must pair nontrivially with some basis
    // vector; finitely many proper subspaces cannot cover the fixed space.
    for (int r = 0; r < d.num_positive; ++r) {
        if (in.count(r)) continue;
        bool nonzero = false;
        for (const QVec& b : basis) nonzero = nonzero || !d.pair(r, b).is_zero();
        if (!nonzero) return std::nullopt;
    }

    // Deterministic generic combination: weights T^k with T dominating all
    // partial sums, so no pairing collapses.
    Rat tbound(1);
    for (int r = 0; r < d.num_positive; ++r)
        for (const QVec& b : basis) {
            Rat v = d.pair(r, b);
            if (v.sign() < 0) v = -v;
            tbound += v;
        }
    long long t = tbound.floor() + 1;
    QVec lam(static_cast<size_t>(d.rank), Rat(0));
    Rat weight(1);
    for (const QVec& b : basis) {
        lam = qvec_add(lam, qvec_scale(weight, b));
        weight *= Rat(t);
    }

    // Validate the certificate exactly.
    for (int r = 0; r < d.num_positive; ++r) {
        bool zero = d.pair(r, lam).is_zero();
        if (zero != (in.count(r) > 0)) fail("generic combination failed to separate");
    }
    QVec moved = g.apply(lam);
    if (!(moved == lam)) fail("certificate is not fixed");
    return lam;
}

bool l_permissible(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x,
                   const std::vector<int>& levi_roots) {
    return l_permissible_witness(d, s, x, levi_roots).has_value();
}

}  // namespace fundalc
