#include "fundalc/classifier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fundalc {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

std::string describe(const AffElt& x) {
    std::ostringstream os;
    os << "t[";
    for (size_t i = 0; i < x.t.size(); ++i) os << (i ? "," : "") << x.t[i];
    os << "] w=[";
    for (size_t i = 0; i < x.w.a.size(); ++i) os << (i ? "," : "") << x.w.a[i];
    os << "]";
    return os.str();
}

std::vector<int> newton_levi_roots(const RootDatum& d, const QVec& nu,
                                   const std::vector<int>& ambient) {
    std::vector<int> out;
    for (int r : ambient)
        if (d.pair(r, nu).is_zero()) out.push_back(r);
    return out;
}

LeviContext full_context(const RootDatum& d) { return levi_context_full(d); }

}  // namespace

AffElt x_part_in(const RootDatum&, const DiagramAutomorphism& s, const AffElt& x,
                 const LeviContext& nl) {
    if (!nl.preserved_by(x.w * s.m)) fail("composite does not preserve the Newton Levi");
    AffElt z = x;
    long long len = nl.rel_length(z);
    while (len > 0) {
        bool moved = false;
        for (const AffElt& r : nl.sa.elts) {
            AffElt z2 = aff_mul(z, sigma_aff(s, r));
            long long l2 = nl.rel_length(z2);
            if (l2 < len) { z = z2; len = l2; moved = true; break; }
        }
        if (!moved) fail("no relative descent while reducing the coset point");
    }
    return z;
}

AffElt x_part(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x) {
    QVec nu = newton_vector(d, s, x);
    std::vector<int> ambient(static_cast<size_t>(d.num_roots()));
    for (int i = 0; i < d.num_roots(); ++i) ambient[static_cast<size_t>(i)] = i;
    LeviContext nl = levi_context(d, newton_levi_roots(d, nu, ambient));
    return x_part_in(d, s, x, nl);
}

CosetCriterion coset_criterion(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x,
                               const LeviContext& ambient, bool k_variant) {
    CosetCriterion res;
    QVec nu = newton_vector(d, s, x);
    LeviContext nl = levi_context(d, newton_levi_roots(d, nu, ambient.all));

    res.y = x_part_in(d, s, x, nl);
    const AffElt& y = res.y;

    // Straight inside the ambient subsystem: relative length equals the
    // pairing of the subsystem's 2 rho with the relative dominant drift.
    QVec nu_y = newton_vector(d, s, y);
    QVec nu_y_dom = ambient.rel_dominant(nu_y).first;
    res.y_straight = Rat(ambient.rel_length(y)) == dot(ambient.two_rho, nu_y_dom);

    res.additive = ambient.rel_length(x) == ambient.rel_length(y) + nl.rel_length(x);

    if (res.y_straight && res.additive) {
        // u with x = y sigma(u), u in the Newton Levi's affine Weyl group.
        DiagramAutomorphism sinv;
        sinv.m = s.mi;
        sinv.mi = s.m;
        sinv.order = s.order;
        sinv.simple_perm.assign(s.simple_perm.size(), 0);
        for (size_t i = 0; i < s.simple_perm.size(); ++i)
            sinv.simple_perm[static_cast<size_t>(s.simple_perm[i])] = static_cast<int>(i);
        AffElt u = sigma_aff(sinv, aff_mul(aff_inverse(y), x));
        if (!(aff_mul(y, sigma_aff(s, u)) == x)) fail("coset quotient mismatch");
        std::vector<int> support_word = nl.rel_word(u);
        std::set<int> supp(support_word.begin(), support_word.end());

        // Search J containing the support, inside the allowed letter set.
        int nletters = nl.sa.size();
        std::vector<int> allowed;
        for (int i = 0; i < nletters; ++i) {
            if (k_variant && nl.sa.finite_simple[static_cast<size_t>(i)] < 0) continue;
            allowed.push_back(i);
        }
        bool supp_ok = true;
        for (int i : supp) supp_ok = supp_ok && std::count(allowed.begin(), allowed.end(), i) > 0;

        if (supp_ok) {
            AffElt yi = aff_inverse(y);
            std::vector<std::vector<int>> subsets;
            int na = static_cast<int>(allowed.size());
            for (unsigned mask = 0; mask < (1u << na); ++mask) {
                std::vector<int> jset;
                for (int i = 0; i < na; ++i)
                    if (mask & (1u << i)) jset.push_back(allowed[static_cast<size_t>(i)]);
                bool covers = true;
                for (int i : supp) covers = covers && std::count(jset.begin(), jset.end(), i) > 0;
                if (covers) subsets.push_back(std::move(jset));
            }
            std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
                if (a.size() != b.size()) return a.size() < b.size();
                return a < b;
            });
            auto finite_parabolic = [&](const std::vector<int>& jset) {
                if (k_variant) return true;  // inside the finite Weyl group
                std::vector<int> count(static_cast<size_t>(std::max(nl.num_components, 1)), 0);
                std::vector<int> total(static_cast<size_t>(std::max(nl.num_components, 1)), 0);
                for (int i = 0; i < nletters; ++i)
                    ++total[static_cast<size_t>(nl.sa.component[static_cast<size_t>(i)])];
                for (int i : jset) ++count[static_cast<size_t>(nl.sa.component[static_cast<size_t>(i)])];
                for (int c = 0; c < nl.num_components; ++c)
                    if (count[static_cast<size_t>(c)] == total[static_cast<size_t>(c)]) return false;
                return true;
            };
            for (const auto& jset : subsets) {
                if (!finite_parabolic(jset)) continue;
                std::vector<AffElt> expect;
                for (int i : jset) expect.push_back(nl.sa.elts[static_cast<size_t>(i)]);
                std::sort(expect.begin(), expect.end());
                std::vector<AffElt> got;
                for (int i : jset)
                    got.push_back(aff_mul(aff_mul(y, sigma_aff(s, nl.sa.elts[static_cast<size_t>(i)])), yi));
                std::sort(got.begin(), got.end());
                if (expect == got) { res.j = jset; break; }
            }
        }
    }
    res.holds = res.y_straight && res.additive && res.j.has_value();
    return res;
}

bool is_k_fundamental(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x) {
    LeviContext full = full_context(d);
    CosetCriterion b = coset_criterion(d, s, x, full, /*k_variant=*/true);

    QVec nu = newton_vector(d, s, x);
    VDatum vd = make_vdatum(d, nu);
    bool c = is_p_alcove(d, s, x, vd);
    if (c) {
        LeviContext levi = levi_context(d, vd.zero);
        c = coset_criterion(d, s, x, levi, /*k_variant=*/true).holds;
    }
    if (b.holds != c)
        fail("one-class criteria disagree (K scale) on " + describe(x));
    return b.holds;
}

bool is_gl_fundamental(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x) {
    LeviContext full = full_context(d);
    CosetCriterion b = coset_criterion(d, s, x, full, /*k_variant=*/false);

    QVec nu = newton_vector(d, s, x);
    VDatum vd = make_vdatum(d, nu);
    bool c = is_p_alcove(d, s, x, vd);
    if (c) {
        LeviContext levi = levi_context(d, vd.zero);
        c = coset_criterion(d, s, x, levi, /*k_variant=*/false).holds;
    }
    if (b.holds != c)
        fail("one-class criteria disagree (loop group scale) on " + describe(x));
    return b.holds;
}

FundamentalResult is_fundamental(const RootDatum& d, const DiagramAutomorphism& s, const AffElt& x) {
    FundamentalResult res;
    res.fundamental = is_straight(d, s, x);

    // Witness search mirrors the reduction argument: walk the
    // length-preserving closure until some element is fundamental for its
    // own drift datum; the transported vector back at x is nu_x.
    bool found = false;
    for (const AffElt& z : length_preserving_closure(d, s, x)) {
        QVec nu_z = newton_vector(d, s, z);
        VDatum vd = make_vdatum(d, nu_z);
        if (is_p_fundamental(d, s, z, vd)) { found = true; break; }
    }
    if (found) {
        VDatum vd = make_vdatum(d, newton_vector(d, s, x));
        if (!is_p_fundamental(d, s, x, vd))
            fail("witness transport failed at " + describe(x));
        res.witness = vd;
    }
    if (found != res.fundamental)
        fail("witness search disagrees with straightness on " + describe(x));
    return res;
}

bool is_minuscule(const RootDatum& d, const IVec& mu) {
    for (int r = 0; r < d.num_positive; ++r) {
        long long v = d.pair(r, mu);
        if (v < -1 || v > 1) return false;
    }
    return true;
}

MinusculeReport minuscule_report(const RootDatum& d, const DiagramAutomorphism& s, const IVec& mu) {
    if (static_cast<int>(mu.size()) != d.rank) fail("cocharacter has the wrong rank");
    if (!is_minuscule(d, mu)) fail("cocharacter is not minuscule");

    // Double coset W t^mu W = { t^eta w : eta in the orbit of mu, w in W }.
    std::set<IVec> orbit;
    for (const WeylElt& w : d.weyl_elements()) orbit.insert(w.m.apply(mu));
    std::vector<AffElt> coset;
    for (const IVec& eta : orbit)
        for (const WeylElt& w : d.weyl_elements())
            coset.push_back(aff_mul(aff_translation(eta), aff_from_weyl(w)));
    std::sort(coset.begin(), coset.end());

    MinusculeReport report;
    std::map<AffElt, std::unordered_set<AffElt, AffEltHash>> closure_cache;
    const auto& sa = simple_affine_reflections(d);

    for (const AffElt& elt : coset) {
        MinusculeRow row;
        row.elt = elt;
        row.length = aff_length(d, elt);
        ReductionCertificate cert = straight_decomposition(d, s, elt);
        row.straight_rep = cert.straight;
        row.nu_dom = dominant_representative(d, newton_vector(d, s, cert.straight)).first;
        row.kappa = kottwitz_point(d, s, cert.straight);

        // Straight candidates under elt: all subword products of a reduced
        // word, times the length-zero residue.
        ReducedWord rw = reduced_word(d, elt);
        std::unordered_set<AffElt, AffEltHash> prods;
        prods.insert(aff_identity(d));
        for (int letter : rw.letters) {
            std::vector<AffElt> grown;
            for (const AffElt& z : prods)
                grown.push_back(aff_mul(z, sa.elts[static_cast<size_t>(letter)]));
            for (AffElt& z : grown) prods.insert(std::move(z));
        }
        std::vector<AffElt> candidates;
        for (const AffElt& z : prods) {
            AffElt below = aff_mul(z, rw.omega);
            if (!is_straight(d, s, below)) continue;
            QVec ndom = dominant_representative(d, newton_vector(d, s, below)).first;
            if (!(ndom == row.nu_dom)) continue;
            candidates.push_back(below);
        }
        std::sort(candidates.begin(), candidates.end(), [&](const AffElt& a, const AffElt& b) {
            long long la = aff_length(d, a), lb = aff_length(d, b);
            if (la != lb) return la < lb;
            return a < b;
        });

        if (!candidates.empty()) {
            auto it = closure_cache.find(cert.straight);
            if (it == closure_cache.end()) {
                long long cap = row.length + 2;
                it = closure_cache
                         .emplace(cert.straight,
                                  capped_conjugation_closure(d, s, cert.straight, cap,
                                                             /*include_omega=*/false))
                         .first;
            }
            for (const AffElt& y : candidates)
                if (it->second.count(y)) { row.witness = y; break; }
        }
        row.ok = row.witness.has_value() && bruhat_leq(d, *row.witness, elt);
        report.all_ok = report.all_ok && row.ok;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace fundalc
