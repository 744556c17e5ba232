#include <doctest.h>

#include <random>
#include <set>

#include "fundalc/affine.hpp"

using namespace fundalc;

namespace {

AffElt tr(std::initializer_list<long long> v) { return aff_translation(IVec(v)); }

AffElt finite_s(const RootDatum& d, int i) { return aff_from_weyl(d.simple_reflection(i)); }

}  // namespace

TEST_CASE("group laws in the extended affine Weyl group") {
    RootDatum gl2 = build_root_datum("GL2");
    AffElt s = finite_s(gl2, 0);
    AffElt x = aff_mul(tr({1, 0}), s);

    CHECK(aff_is_identity(aff_mul(x, aff_inverse(x))));
    CHECK(aff_mul(tr({1, 0}), tr({0, 1})) == tr({1, 1}));
    // s t^{(1,0)} s^{-1} = t^{(0,1)}
    CHECK(aff_mul(aff_mul(s, tr({1, 0})), aff_inverse(s)) == tr({0, 1}));

    std::mt19937_64 rng(3);
    const auto& sa = simple_affine_reflections(gl2);
    auto random_elt = [&] {
        AffElt e = tr({static_cast<long long>(rng() % 5) - 2, static_cast<long long>(rng() % 5) - 2});
        for (int k = 0; k < 3; ++k) e = aff_mul(e, sa.elts[rng() % sa.elts.size()]);
        return e;
    };
    for (int t = 0; t < 50; ++t) {
        AffElt a = random_elt(), b = random_elt(), c = random_elt();
        CHECK(aff_mul(aff_mul(a, b), c) == aff_mul(a, aff_mul(b, c)));
    }
}

TEST_CASE("m-vector values") {
    RootDatum gl2 = build_root_datum("GL2");
    AffElt s = finite_s(gl2, 0);

    CHECK(m_vector(gl2, aff_identity(gl2)) == std::vector<long long>{-1});
    CHECK(m_vector(gl2, aff_mul(tr({0, 1}), s)) == std::vector<long long>{-1});
    CHECK(m_vector(gl2, aff_mul(tr({1, 0}), s)) == std::vector<long long>{1});

    // Interior sampling cross-check: m < <alpha, p> < m+1 for the interior
    // point of the image alcove.
    RootDatum g2 = build_root_datum("G2-sc");
    const auto& sa = simple_affine_reflections(g2);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        AffElt x = aff_identity(g2);
        for (int k = 0; k < 6; ++k) x = aff_mul(x, sa.elts[rng() % sa.elts.size()]);
        QVec p = aff_act(x, g2.base_point);
        for (int i = 0; i < g2.num_positive; ++i) {
            Rat v = g2.pair(i, p);
            long long m = alcove_floor(g2, x, i);
            CHECK(Rat(m) < v);
            CHECK(v < Rat(m + 1));
        }
    }
}

TEST_CASE("length examples") {
    RootDatum gl2 = build_root_datum("GL2");
    AffElt s = finite_s(gl2, 0);
    CHECK(aff_length(gl2, aff_mul(tr({0, 1}), s)) == 0);  // tau
    CHECK(aff_length(gl2, tr({1, 0})) == 1);
    CHECK(aff_length(gl2, tr({1, 1})) == 0);

    RootDatum sl2 = build_root_datum("SL2");
    const auto& sa2 = simple_affine_reflections(sl2);
    CHECK(sa2.size() == 2);
    CHECK(aff_length(sl2, sa2.elts[1]) == 1);  // affine wall reflection

    // Dominant translations: l(t^lambda) = <2 rho, lambda>.
    RootDatum gl3 = build_root_datum("GL3");
    std::mt19937_64 rng(17);
    for (int t = 0; t < 30; ++t) {
        IVec lam{static_cast<long long>(rng() % 5), 0, 0};
        lam[1] = rng() % (lam[0] + 1);
        lam[2] = rng() % (lam[1] + 1);
        CHECK(aff_length(gl3, aff_translation(lam)) == dot(gl3.two_rho, lam));
    }
}

TEST_CASE("length properties") {
    for (const char* key : {"GL2", "SL3", "Sp4-sc"}) {
        CAPTURE(key);
        RootDatum d = build_root_datum(key);
        const auto& sa = simple_affine_reflections(d);
        std::mt19937_64 rng(23);
        auto random_elt = [&] {
            IVec lam(static_cast<size_t>(d.rank));
            for (auto& v : lam) v = static_cast<long long>(rng() % 5) - 2;
            AffElt e = aff_translation(lam);
            for (int k = 0; k < 4; ++k) e = aff_mul(e, sa.elts[rng() % sa.elts.size()]);
            return e;
        };
        for (int t = 0; t < 60; ++t) {
            AffElt x = random_elt(), y = random_elt();
            long long lx = aff_length(d, x), ly = aff_length(d, y);
            CHECK(aff_length(d, aff_inverse(x)) == lx);
            CHECK(aff_length(d, aff_mul(x, y)) <= lx + ly);
            for (const auto& s : sa.elts) {
                long long ls = aff_length(d, aff_mul(s, x));
                CHECK((ls == lx + 1 || ls == lx - 1));
            }
        }
        // Omega-bi-invariance of length.
        for (const AffElt& w1 : omega_window(d, 1))
            for (const AffElt& w2 : omega_window(d, 1))
                for (int t = 0; t < 10; ++t) {
                    AffElt x = random_elt();
                    CHECK(aff_length(d, aff_mul(aff_mul(w1, x), w2)) == aff_length(d, x));
                }
    }
}

TEST_CASE("simple affine reflections have length one and generate") {
    for (const char* key : {"SL2", "GL3", "Sp4-sc", "G2-sc"}) {
        CAPTURE(key);
        RootDatum d = build_root_datum(key);
        const auto& sa = simple_affine_reflections(d);
        for (const auto& s : sa.elts) CHECK(aff_length(d, s) == 1);
        if (std::string(key) == "GL3") CHECK(sa.size() == 3);
    }
}

TEST_CASE("reduced words") {
    RootDatum sl2 = build_root_datum("SL2");
    // t^{-alpha^vee} has length 2 = <2rho, alpha^vee>.
    AffElt t_neg = tr({-1});
    CHECK(aff_length(sl2, t_neg) == 2);
    ReducedWord rw = reduced_word(sl2, t_neg);
    CHECK(rw.letters.size() == 2);
    CHECK(aff_is_identity(rw.omega));

    RootDatum gl2 = build_root_datum("GL2");
    ReducedWord c = reduced_word(gl2, tr({1, 1}));
    CHECK(c.letters.empty());
    CHECK(c.omega == tr({1, 1}));

    // Reconstruction over random elements, both tie-break policies.
    for (const char* key : {"GL2", "SL3", "Sp4-sc"}) {
        CAPTURE(key);
        RootDatum d = build_root_datum(key);
        const auto& sa = simple_affine_reflections(d);
        std::mt19937_64 rng(31);
        for (int t = 0; t < 40; ++t) {
            IVec lam(static_cast<size_t>(d.rank));
            for (auto& v : lam) v = static_cast<long long>(rng() % 5) - 2;
            AffElt x = aff_translation(lam);
            for (int k = 0; k < 3; ++k) x = aff_mul(x, sa.elts[rng() % sa.elts.size()]);
            for (bool high : {false, true}) {
                ReducedWord w = reduced_word(d, x, high);
                CHECK(static_cast<long long>(w.letters.size()) == aff_length(d, x));
                CHECK(aff_length(d, w.omega) == 0);
                AffElt prod = aff_identity(d);
                for (int letter : w.letters) prod = aff_mul(prod, sa.elts[static_cast<size_t>(letter)]);
                prod = aff_mul(prod, w.omega);
                CHECK(prod == x);
            }
        }
    }
}

TEST_CASE("omega groups") {
    RootDatum sl2 = build_root_datum("SL2");
    const OmegaGroup& o1 = omega_group(sl2);
    CHECK(o1.finite);
    CHECK(o1.elements.size() == 1);

    RootDatum pgl2 = build_root_datum("PGL2");
    const OmegaGroup& o2 = omega_group(pgl2);
    CHECK(o2.finite);
    CHECK(o2.elements.size() == 2);
    for (const auto& w : o2.elements) CHECK(aff_length(pgl2, w) == 0);

    RootDatum gl2 = build_root_datum("GL2");
    const OmegaGroup& o3 = omega_group(gl2);
    CHECK(!o3.finite);
    REQUIRE(o3.free_generator.has_value());
    AffElt tau = *o3.free_generator;
    CHECK(tau.t == IVec{0, 1});
    CHECK(!tau.w.is_identity());
    CHECK(aff_mul(tau, tau) == tr({1, 1}));
    CHECK(omega_window(gl2, 2).size() == 5);

    RootDatum g2 = build_root_datum("G2-sc");
    CHECK(omega_group(g2).elements.size() == 1);

    RootDatum sl4 = build_root_datum("SL4");
    CHECK(omega_group(sl4).elements.size() == 1);
}

TEST_CASE("bruhat order") {
    RootDatum sl2 = build_root_datum("SL2");
    const auto& sa = simple_affine_reflections(sl2);
    AffElt s = sa.elts[0], s0 = sa.elts[1];

    CHECK(bruhat_leq(sl2, s, s));
    CHECK(bruhat_leq(sl2, aff_identity(sl2), s0));
    CHECK(!bruhat_leq(sl2, s, s0));  // equal length, different elements
    CHECK(bruhat_leq(sl2, s, aff_mul(aff_mul(s0, s), s0)));

    // Partial-order sanity on small random families.
    RootDatum gl2 = build_root_datum("GL2");
    const auto& sb = simple_affine_reflections(gl2);
    std::mt19937_64 rng(41);
    std::vector<AffElt> pool;
    for (int t = 0; t < 30; ++t) {
        AffElt x = omega_window(gl2, 1)[rng() % 3];
        for (int k = 0; k < static_cast<int>(rng() % 5); ++k)
            x = aff_mul(sb.elts[rng() % sb.elts.size()], x);
        pool.push_back(x);
    }
    for (const auto& x : pool)
        for (const auto& y : pool) {
            bool xy = bruhat_leq(gl2, x, y);
            if (xy) CHECK(aff_length(gl2, x) <= aff_length(gl2, y));
            if (xy && bruhat_leq(gl2, y, x)) CHECK(x == y);
            for (const auto& z : pool)
                if (xy && bruhat_leq(gl2, y, z)) CHECK(bruhat_leq(gl2, x, z));
        }
}

TEST_CASE("kottwitz points") {
    RootDatum gl2 = build_root_datum("GL2");
    KottwitzProjector kp = kottwitz_projector(gl2, gl2.sigma);

    KottwitzClass k1 = kp.project(IVec{1, 0});
    CHECK(k1.torsion.empty());
    CHECK(k1.free_part == IVec{1});

    CHECK(kottwitz_point(gl2, gl2.sigma, aff_identity(gl2)).is_zero());
    AffElt tau = *omega_group(gl2).free_generator;
    CHECK(kottwitz_point(gl2, gl2.sigma, tau) == k1);

    // Additivity.
    std::mt19937_64 rng(53);
    const auto& sa = simple_affine_reflections(gl2);
    auto random_elt = [&] {
        AffElt e = aff_translation(IVec{static_cast<long long>(rng() % 5) - 2,
                                        static_cast<long long>(rng() % 5) - 2});
        for (int k = 0; k < 3; ++k) e = aff_mul(e, sa.elts[rng() % sa.elts.size()]);
        return e;
    };
    auto kadd = [](const KottwitzClass& a, const KottwitzClass& b) {
        KottwitzClass r = a;
        for (size_t i = 0; i < r.torsion.size(); ++i) {
            r.torsion[i].first = (r.torsion[i].first + b.torsion[i].first) % r.torsion[i].second;
        }
        for (size_t i = 0; i < r.free_part.size(); ++i) r.free_part[i] += b.free_part[i];
        return r;
    };
    for (int t = 0; t < 40; ++t) {
        AffElt a = random_elt(), b = random_elt();
        CHECK(kottwitz_point(gl2, gl2.sigma, aff_mul(a, b)) ==
              kadd(kottwitz_point(gl2, gl2.sigma, a), kottwitz_point(gl2, gl2.sigma, b)));
    }

    RootDatum pgl2 = build_root_datum("PGL2");
    const auto& o = omega_group(pgl2).elements;
    std::set<KottwitzClass> classes;
    for (const auto& w : o) classes.insert(kottwitz_point(pgl2, pgl2.sigma, w));
    CHECK(classes.size() == 2);
}

TEST_CASE("twisted powers") {
    RootDatum gl2 = build_root_datum("GL2");
    AffElt tau = *omega_group(gl2).free_generator;
    CHECK(twisted_power(gl2, gl2.sigma, tau, 2) == tr({1, 1}));

    RootDatum d = build_root_datum("SL3@2");
    const auto& sa = simple_affine_reflections(d);
    // sigma-twisted square of a simple reflection: s * sigma(s).
    for (const auto& s : sa.elts) {
        AffElt p2 = twisted_power(d, d.sigma, s, 2);
        CHECK(p2 == aff_mul(s, sigma_aff(d.sigma, s)));
    }
}

TEST_CASE("rank mismatch is rejected") {
    RootDatum gl2 = build_root_datum("GL2");
    RootDatum gl3 = build_root_datum("GL3");
    CHECK_THROWS(aff_mul(aff_identity(gl2), aff_identity(gl3)));
}

TEST_CASE("affine root positivity and action") {
    RootDatum sl2 = build_root_datum("SL2");
    CHECK(aff_root_positive(sl2, {0, 0}));        // alpha + 0
    CHECK(!aff_root_positive(sl2, {0, -1}));
    CHECK(aff_root_positive(sl2, {1, 1}));        // -alpha + 1
    CHECK(!aff_root_positive(sl2, {1, 0}));

    // The affine wall reflection negates its own wall root alpha + 1.
    const auto& sa = simple_affine_reflections(sl2);
    AffRoot img = aff_root_apply(sl2, sa.elts[1], {0, 1});
    CHECK(img == AffRoot{1, -1});  // -(alpha + 1)
}
