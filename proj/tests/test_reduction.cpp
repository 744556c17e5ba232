#include <doctest.h>

#include "fundalc/enumerate.hpp"
#include "fundalc/reduction.hpp"

using namespace fundalc;

namespace {
AffElt tr(std::initializer_list<long long> v) { return aff_translation(IVec(v)); }
}

TEST_CASE("simple twisted conjugation") {
    RootDatum gl2 = build_root_datum("GL2");
    CHECK(sigma_conjugate_simple(gl2, gl2.sigma, tr({1, 0}), 0) == tr({0, 1}));

    RootDatum sl2 = build_root_datum("SL2");
    const auto& sa = simple_affine_reflections(sl2);
    AffElt s0 = sa.elts[1];
    AffElt up = sigma_conjugate_simple(sl2, sl2.sigma, s0, 0);
    CHECK(aff_length(sl2, up) == 3);  // conjugation may raise length

    // Identity twist, commuting element.
    AffElt c = tr({1, 1});
    CHECK(sigma_conjugate_simple(gl2, gl2.sigma, c, 0) == c);
}

TEST_CASE("reduction to minimal length") {
    RootDatum gl2 = build_root_datum("GL2");
    AffElt s = aff_from_weyl(gl2.simple_reflection(0));
    AffElt tau = aff_mul(tr({0, 1}), s);

    MinimalReduction r0 = reduce_to_minimal(gl2, gl2.sigma, tau);
    CHECK(r0.minimal == std::vector<AffElt>{tau});

    MinimalReduction r1 = reduce_to_minimal(gl2, gl2.sigma, s);
    CHECK(r1.minimal == std::vector<AffElt>{s});
    CHECK(r1.min_length == 1);

    RootDatum sl2 = build_root_datum("SL2");
    const auto& sa = simple_affine_reflections(sl2);
    AffElt x = aff_mul(aff_mul(sa.elts[1], sa.elts[0]), sa.elts[1]);  // length 3
    CHECK(aff_length(sl2, x) == 3);
    MinimalReduction r2 = reduce_to_minimal(sl2, sl2.sigma, x);
    CHECK(r2.min_length == 1);
    for (const AffElt& m : r2.minimal) {
        std::vector<ReductionStep> path = reduction_path(sl2, r2, m);
        CHECK(!path.empty());
        AffElt cur = x;
        for (const ReductionStep& st : path) {
            CHECK(st.from == cur);
            CHECK(sigma_conjugate_simple(sl2, sl2.sigma, cur, st.letter) == st.to);
            CHECK(aff_length(sl2, st.to) <= aff_length(sl2, st.from));
            cur = st.to;
        }
        CHECK(cur == m);
    }
}

TEST_CASE("straight decomposition certificates") {
    RootDatum gl2 = build_root_datum("GL2");
    AffElt s = aff_from_weyl(gl2.simple_reflection(0));
    AffElt tau = aff_mul(tr({0, 1}), s);

    // Straight elements decompose trivially.
    ReductionCertificate c0 = straight_decomposition(gl2, gl2.sigma, tau);
    CHECK(c0.straight == tau);
    CHECK(c0.j_letters.empty());
    CHECK(aff_is_identity(c0.u));

    ReductionCertificate c1 = straight_decomposition(gl2, gl2.sigma, s);
    CHECK(aff_is_identity(c1.straight));
    CHECK(c1.j_letters == std::vector<int>{0});
    CHECK(c1.u == s);

    RootDatum sl2 = build_root_datum("SL2");
    const auto& sa = simple_affine_reflections(sl2);
    ReductionCertificate c2 = straight_decomposition(sl2, sl2.sigma, sa.elts[1]);
    CHECK(aff_is_identity(c2.straight));
    CHECK(c2.j_letters == std::vector<int>{1});
    CHECK(c2.u == sa.elts[1]);
}

TEST_CASE("certificate invariants over an enumeration") {
    for (const char* key : {"GL2", "SL3", "SL3@2"}) {
        CAPTURE(key);
        RootDatum d = build_root_datum(key);
        const auto& sa = simple_affine_reflections(d);
        std::vector<int> sperm = sigma_on_letters(d, d.sigma);
        for (const AffElt& x : enumerate_elements(d, 4, 1)) {
            ReductionCertificate c = straight_decomposition(d, d.sigma, x);
            CHECK(is_straight(d, d.sigma, c.straight));
            CHECK(aff_mul(c.straight, c.u) == c.minimal);
            CHECK(bruhat_leq(d, c.straight, c.minimal));
            CHECK(newton_vector(d, d.sigma, c.minimal) == newton_vector(d, d.sigma, c.straight));
            // The straight part conjugates sigma(J) onto J.
            AffElt xi = aff_inverse(c.straight);
            for (int j : c.j_letters) {
                const AffElt& sj = sa.elts[static_cast<size_t>(sperm[static_cast<size_t>(j)])];
                AffElt img = aff_mul(aff_mul(c.straight, sj), xi);
                bool in_j = false;
                for (int k : c.j_letters) in_j = in_j || img == sa.elts[static_cast<size_t>(k)];
                CHECK(in_j);
            }
        }
    }
}

TEST_CASE("approximate equivalence") {
    RootDatum gl2 = build_root_datum("GL2");
    AffElt s = aff_from_weyl(gl2.simple_reflection(0));
    CHECK(approx_equiv(gl2, gl2.sigma, s, s));
    CHECK(approx_equiv(gl2, gl2.sigma, tr({1, 0}), tr({0, 1})));

    RootDatum sl2 = build_root_datum("SL2");
    const auto& sa = simple_affine_reflections(sl2);
    CHECK(!approx_equiv(sl2, sl2.sigma, sa.elts[0], sa.elts[1]));
}

TEST_CASE("straight class grouping at bound zero") {
    RootDatum sl2 = build_root_datum("SL2");
    auto groups = straight_class_reps(sl2, sl2.sigma, 0, 2, 2);
    REQUIRE(groups.size() == 1);
    CHECK(aff_is_identity(groups[0].rep));
    CHECK(groups[0].kappa.is_zero());
    CHECK(qvec_is_zero(groups[0].nu_dom));
}

TEST_CASE("straight class grouping in GL2") {
    RootDatum gl2 = build_root_datum("GL2");
    auto groups = straight_class_reps(gl2, gl2.sigma, 1, 3, 2);

    // Look up the group of a given element.
    auto group_of = [&](const AffElt& x) -> int {
        for (size_t i = 0; i < groups.size(); ++i)
            for (const AffElt& m : groups[i].members)
                if (m == x) return static_cast<int>(i);
        return -1;
    };
    AffElt s = aff_from_weyl(gl2.simple_reflection(0));
    AffElt tau = aff_mul(tr({0, 1}), s);
    int g_t10 = group_of(tr({1, 0}));
    int g_t01 = group_of(tr({0, 1}));
    int g_tau = group_of(tau);
    int g_id = group_of(aff_identity(gl2));
    int g_c = group_of(tr({1, 1}));
    REQUIRE(g_t10 >= 0);
    REQUIRE(g_tau >= 0);
    CHECK(g_t10 == g_t01);
    CHECK(g_t10 != g_tau);  // same kappa, different drift
    CHECK(g_id != g_c);
    CHECK(groups[static_cast<size_t>(g_tau)].kappa == groups[static_cast<size_t>(g_t10)].kappa);
    CHECK(!(groups[static_cast<size_t>(g_tau)].nu_dom == groups[static_cast<size_t>(g_t10)].nu_dom));

    // Every straight element lies in exactly one group.
    size_t total = 0;
    for (const auto& g : groups) total += g.members.size();
    size_t straight_count = 0;
    for (const AffElt& x : enumerate_elements(gl2, 1, 2))
        if (is_straight(gl2, gl2.sigma, x)) ++straight_count;
    CHECK(total == straight_count);
}

TEST_CASE("paths preserve the class invariants") {
    RootDatum d = build_root_datum("SL3@2");
    KottwitzProjector kp = kottwitz_projector(d, d.sigma);
    for (const AffElt& x : enumerate_elements(d, 4, 1)) {
        ReductionCertificate c = straight_decomposition(d, d.sigma, x);
        QVec nu0 = dominant_representative(d, newton_vector(d, d.sigma, x)).first;
        KottwitzClass k0 = kp.project(x.t);
        for (const ReductionStep& st : c.path) {
            CHECK(dominant_representative(d, newton_vector(d, d.sigma, st.to)).first == nu0);
            CHECK(kp.project(st.to.t) == k0);
        }
    }
}

TEST_CASE("regular point status") {
    RootDatum gl2 = build_root_datum("GL2");
    CHECK(regular_point_status(gl2, gl2.sigma, aff_identity(gl2)) == 0);
    // tau: the moved subspace is the diagonal, which crosses the closed
    // alcove off every wall.
    AffElt tau = aff_mul(tr({0, 1}), aff_from_weyl(gl2.simple_reflection(0)));
    CHECK(regular_point_status(gl2, gl2.sigma, tau) == 0);
    // Translations move every point, so their subspace is everything.
    CHECK(regular_point_status(gl2, gl2.sigma, tr({5, 0})) == 0);
    // t^{(2,1)} s moves only the line v1 - v2 = 1/2, which misses the
    // closed base alcove.
    AffElt far = aff_mul(tr({2, 1}), aff_from_weyl(gl2.simple_reflection(0)));
    CHECK(regular_point_status(gl2, gl2.sigma, far) == 2);
}
