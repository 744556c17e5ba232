#include <doctest.h>

#include "fundalc/classifier.hpp"
#include "fundalc/enumerate.hpp"

using namespace fundalc;

namespace {
AffElt tr(std::initializer_list<long long> v) { return aff_translation(IVec(v)); }
}

TEST_CASE("coset point extraction") {
    RootDatum gl2 = build_root_datum("GL2");
    AffElt s = aff_from_weyl(gl2.simple_reflection(0));
    AffElt tau = aff_mul(tr({0, 1}), s);

    CHECK(x_part(gl2, gl2.sigma, tau) == tau);              // straight: unchanged
    CHECK(x_part(gl2, gl2.sigma, tr({1, 0})) == tr({1, 0}));
    CHECK(aff_is_identity(x_part(gl2, gl2.sigma, s)));      // drift 0: reduce to 1

    RootDatum sl2 = build_root_datum("SL2");
    const auto& sa = simple_affine_reflections(sl2);
    CHECK(aff_is_identity(x_part(sl2, sl2.sigma, sa.elts[1])));
}

TEST_CASE("one-class tests split at the two scales") {
    RootDatum sl2 = build_root_datum("SL2");
    const auto& sa = simple_affine_reflections(sl2);
    AffElt s = sa.elts[0], s0 = sa.elts[1];

    CHECK(is_k_fundamental(sl2, sl2.sigma, s));
    CHECK(is_gl_fundamental(sl2, sl2.sigma, s));
    CHECK(!is_straight(sl2, sl2.sigma, s));

    CHECK(!is_k_fundamental(sl2, sl2.sigma, s0));
    CHECK(is_gl_fundamental(sl2, sl2.sigma, s0));

    // Straight elements pass both.
    RootDatum gl2 = build_root_datum("GL2");
    AffElt tau = aff_mul(tr({0, 1}), aff_from_weyl(gl2.simple_reflection(0)));
    for (const AffElt& x : {tau, tr({1, 0}), aff_identity(gl2)}) {
        CHECK(is_k_fundamental(gl2, gl2.sigma, x));
        CHECK(is_gl_fundamental(gl2, gl2.sigma, x));
    }
}

TEST_CASE("fundamental witness search") {
    RootDatum gl2 = build_root_datum("GL2");
    AffElt s = aff_from_weyl(gl2.simple_reflection(0));
    AffElt tau = aff_mul(tr({0, 1}), s);

    FundamentalResult r1 = is_fundamental(gl2, gl2.sigma, tau);
    CHECK(r1.fundamental);
    REQUIRE(r1.witness.has_value());
    CHECK(r1.witness->v == QVec{Rat(1, 2), Rat(1, 2)});

    FundamentalResult r2 = is_fundamental(gl2, gl2.sigma, s);
    CHECK(!r2.fundamental);
    CHECK(!r2.witness.has_value());

    FundamentalResult r3 = is_fundamental(gl2, gl2.sigma, tr({1, 0}));
    CHECK(r3.fundamental);
    REQUIRE(r3.witness.has_value());
    CHECK(r3.witness->v == QVec{Rat(1), Rat(0)});
}

TEST_CASE("length is additive over the coset point") {
    for (const char* key : {"GL2", "SL2", "SL3@2"}) {
        CAPTURE(key);
        RootDatum d = build_root_datum(key);
        for (const AffElt& x : enumerate_elements(d, 4, 1)) {
            AffElt y = x_part(d, d.sigma, x);
            QVec nu = newton_vector(d, d.sigma, x);
            VDatum vd = make_vdatum(d, nu);
            long long rel = relative_length(d, d.sigma, x, vd);
            CHECK(aff_length(d, x) >= aff_length(d, y) + rel);
        }
    }
}

TEST_CASE("minuscule validation") {
    RootDatum gl2 = build_root_datum("GL2");
    CHECK(is_minuscule(gl2, IVec{1, 0}));
    CHECK(is_minuscule(gl2, IVec{0, 0}));
    CHECK(is_minuscule(gl2, IVec{1, 1}));
    CHECK(!is_minuscule(gl2, IVec{2, 0}));
    CHECK_THROWS(minuscule_report(gl2, gl2.sigma, IVec{2, 0}));
}

TEST_CASE("minuscule coset report for GL2") {
    RootDatum gl2 = build_root_datum("GL2");
    MinusculeReport rep = minuscule_report(gl2, gl2.sigma, IVec{1, 0});
    CHECK(rep.rows.size() == 4);  // {t^{10}, t^{01}} x W
    CHECK(rep.all_ok);
    for (const auto& row : rep.rows) {
        REQUIRE(row.witness.has_value());
        CHECK(is_straight(gl2, gl2.sigma, *row.witness));
        CHECK(bruhat_leq(gl2, *row.witness, row.elt));
    }

    // Degenerate cocharacter: the finite Weyl group itself.
    MinusculeReport zero = minuscule_report(gl2, gl2.sigma, IVec{0, 0});
    CHECK(zero.rows.size() == 2);
    CHECK(zero.all_ok);
}

TEST_CASE("minuscule coset report for GL3") {
    RootDatum gl3 = build_root_datum("GL3");
    MinusculeReport rep = minuscule_report(gl3, gl3.sigma, IVec{1, 0, 0});
    CHECK(rep.rows.size() == 18);
    CHECK(rep.all_ok);
}
