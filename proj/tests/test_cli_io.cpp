#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <unordered_set>

#include "fundalc/cache.hpp"
#include "fundalc/enumerate.hpp"
#include "fundalc/io.hpp"
#include "fundalc/plot.hpp"
#include "fundalc/verify.hpp"

using namespace fundalc;

TEST_CASE("element literal parsing") {
    RootDatum gl2 = build_root_datum("GL2");
    CHECK(parse_element(gl2, "t[1,0]") == aff_translation(IVec{1, 0}));
    CHECK(parse_element(gl2, "1") == aff_identity(gl2));
    CHECK(parse_element(gl2, " t[0,1] * s1 ") ==
          aff_mul(aff_translation(IVec{0, 1}), aff_from_weyl(gl2.simple_reflection(0))));
    CHECK(parse_element(gl2, "tau") == *omega_group(gl2).free_generator);

    RootDatum sl2 = build_root_datum("SL2");
    AffElt x = parse_element(sl2, "s1*s0");
    CHECK(aff_length(sl2, x) == 2);

    CHECK_THROWS_AS(parse_element(gl2, "t[1]"), ParseError);     // arity
    CHECK_THROWS_AS(parse_element(gl2, "s3"), ParseError);       // index range
    CHECK_THROWS_AS(parse_element(gl2, "t[1,0]s1"), ParseError); // missing '*'
    CHECK_THROWS_AS(parse_element(gl2, "q"), ParseError);
    try {
        parse_element(gl2, "t[1,0]*q");
    } catch (const ParseError& e) {
        CHECK(e.position == 7);
    }
}

TEST_CASE("print-parse round trip over enumerations") {
    for (const char* key : {"GL2", "SL3", "Sp4-sc", "G2-sc", "SL4@2"}) {
        CAPTURE(key);
        RootDatum d = build_root_datum(key);
        for (const AffElt& x : enumerate_elements(d, 4, 2)) {
            std::string lit = print_element(d, x);
            CHECK(parse_element(d, lit) == x);
        }
    }
}

TEST_CASE("enumeration counts") {
    RootDatum sl2 = build_root_datum("SL2");
    CHECK(enumerate_elements(sl2, 0, 2).size() == 1);
    CHECK(enumerate_elements(sl2, 1, 2).size() == 3);  // identity + two walls

    RootDatum gl2 = build_root_datum("GL2");
    // Window 1: tau^{-1}, 1, tau; each coset contributes its short elements.
    auto level1 = enumerate_elements(gl2, 1, 1);
    size_t zero = 0, one = 0;
    for (const AffElt& x : level1) (aff_length(gl2, x) == 0 ? zero : one)++;
    CHECK(zero == 3);
    CHECK(one == 6);
}

TEST_CASE("enumeration levels are consistent across bounds") {
    for (const char* key : {"SL3", "Sp4-sc", "GL2"}) {
        CAPTURE(key);
        RootDatum d = build_root_datum(key);
        auto small = enumerate_elements(d, 3, 2);
        auto large = enumerate_elements(d, 4, 2);
        // The larger enumeration starts with exactly the smaller one.
        REQUIRE(large.size() >= small.size());
        std::unordered_set<AffElt, AffEltHash> in_large(large.begin(), large.end());
        for (const AffElt& x : small) CHECK(in_large.count(x) == 1);
        for (const AffElt& x : large)
            CHECK(aff_length(d, x) <= 4);
        // Left multiples within the bound are present (downward closure
        // under taking descents).
        const auto& sa = simple_affine_reflections(d);
        for (const AffElt& x : large)
            for (const AffElt& s : sa.elts) {
                AffElt y = aff_mul(s, x);
                if (aff_length(d, y) < aff_length(d, x)) CHECK(in_large.count(y) == 1);
            }
    }
}

TEST_CASE("datum file loading through the catalogue key") {
    namespace fs = std::filesystem;
    RootDatum d = build_root_datum("Sp4-sc");
    fs::path path = fs::temp_directory_path() / "fundalc-datum-test.json";
    {
        std::ofstream out(path);
        out << datum_to_json(d);
    }
    RootDatum loaded = build_root_datum("file:" + path.string());
    CHECK(loaded.rank == d.rank);
    CHECK(loaded.num_roots() == d.num_roots());
    CHECK_THROWS(build_root_datum("file:/nonexistent/path.json"));
    fs::remove(path);
}

TEST_CASE("enumeration cache round trip is byte identical") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "fundalc-cache-test";
    fs::remove_all(dir);
    setenv("FUNDALC_CACHE_DIR", dir.c_str(), 1);

    RootDatum d = build_root_datum("GL2");
    auto cold = cached_enumeration(d, "GL2", 1, 3, 2, true);
    CHECK(fs::exists(dir));
    auto warm = cached_enumeration(d, "GL2", 1, 3, 2, true);
    REQUIRE(cold.size() == warm.size());
    std::string report_cold, report_warm;
    for (const AffElt& x : cold) report_cold += print_element(d, x) + "\n";
    for (const AffElt& x : warm) report_warm += print_element(d, x) + "\n";
    CHECK(report_cold == report_warm);

    unsetenv("FUNDALC_CACHE_DIR");
    fs::remove_all(dir);
}

TEST_CASE("verify engine") {
    CHECK_THROWS_AS(run_suite("no-such-suite", VerifyOptions{}), std::invalid_argument);
    VerifyOptions opt;
    opt.datum_key = "SL2";
    opt.max_len = 3;
    auto results = run_suite("fund-equivalence", opt);
    REQUIRE(!results.empty());
    for (const auto& r : results) CHECK(r.pass);

    // Deterministic across jobs settings.
    opt.jobs = 4;
    auto results4 = run_suite("fund-equivalence", opt);
    REQUIRE(results4.size() == results.size());
    for (size_t i = 0; i < results.size(); ++i) {
        CHECK(results4[i].name == results[i].name);
        CHECK(results4[i].checked == results[i].checked);
        CHECK(results4[i].pass == results[i].pass);
    }
}

TEST_CASE("plot output is deterministic and counts separations") {
    RootDatum sl3 = build_root_datum("SL3");
    AffElt x = parse_element(sl3, "s1*s2*s0");
    REQUIRE(aff_length(sl3, x) == 3);
    PlotOptions opt;
    opt.window = 4;
    std::string svg1 = plot_rank2_svg(sl3, {x}, opt);
    std::string svg2 = plot_rank2_svg(sl3, {x}, opt);
    CHECK(svg1 == svg2);
    CHECK(svg1.find("<!-- separating=3 -->") != std::string::npos);

    // Identity: no separating hyperplanes, base alcove only.
    std::string svg0 = plot_rank2_svg(sl3, {aff_identity(sl3)}, opt);
    CHECK(svg0.find("<!-- separating=0 -->") != std::string::npos);

    // GL2 projects to the line picture; a length-1 element crosses one wall.
    RootDatum gl2 = build_root_datum("GL2");
    std::string svg_line = plot_rank2_svg(gl2, {parse_element(gl2, "t[1,0]")}, opt);
    CHECK(svg_line.find("<!-- separating=1 -->") != std::string::npos);

    RootDatum gl4 = build_root_datum("GL4");
    CHECK_THROWS(plot_rank2_svg(gl4, {aff_identity(gl4)}, opt));
}

TEST_CASE("json serializers emit exact fractions") {
    RootDatum gl2 = build_root_datum("GL2");
    AffElt tau = *omega_group(gl2).free_generator;
    std::string nj = newton_json(gl2, newton_point(gl2, gl2.sigma, tau));
    CHECK(nj.find("\"1/2\"") != std::string::npos);
    std::string ej = element_json(gl2, tau);
    CHECK(ej.find("\"literal\"") != std::string::npos);
}
