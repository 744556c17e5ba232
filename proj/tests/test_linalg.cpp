#include <doctest.h>

#include "fundalc/linalg.hpp"
#include "fundalc/smith.hpp"

using namespace fundalc;

TEST_CASE("rational arithmetic normalizes") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, -4) == Rat(1, 2));
    CHECK(Rat(2, -4) == Rat(-1, 2));
    CHECK((Rat(1, 2) + Rat(1, 3)) == Rat(5, 6));
    CHECK((Rat(1, 2) * Rat(2, 3)) == Rat(1, 3));
    CHECK(Rat(-7, 2).floor() == -4);
    CHECK(Rat(7, 2).floor() == 3);
    CHECK(Rat::parse("-3/6") == Rat(-1, 2));
    CHECK(Rat(5).str() == "5");
    CHECK(Rat(1, 2).str() == "1/2");
}

TEST_CASE("linear solve and kernel") {
    QMat a(2, 3);
    a.at(0, 0) = Rat(1); a.at(0, 1) = Rat(-1);
    a.at(1, 1) = Rat(1); a.at(1, 2) = Rat(-1);
    QVec b{Rat(1), Rat(0)};
    auto x = solve_linear(a, b);
    REQUIRE(x.has_value());
    CHECK((*x)[0] - (*x)[1] == Rat(1));
    CHECK((*x)[1] == (*x)[2]);
    auto k = kernel_basis(a);
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == k[0][1]);
    CHECK(k[0][1] == k[0][2]);

    QMat c(2, 1);
    c.at(0, 0) = Rat(1);
    c.at(1, 0) = Rat(1);
    CHECK(!solve_linear(c, QVec{Rat(0), Rat(1)}).has_value());
}

TEST_CASE("unimodular inverse") {
    IMat m(2, 2);
    m.at(0, 0) = 1; m.at(0, 1) = 1; m.at(1, 0) = 0; m.at(1, 1) = 1;
    IMat mi = unimodular_inverse(m);
    CHECK((m * mi).is_identity());
}

TEST_CASE("smith normal form recovers quotient structure") {
    // Z^2 / <(2,0),(0,3)> = Z/2 x Z/3 (or Z/6 after divisibility chaining).
    IMat a(2, 2);
    a.at(0, 0) = 2; a.at(1, 1) = 3;
    SmithForm f = smith_normal_form(a);
    REQUIRE(f.d.size() == 2);
    CHECK(f.d[0] * f.d[1] == 6);
    CHECK(f.d[1] % f.d[0] == 0);
    CHECK(f.rank == 2);

    // Column span of (1,-1) inside Z^2: quotient Z.
    IMat b(2, 1);
    b.at(0, 0) = 1; b.at(1, 0) = -1;
    SmithForm g = smith_normal_form(b);
    CHECK(g.rank == 1);
    CHECK(g.d[0] == 1);
}

TEST_CASE("feasible point with strict constraints") {
    // -1 < x < 0, -1 < y < 0, x < y
    std::vector<LinearConstraint> cons;
    auto add = [&](QVec c, Rat r, bool strict) { cons.push_back({std::move(c), r, strict}); };
    add({Rat(1), Rat(0)}, Rat(0), true);
    add({Rat(-1), Rat(0)}, Rat(1), true);
    add({Rat(0), Rat(1)}, Rat(0), true);
    add({Rat(0), Rat(-1)}, Rat(1), true);
    add({Rat(1), Rat(-1)}, Rat(0), true);
    auto p = feasible_point(cons, 2);
    REQUIRE(p.has_value());
    CHECK((*p)[0] < (*p)[1]);
    CHECK((*p)[0] > Rat(-1));
    CHECK((*p)[1] < Rat(0));

    add({Rat(-1), Rat(1)}, Rat(0), true);  // also y < x: contradiction
    CHECK(!feasible_point(cons, 2).has_value());
}
