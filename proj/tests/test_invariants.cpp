#include "birclass/invariants.hpp"
#include "birclass/enumerate.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace birclass;

TEST_CASE("dimension relations") {
    auto s = dimension_solve(6, 3, 5, 0);
    REQUIRE(s);
    CHECK(s->r == 3);
    CHECK(s->r_prime == 4);

    s = dimension_solve(8, 2, 5, 0);
    REQUIRE(s);
    CHECK(s->r == 3);
    CHECK(s->r_prime == 6);

    s = dimension_solve(5, 4, 1, 3);
    REQUIRE(s);
    CHECK(s->r == 3);
    CHECK(s->r_prime == 2);

    CHECK_FALSE(dimension_solve(6, 3, 4, 0));  // r = 34/11 is not an integer
    CHECK_THROWS_AS(dimension_solve(6, 1, 1, 0), std::invalid_argument);
}

TEST_CASE("dimension round-trip over the preliminary rows") {
    for (const auto& row : preliminary_classification()) {
        CHECK((row.r_prime + 2) / (row.n - row.r - 1) == row.d1);
        CHECK((row.r - row.c + 2) / (row.n - row.r_prime - 1) == row.d2);
    }
}

TEST_CASE("change of basis") {
    auto m = change_basis_matrix(3, 5);
    CHECK(m[0][0] == 3);
    CHECK(m[0][1] == -1);
    CHECK(m[1][0] == 14);
    CHECK(m[1][1] == -5);

    m = change_basis_matrix(2, 2);
    CHECK(m[1][0] == 3);
    CHECK(m[1][1] == -2);

    std::mt19937 rng(20240901);
    std::uniform_int_distribution<int> deg(1, 500);
    for (int i = 0; i < 1000; ++i) {
        const Int d1 = deg(rng), d2 = deg(rng);
        const auto cb = change_basis_matrix(d1, d2);
        CHECK(cb[0][0] * cb[1][1] - cb[0][1] * cb[1][0] == -1);
    }
}

TEST_CASE("castelnuovo bound in P4") {
    CHECK(castelnuovo_bound_p4(27) == Rat(100));
    CHECK(castelnuovo_bound_p4(3) == Rat(0));
    CHECK(castelnuovo_bound_p4(14) == Rat(22));
}

TEST_CASE("hilbert conditions") {
    auto conds = hilbert_conditions(6, 3, 5, 0, 4);
    REQUIRE(conds.size() == 2);
    CHECK(conds[0] == HilbertCondition{3, 77});
    CHECK(conds[1] == HilbertCondition{2, 28});

    conds = hilbert_conditions(3, 3, 1, 2, 1);
    REQUIRE(conds.size() == 2);
    CHECK(conds[0] == HilbertCondition{3, 14});
    CHECK(conds[1] == HilbertCondition{2, 9});

    // d2 = 1 makes the ceiling term vanish
    conds = hilbert_conditions(6, 2, 1, 0, 4);
    REQUIRE(conds.size() == 2);
    CHECK(conds[1] == HilbertCondition{1, 6});
}

TEST_CASE("hilbert polynomial solve") {
    auto poly = hilbert_polynomial_solve({{3, 14}, {2, 9}}, 1);
    REQUIRE(poly);
    CHECK(poly->eval(3) == Rat(14));
    CHECK(poly->eval(2) == Rat(9));
    CHECK(poly->coeffs == std::vector<Rat>{Rat(-1), Rat(5)});  // chi(t) = 5t - 1
    CHECK(poly->lambda() == Rat(5));
    CHECK(poly->sectional_genus() == Rat(2));

    // cubo-linear case (1): lambda = 7 - a and g = 6 - 2a for every ambient
    for (const auto& [r, n] : std::vector<std::pair<Int, Int>>{{1, 3}, {2, 4}, {3, 5}}) {
        for (Int a = 1; a <= 2; ++a) {
            auto p = hilbert_polynomial_solve(hilbert_conditions(n, 3, 1, a, 1), r);
            REQUIRE(p);
            CHECK(p->lambda() == Rat(7 - a));
            CHECK(p->sectional_genus() == Rat(6 - 2 * a));
        }
    }

    CHECK_FALSE(hilbert_polynomial_solve({{3, 14}, {2, 9}, {1, 5}}, 1));  // inconsistent
    CHECK(hilbert_polynomial_solve({{3, 14}, {2, 9}, {1, 4}}, 1));        // consistent
    CHECK_THROWS_AS(hilbert_polynomial_solve({{3, 14}}, 1), std::invalid_argument);
}

TEST_CASE("cubic canonical and surface invariants") {
    auto [cd, s] = cubic_invariants(TransformationProfile::cubic(14, 15, 1, 5, 0));
    CHECK(cd.KH2 == 0);
    CHECK(cd.K2H == 0);
    CHECK(cd.K3 == 0);
    CHECK(cd.H3 == 14);
    CHECK(cd.s1H2 == -98);
    CHECK(cd.s2H == 448);

    auto [cd2, s2] = cubic_invariants(TransformationProfile::cubic(11, 8, 4, 3, 2));
    CHECK(cd2.KH2 == -8);
    CHECK(cd2.K2H == 2);
    CHECK(cd2.K3 == 10);

    auto [cd3, s3] = cubic_invariants(TransformationProfile::cubic(13, 12, 1, 5, 0));
    CHECK(s3.chiOS == 4);
}

TEST_CASE("whitney and noether identities on random signatures") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(-40, 40);
    for (int i = 0; i < 1000; ++i) {
        const Int l = pick(rng), g = pick(rng), D = std::abs(pick(rng)) + 1, a = pick(rng);
        const Int d = (i % 4) + 1;
        auto [cd, s] = cubic_invariants(TransformationProfile::cubic(l, g, D, d, a));
        CHECK(cd.c1H2 == 7 * cd.H3 + cd.s1H2);
        CHECK(cd.c2H == 21 * cd.H3 + 7 * cd.s1H2 + cd.s2H);
        CHECK(cd.c3 == 35 * cd.H3 + 21 * cd.s1H2 + 7 * cd.s2H + cd.s3);
        CHECK(s.KS2 + s.c2TS == 12 * s.chiOS);  // Noether
        CHECK(cd.c1H2 == -cd.KH2);
    }
}

TEST_CASE("cubic multidegree") {
    CHECK(cubic_multidegree(TransformationProfile::cubic(14, 15, 1, 5, 0)) ==
          MultiDegree{1, 3, 9, 13, 11, 5, 1});
    CHECK(cubic_multidegree(TransformationProfile::cubic(18, 28, 3, 3, 1)) ==
          MultiDegree{1, 3, 9, 9, 9, 9, 3});
    CHECK(cubic_multidegree(TransformationProfile::cubic(15, 19, 12, 1, 3)) ==
          MultiDegree{1, 3, 9, 12, 12, 12, 12});
}

TEST_CASE("multidegree from segre classes") {
    // leading entry is always 1: every binomial in the tail vanishes
    const Int segs[] = {Int(123), Int(-45), Int(6)};
    auto md = segre_multidegree(6, 3, 3, 17, segs);
    CHECK(md[0] == 1);
    CHECK(md[1] == 3);

    // cross-path agreement on the Pfaffian signature
    const auto p = TransformationProfile::cubic(14, 15, 1, 5, 0);
    const auto cd = cubic_invariants(p).first;
    const Int segre[] = {cd.s3, cd.s2H, cd.s1H2};
    CHECK(segre_multidegree(6, 3, 3, cd.H3, segre) == cubic_multidegree(p));
}

TEST_CASE("pluridegrees of the reduction") {
    auto cd = cubic_invariants(TransformationProfile::cubic(14, 15, 1, 5, 0)).first;
    CHECK(pluridegrees(cd, 0) == Pluridegrees{14, 14, 14, 14});

    cd = cubic_invariants(TransformationProfile::cubic(13, 12, 1, 5, 0)).first;
    CHECK(pluridegrees(cd, 0) == Pluridegrees{13, 9, 2, 0});

    cd = cubic_invariants(TransformationProfile::cubic(12, 10, 3, 3, 1)).first;
    CHECK(pluridegrees(cd, 0) == Pluridegrees{12, 6, 0, 0});
}

TEST_CASE("fourfold discriminant") {
    CHECK(delta_invariant(TransformationProfile::cubic(14, 15, 1, 5, 0)) == 14);
    CHECK(delta_invariant(TransformationProfile::cubic(12, 10, 3, 3, 1)) == 18);
    CHECK(delta_invariant(TransformationProfile::cubic(10, 6, 8, 2, 3)) == 14);
}

TEST_CASE("quartic invariants in P4") {
    auto q = quartic_p4_invariants(9, 1);
    CHECK(q.g == Rat(8));
    CHECK(q.chiOB == Rat(2));
    CHECK(q.K2 == Rat(-5));
    CHECK(q.Delta_required == Rat(3));

    CHECK(quartic_p4_invariants(16, 1).Delta_required == Rat(3));
    CHECK(quartic_p4_invariants(10, 2).Delta_required == Rat(-1));
}

TEST_CASE("quartic invariants in P5") {
    auto q = quartic_p5_invariants(9, 1, 8, 3);
    CHECK(q.g == 9);
    CHECK(q.multidegree_from_type == MultiDegree{1, 4, 7, 8, 8, 8});
    CHECK(q.multidegree_from_segre == q.multidegree_from_type);
    // the Segre route lands on the closed form (1, 4, 16-l, 2a - 4 eps + 6, Dd, D)
    CHECK(q.multidegree_from_segre == MultiDegree{1, 4, 16 - 9, 2 * 3 - 4 + 6, 8, 8});
    CHECK(q.a_required == Rat(3));
    CHECK(q.surface_relation == 0);

    q = quartic_p5_invariants(6, 1, 18, 8);
    CHECK(q.g == 2);
    CHECK(q.multidegree_from_type == MultiDegree{1, 4, 10, 18, 18, 18});

    // type (4,2) into a quadric: the joint system has no degree at all
    for (Int l = 1; l <= 64; ++l)
        CHECK(quartic_p5_invariants(l, 2, 2, 1).surface_relation != 0);
}
