#include "birclass/classify.hpp"
#include "birclass/enumerate.hpp"
#include "birclass/report.hpp"
#include "birclass/tables.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <set>

using namespace birclass;

namespace {

std::vector<GammaTuple> load_golden(const std::string& name) {
    std::ifstream in(std::string(TEST_DATA_DIR) + "/" + name);
    REQUIRE(in);
    std::vector<GammaTuple> out;
    Int l, g, D, d, a;
    std::string sl, sg, sD, sd, sa;
    while (in >> sl >> sg >> sD >> sd >> sa)
        out.emplace_back(Int(sl), Int(sg), Int(sD), Int(sd), Int(sa));
    return out;
}

}  // namespace

TEST_CASE("hodge inequalities") {
    CHECK(hodge_check(14, 15, 1, 5));
    CHECK(hodge_check(13, 12, 1, 5));
    CHECK_FALSE(hodge_check(3, 100, 1, 5));
}

TEST_CASE("livorni-sommese inequalities") {
    CHECK(livorni_sommese_check(14, 15, 1, 5, 0, 0));
    CHECK(livorni_sommese_check(11, 8, 4, 3, 2, 0));
    CHECK_FALSE(livorni_sommese_check(27, 0, 1, 5, 0, 0));
}

TEST_CASE("le barz bound") {
    CHECK(le_barz_max_nu(14, 15, 1, 5, 0) == 0);
    CHECK(le_barz_max_nu(10, 6, 8, 2, 3) == 10);
    CHECK(le_barz_max_nu(12, 11, 8, 2, 3) == 0);
    CHECK(le_barz_max_nu(14, 17, 16, 1, 4) == -3);      // negative: no nu at all
    CHECK(le_barz_max_nu_eps(14, 17, 16, 1, 4, 1) == 8);
    CHECK(le_barz_max_nu_eps(13, 14, 16, 1, 4, 1) == 0);
}

TEST_CASE("base candidate sets") {
    const auto sets = enumerate_base_set();
    CHECK(sets.full.size() == 3619);
    CHECK(sets.d_ne_1.size() == 2480);
    CHECK(sets.d_eq_1_projected.size() == 1139);
    CHECK(sets.full.tuples == load_golden("gamma5.golden"));

    // the d = 1 part projects to 1139 distinct 4-tuples
    std::set<std::array<Int, 4>> proj;
    for (const auto& t : sets.d_eq_1_projected.tuples)
        proj.insert({t.lambda, t.g, t.Delta, t.a});
    CHECK(proj.size() == 1139);
}

TEST_CASE("complete intersection degree options") {
    CHECK(ci_degree_options(2, 4) == std::set<Int>{8, 9});
    CHECK(ci_degree_options(4, 4) == std::set<Int>{16});
    CHECK(ci_degree_options(3, 3) == std::set<Int>{8});
    CHECK(ci_degree_options(1, 4) == std::set<Int>{5});

    // empty exactly when a > c
    for (Int a = 1; a <= 6; ++a)
        for (Int c = 1; c <= 6; ++c)
            CHECK(ci_degree_options(a, c).empty() == (a > c));
}

TEST_CASE("complete intersection types") {
    // the seven (Delta, d, a) triples are realized by hypersurface degrees
    // with product Delta and degree sum a + c, c = 5 - d
    const std::vector<std::array<Int, 3>> triples = {
        {4, 2, 1}, {3, 3, 1}, {2, 4, 1}, {6, 2, 2}, {4, 3, 2}, {8, 2, 3}};
    for (const auto& [Delta, d, a] : triples) {
        const auto types = ci_types(a, 5 - d, Delta);
        REQUIRE_FALSE(types.empty());
        for (const auto& t : types) {
            CHECK(t.product() == Delta);
            CHECK(t.sum() == a + (5 - d));
            for (const auto& e : t.degrees) CHECK(e >= 2);
        }
    }
    CHECK(ci_types(1, 4, 5).size() == 1);  // a single quintic
    CHECK(ci_types(2, 4, 7).empty());      // 7 is not a product of two e_i >= 2 summing to 6
}

TEST_CASE("ci restriction") {
    const auto g174 = ci_restriction(enumerate_base_set().d_ne_1);
    CHECK(g174.size() == 174);
    CHECK(g174.tuples == load_golden("gamma5_ci.golden"));

    std::set<std::array<Int, 3>> triples;
    Int lmin = 100, lmax = 0, gmin = 100, gmax = -1;
    for (const auto& t : g174.tuples) {
        triples.insert({t.Delta, t.d, t.a});
        lmin = std::min(lmin, t.lambda);
        lmax = std::max(lmax, t.lambda);
        gmin = std::min(gmin, t.g);
        gmax = std::max(gmax, t.g);
    }
    const std::set<std::array<Int, 3>> expected = {
        {1, 5, 0}, {4, 2, 1}, {3, 3, 1}, {2, 4, 1}, {6, 2, 2}, {4, 3, 2}, {8, 2, 3}};
    CHECK(triples == expected);
    CHECK(lmin == 7);
    CHECK(lmax == 18);
    CHECK(gmin == 0);
    CHECK(gmax == 28);
    CHECK(g174.contains(GammaTuple(12, 10, 3, 3, 1)));

    // monotonicity: the restriction is a subset of the base set
    const auto base = enumerate_base_set().d_ne_1;
    for (const auto& t : g174.tuples) CHECK(base.contains(t));
}

TEST_CASE("multidegree positivity over the ci set") {
    for (const auto& t : ci_restriction(enumerate_base_set().d_ne_1).tuples) {
        const auto md = cubic_multidegree(t.cubic_profile());
        CHECK(md[2] == 9);
        CHECK(md[3] == 27 - t.lambda);
        for (const auto& x : md.degrees) CHECK(x > 0);
    }
}

TEST_CASE("nu extension") {
    const auto cubic = classify_cubic();
    CHECK(cubic.gamma6.size() == 4237);
    CHECK(cubic.gamma6.contains(GammaTuple(14, 15, 1, 5, 0, Int(0))));

    Int lmin = 100, lmax = 0, gmin = 100, gmax = -1, numax = -1;
    for (const auto& t : cubic.gamma6.tuples) {
        lmin = std::min(lmin, t.lambda);
        lmax = std::max(lmax, t.lambda);
        gmin = std::min(gmin, t.g);
        gmax = std::max(gmax, t.g);
        numax = std::max(numax, *t.nu);
        // every 5-tuple prefix lies in the ci set
        CHECK(cubic.gamma174.contains(GammaTuple(t.lambda, t.g, t.Delta, t.d, t.a)));
    }
    CHECK(lmin == 11);
    CHECK(lmax == 18);
    CHECK(gmin == 7);
    CHECK(gmax == 28);
    CHECK(numax == 181);
}

TEST_CASE("reduction inequalities") {
    CHECK(reduction_check(GammaTuple(14, 15, 1, 5, 0, Int(0))));
    CHECK(reduction_check(GammaTuple(18, 28, 3, 3, 1, Int(0))));
    CHECK_FALSE(reduction_check(GammaTuple(11, 8, 4, 3, 2, Int(3))));
    CHECK_THROWS_AS(reduction_check(GammaTuple(14, 15, 1, 5, 0)), std::invalid_argument);

    // the Pfaffian tuple sits exactly on the d1^2 = d2 d0 wall
    const auto q = reduction_quantities(GammaTuple(14, 15, 1, 5, 0, Int(0)));
    CHECK(q == std::array<Int, 4>{13, 13, 13, 0});
}

TEST_CASE("preliminary classification") {
    const auto rows = preliminary_classification();
    const auto& expected = preliminary_table();
    REQUIRE(rows.size() == expected.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& e = expected[i];
        CHECK(rows[i] == PreliminaryRow{e[0], e[1], e[2], e[3], e[4], e[5]});
    }
    CHECK(std::find(rows.begin(), rows.end(), PreliminaryRow{3, 1, 1, 3, 2, 1}) != rows.end());
    for (const auto& r : rows) {
        CHECK(r.d1 >= 2);
        CHECK(r.d1 <= 5);  // in particular no degree-6 row exists
    }
}

TEST_CASE("parallel enumeration is deterministic") {
    const auto serial = enumerate_base_set(1);
    const auto parallel = enumerate_base_set(4);
    CHECK(serialize_candidate_set(serial.full) == serialize_candidate_set(parallel.full));
}

TEST_CASE("fano restriction takes a caller allowlist") {
    const auto base = enumerate_base_set().d_ne_1;
    const auto g174 = ci_restriction(base);
    CandidateSet complement;
    complement.name = "gamma5_complement";
    complement.provenance = base.provenance;
    for (const auto& t : base.tuples)
        if (!g174.contains(t)) complement.tuples.push_back(t);
    CHECK(complement.size() == 2480 - 174);

    // no allowlist is built in; an empty list selects nothing
    CHECK(fano_restriction(complement, {}).size() == 0);
    const auto some = fano_restriction(complement, {{Int(5), Int(2)}});
    for (const auto& t : some.tuples) {
        CHECK(t.Delta == 5);
        CHECK(t.a == 2);
    }
}
