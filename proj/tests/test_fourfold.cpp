#include "birclass/classify.hpp"
#include "birclass/enumerate.hpp"
#include "birclass/fourfold.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace birclass;

TEST_CASE("admissible discriminants") {
    CHECK(kuznetsov_admissible(14));
    CHECK(kuznetsov_admissible(26));
    CHECK(kuznetsov_admissible(38));
    CHECK_FALSE(kuznetsov_admissible(8));    // divisible by 4
    CHECK_FALSE(kuznetsov_admissible(18));   // divisible by 9
    CHECK_FALSE(kuznetsov_admissible(10));   // 5 = 2 + 3m divides it
    CHECK_FALSE(kuznetsov_admissible(6));
    CHECK_FALSE(kuznetsov_admissible(15));   // odd
    CHECK(kuznetsov_admissible(42));

    std::vector<Int> first;
    for (Int d = 8; first.size() < 3; ++d)
        if (kuznetsov_admissible(d)) first.push_back(d);
    CHECK(first == std::vector<Int>{14, 26, 38});
}

TEST_CASE("fourfold divisor table") {
    const auto records = table2_report();
    REQUIRE(records.size() == 11);

    // the seven transformation rows carry the stored column (8,14,14,18,12,14,14)
    const std::vector<Int> stored = {8, 14, 14, 18, 12, 14, 14};
    for (std::size_t i = 0; i < stored.size(); ++i) {
        CHECK(records[i].delta == stored[i]);
        REQUIRE(records[i].delta_computed);
        CHECK(*records[i].delta_computed == stored[i]);
    }
    CHECK(records[0].conditional);  // the scroll into G(1,4) sits outside the c.i. pipeline

    // the cubo-linear example rows: stored (18, 18, 14, 14), all recomputed
    const std::vector<Int> sec8 = {18, 18, 14, 14};
    for (std::size_t i = 0; i < sec8.size(); ++i) {
        CHECK(records[7 + i].delta == sec8[i]);
        REQUIRE(records[7 + i].delta_computed);
        CHECK(*records[7 + i].delta_computed == sec8[i]);
    }

    for (const auto& rec : records)
        CHECK(rec.admissible == kuznetsov_admissible(rec.delta));
    CHECK(records[1].admissible);        // 14
    CHECK_FALSE(records[3].admissible);  // 18
    CHECK_FALSE(records[4].admissible);  // 12
}

TEST_CASE("discriminant congruence and value set") {
    const auto g174 = ci_restriction(enumerate_base_set().d_ne_1);
    for (const auto& t : g174.tuples) {
        const Int delta = delta_invariant(t.cubic_profile());
        const Int m = ((delta % 6) + 6) % 6;
        CHECK((m == 0 || m == 2));
    }

    std::set<Int> values;
    for (const auto& rec : table2_report()) values.insert(rec.delta);
    CHECK(values == std::set<Int>{8, 12, 14, 18});
}
