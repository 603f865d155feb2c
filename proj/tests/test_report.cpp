#include "birclass/report.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>

using namespace birclass;

namespace {

ReportDocument sample_report() {
    ReportDocument doc;
    doc.metadata.generated_at = "2000-01-01T00:00:00Z";
    doc.metadata.provenance = {"classify:cubic"};
    const auto res = classify_cubic();
    doc.candidate_sets.push_back({"gamma5", res.gamma5.size(), res.gamma5.provenance});
    doc.candidate_sets.push_back({"gamma6", res.gamma6.size(), res.gamma6.provenance});
    doc.rows = res.rows;
    doc.rejections = res.rejections;
    doc.delta_table = table2_report();
    for (const auto& row : table3()) doc.validations.push_back(validate_row(row));
    return doc;
}

}  // namespace

TEST_CASE("candidate set files round-trip") {
    const auto sets = enumerate_base_set();
    const auto ci = ci_restriction(sets.d_ne_1);
    for (const CandidateSet* set : {&sets.full, &ci}) {
        const auto text = serialize_candidate_set(*set);
        const auto back = parse_candidate_set(text);
        CHECK(back.name == set->name);
        CHECK(back.provenance == set->provenance);
        CHECK(back.tuples == set->tuples);
        CHECK(serialize_candidate_set(back) == text);
    }

    // sets with nu use the six-field record
    const auto g6 = classify_cubic().gamma6;
    const auto back = parse_candidate_set(serialize_candidate_set(g6));
    CHECK(back.tuples == g6.tuples);
    REQUIRE(back.tuples[0].nu.has_value());
}

TEST_CASE("candidate set parser rejects malformed input") {
    CHECK_THROWS(parse_candidate_set("no header\n1 2 3 4 5\n"));
    CHECK_THROWS(parse_candidate_set("# birclass.candidate-set/1 name=x constraints=\n1 2 3\n"));
}

TEST_CASE("report json round-trip is lossless") {
    const auto doc = sample_report();
    const auto text = serialize_report_json(doc);
    const auto back = report_from_json(json::parse(text));

    CHECK(back.metadata == doc.metadata);
    CHECK(back.candidate_sets == doc.candidate_sets);
    REQUIRE(back.rows.size() == doc.rows.size());
    for (std::size_t i = 0; i < doc.rows.size(); ++i) CHECK(rows_equal(back.rows[i], doc.rows[i]));
    REQUIRE(back.delta_table.size() == doc.delta_table.size());
    for (std::size_t i = 0; i < doc.delta_table.size(); ++i) {
        CHECK(back.delta_table[i].source == doc.delta_table[i].source);
        CHECK(back.delta_table[i].delta == doc.delta_table[i].delta);
        CHECK(back.delta_table[i].delta_computed == doc.delta_table[i].delta_computed);
        CHECK(back.delta_table[i].admissible == doc.delta_table[i].admissible);
        CHECK(back.delta_table[i].reference_cohomology == doc.delta_table[i].reference_cohomology);
    }
    REQUIRE(back.validations.size() == doc.validations.size());
    REQUIRE(back.rejections.size() == doc.rejections.size());
    for (std::size_t i = 0; i < doc.rejections.size(); ++i) {
        CHECK(back.rejections[i].tuple == doc.rejections[i].tuple);
        CHECK(back.rejections[i].stage == doc.rejections[i].stage);
        CHECK(back.rejections[i].reason == doc.rejections[i].reason);
    }

    // canonical: serializing the parsed document reproduces the bytes
    CHECK(serialize_report_json(back) == text);
}

TEST_CASE("csv and markdown emitters are row-faithful") {
    const auto doc = sample_report();

    const auto csv_rows = rows_from_csv(serialize_report_csv(doc));
    REQUIRE(csv_rows.size() == doc.rows.size());
    for (std::size_t i = 0; i < doc.rows.size(); ++i) CHECK(rows_equal(csv_rows[i], doc.rows[i]));

    const auto md_rows = rows_from_markdown(serialize_report_markdown(doc));
    REQUIRE(md_rows.size() == doc.rows.size());
    for (std::size_t i = 0; i < doc.rows.size(); ++i) CHECK(rows_equal(md_rows[i], doc.rows[i]));
}

TEST_CASE("classification is deterministic across thread counts") {
    auto doc1 = sample_report();
    ReportDocument doc4;
    doc4.metadata.generated_at = doc1.metadata.generated_at;
    doc4.metadata.provenance = doc1.metadata.provenance;
    const auto res = classify_cubic(enumerate_base_set(4));
    doc4.candidate_sets.push_back({"gamma5", res.gamma5.size(), res.gamma5.provenance});
    doc4.candidate_sets.push_back({"gamma6", res.gamma6.size(), res.gamma6.provenance});
    doc4.rows = res.rows;
    doc4.rejections = res.rejections;
    doc4.delta_table = table2_report();
    for (const auto& row : table3()) doc4.validations.push_back(validate_row(row));
    CHECK(serialize_report_json(doc1) == serialize_report_json(doc4));
    CHECK(serialize_report_csv(doc1) == serialize_report_csv(doc4));
    CHECK(serialize_report_markdown(doc1) == serialize_report_markdown(doc4));
}

TEST_CASE("candidate set cache") {
    const auto dir = std::filesystem::temp_directory_path() / "birclass-cache-test";
    std::filesystem::remove_all(dir);
    setenv("BIRCLASS_CACHE_DIR", dir.c_str(), 1);

    const auto sets = enumerate_base_set();
    CHECK_FALSE(cache_read(sets.full.name, sets.full.provenance));
    cache_write(sets.full);
    const auto hit = cache_read(sets.full.name, sets.full.provenance);
    REQUIRE(hit);
    CHECK(hit->tuples == sets.full.tuples);

    // a different constraint list is a different key
    auto other = sets.full.provenance;
    other.push_back("extra");
    CHECK_FALSE(cache_read(sets.full.name, other));

    unsetenv("BIRCLASS_CACHE_DIR");
    CHECK_FALSE(cache_read(sets.full.name, sets.full.provenance));  // caching off
    std::filesystem::remove_all(dir);
}
