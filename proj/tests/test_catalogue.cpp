#include "doctest.h"

#include "ail/assets.hpp"
#include "ail/catalogue.hpp"

using namespace ail;

TEST_CASE("catalogue file parses") {
    auto rows = parse_catalogue(std::string(assets::catalogue_section34()));
    REQUIRE(rows.size() == 26);
    CHECK(rows[0].name == "awareness_reduction");
    CHECK(rows[0].expected_valid);
    CHECK(rows[0].schema_text == "@awareness-reduction");
    std::size_t invalid = 0;
    for (const auto& r : rows) invalid += !r.expected_valid;
    CHECK(invalid == 8);

    CHECK_THROWS_AS(parse_catalogue("x maybe I[i] phi"), AilError);
    CHECK(parse_catalogue("# only a comment\n\n").empty());
}

TEST_CASE("catalogue runner settles small rows") {
    // One definitionally valid row and one quickly falsified row, at a small
    // bound so the test stays fast.
    std::vector<CatalogueRow> rows = {
        {"definition", true, "E[i] phi <-> A[i] phi & C[i] phi"},
        {"converse", false, "S[i] phi -> A[i] phi"},
    };
    SearchBounds b;
    b.max_worlds = 2;
    b.agents = {"i"};
    auto results = run_catalogue(rows, {catalogue_pool()[0]}, b);
    REQUIRE(results.size() == 2);
    CHECK(results[0].pass);
    CHECK_FALSE(results[0].found_countermodel);
    CHECK(results[1].pass);
    CHECK(results[1].found_countermodel);
    REQUIRE(results[1].witness_model.has_value());
    CHECK(results[1].witness_model->world_count() <= 2);
}
