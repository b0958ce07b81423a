#include "rankin/paperbench.hpp"

#include <doctest.h>

#include <algorithm>

using namespace rankin;

TEST_SUITE("paperbench") {

TEST_CASE("filters")
{
    CHECK(check_matches("g.table2", "g.table2.m5.r2"));
    CHECK(check_matches("g.*.m5.*", "g.table2.m5.r2"));
    CHECK_FALSE(check_matches("g.*.m4.*", "g.table2.m5.r2"));
    CHECK_FALSE(check_matches("h", "g.table2.m5.r2"));
}

TEST_CASE("ids are unique and cover every group")
{
    auto ids = check_ids();
    auto sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    for (char group = 'a'; group <= 'n'; ++group)
        CHECK(std::any_of(ids.begin(), ids.end(), [&](auto const& id) { return id[0] == group; }));
}

TEST_CASE("selected groups pass and reports are reproducible")
{
    for (std::string filter : {"a.", "d.", "g.", "j.", "m."}) {
        auto first = run_checks(filter);
        REQUIRE_FALSE(first.empty());
        CHECK_MESSAGE(all_passed(first), format_report(first));
        CHECK(format_report(first) == format_report(run_checks(filter)));
        CHECK(report_to_json(first).dump() == report_to_json(run_checks(filter)).dump());
    }
}

TEST_CASE("open constants are skipped, not claimed")
{
    auto results = run_checks("m.*supremum*");
    REQUIRE(results.size() == 4);
    for (auto const& r : results)
        CHECK(r.status == CheckStatus::skipped);
    CHECK(all_passed(results));
    std::string report = format_report(results);
    CHECK(report.find("not computed") != std::string::npos);
}

TEST_CASE("narrower windows shrink the sweep")
{
    BenchConfig small;
    small.n_hi = 4;
    small.random_codes = 10;
    CHECK(check_ids(small).size() < check_ids().size());
    auto results = run_checks("b.d1.random", small);
    REQUIRE(results.size() == 1);
    CHECK(results[0].status == CheckStatus::pass);
}

}
