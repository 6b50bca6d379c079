#include <catch2/catch_amalgamated.hpp>

#include "citenorm/error.hpp"
#include "citenorm/ranking.hpp"

using namespace citenorm;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

IndicatorReport report(std::string id, double rom, double mor, std::int64_t p = 10) {
    IndicatorReport r;
    r.unit_id = std::move(id);
    r.p = p;
    r.rom_journal = rom;
    r.mor_journal = mor;
    r.cpp = rom * 5.0;
    return r;
}

// Seven (rom, mor) reference pairs, labelled by their rank.
std::vector<UnitPair> seven_pairs() {
    return {{"r006", 1.99, 2.03}, {"r014", 1.52, 1.74}, {"r026", 1.54, 1.54}, {"r117", 1.03, 1.50},
            {"r118", 1.03, 0.93}, {"r206", 0.71, 0.91}, {"r223", 0.54, 0.78}};
}

}  // namespace

TEST_CASE("competition ranks", "[ranking]") {
    std::vector<double> v{5, 3, 4, 4, 1};
    CHECK(competition_ranks(v) == std::vector<int>{1, 4, 2, 2, 5});
    std::vector<double> same{2, 2, 2};
    CHECK(competition_ranks(same) == std::vector<int>{1, 1, 1});
}

TEST_CASE("rank units by indicator", "[ranking]") {
    std::vector<IndicatorReport> reports{report("b", 1.0, 1.2), report("a", 1.0, 0.9), report("c", 1.5, 1.0)};
    auto rom = rank_units(reports, Indicator::RomJournal);
    REQUIRE(rom.size() == 3);
    CHECK(rom[0].unit_id == "c");
    CHECK(rom[0].rank == 1);
    CHECK(rom[1].unit_id == "a");
    CHECK(rom[1].rank == 2);
    CHECK(rom[2].unit_id == "b");
    CHECK(rom[2].rank == 2);

    auto mor = rank_units(reports, Indicator::MorJournal);
    CHECK(mor[0].unit_id == "b");
    CHECK(mor[2].unit_id == "a");

    CHECK_THROWS_AS(rank_units(reports, Indicator::RomField), Error);
}

TEST_CASE("indicator names", "[ranking]") {
    for (auto i : {Indicator::RomJournal, Indicator::MorJournal, Indicator::RomField, Indicator::MorField,
                   Indicator::Cpp}) {
        CHECK(parse_indicator(to_string(i)) == i);
    }
    CHECK_FALSE(parse_indicator("h-index"));
}

TEST_CASE("relative difference", "[ranking]") {
    CHECK_THAT(relative_difference(0.71, 0.91), WithinRel(0.2816901408450704, 1e-12));
    CHECK_THAT(relative_difference(1.0, 1.0), WithinAbs(0.0, 1e-15));
    CHECK_THROWS_AS(relative_difference(0.0, 1.0), Error);
    CHECK_THROWS_AS(relative_difference(-1.0, 1.0), Error);
}

TEST_CASE("comparison over seven unit pairs", "[ranking][golden]") {
    auto pairs = seven_pairs();
    auto cmp = compare_pairs(pairs);
    REQUIRE(cmp.entries.size() == 7);
    CHECK(cmp.entries.front().unit_id == "r006");
    CHECK(cmp.entries.front().rank_a == 1);
    CHECK(cmp.entries.front().rank_b == 1);
    CHECK(cmp.entries[3].unit_id == "r117");
    CHECK(cmp.entries[3].rank_a == 4);
    CHECK(cmp.entries[4].rank_a == 4);
    // numpy.polyfit and scipy.stats on the same pairs.
    CHECK_THAT(cmp.regression.slope, WithinRel(-0.26856543, 1e-7));
    CHECK_THAT(cmp.regression.intercept, WithinRel(0.49934317, 1e-7));
    CHECK_THAT(cmp.pearson.statistic, WithinRel(0.9292830953077479, 1e-12));
    CHECK_THAT(cmp.pearson.p_value, WithinRel(0.0024581449503982707, 1e-9));
    CHECK_THAT(cmp.spearman.statistic, WithinRel(0.9549937104572924, 1e-12));
    CHECK(cmp.regression.n == 7);
}

TEST_CASE("comparison needs three units", "[ranking]") {
    std::vector<UnitPair> two{{"a", 1.0, 1.1}, {"b", 1.2, 1.3}};
    try {
        compare_pairs(two);
        FAIL("expected TooFewUnits");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooFewUnits);
    }
}

TEST_CASE("compare_rankings agrees with compare_pairs", "[ranking]") {
    std::vector<IndicatorReport> reports;
    std::vector<UnitPair> pairs;
    for (const auto& p : seven_pairs()) {
        reports.push_back(report(p.unit_id, p.value_a, p.value_b));
        pairs.push_back(p);
    }
    auto a = compare_rankings(reports, Indicator::RomJournal, Indicator::MorJournal);
    auto b = compare_pairs(pairs);
    CHECK(a.pearson.statistic == b.pearson.statistic);
    CHECK(a.regression.slope == b.regression.slope);
    for (std::size_t i = 0; i < a.entries.size(); ++i) CHECK(a.entries[i].unit_id == b.entries[i].unit_id);
}
