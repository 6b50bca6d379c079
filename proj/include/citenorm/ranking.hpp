#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "citenorm/indicators.hpp"
#include "citenorm/stats.hpp"

namespace citenorm {

enum class Indicator { RomJournal, MorJournal, RomField, MorField, Cpp };

std::string_view to_string(Indicator indicator);
std::optional<Indicator> parse_indicator(std::string_view text);

// Value of the selected indicator, or nullopt when the report lacks it.
std::optional<double> indicator_value(const IndicatorReport& report, Indicator indicator);

struct RankingEntry {
    std::string unit_id;
    double indicator_value = 0.0;
    int rank = 1;
    std::int64_t p = 0;
};

// Descending by value; ties share the smallest rank (competition ranking,
// 1-2-3-3-5); tied units are listed by unit_id.
// Throws Error(MissingIndicator) if any report lacks the indicator.
std::vector<RankingEntry> rank_units(std::span<const IndicatorReport> reports, Indicator indicator);

// Competition ranks of raw values, same conventions as rank_units.
std::vector<int> competition_ranks(std::span<const double> values);

// (mor - rom) / rom as a signed fraction. Error(NonPositiveBaseline) if rom <= 0.
double relative_difference(double rom, double mor);

struct UnitPair {
    std::string unit_id;
    double value_a = 0.0;
    double value_b = 0.0;
};

struct ComparisonEntry {
    std::string unit_id;
    double value_a = 0.0;
    double value_b = 0.0;
    int rank_a = 1;
    int rank_b = 1;
    double relative_difference = 0.0;
};

struct RankingComparison {
    Indicator indicator_a = Indicator::RomJournal;
    Indicator indicator_b = Indicator::MorJournal;
    // Ordered by rank_a, then unit_id.
    std::vector<ComparisonEntry> entries;
    stats::StatTestResult pearson;
    stats::StatTestResult spearman;
    // Relative difference of b from a, regressed on value_a.
    stats::RegressionFit regression;
};

inline constexpr std::size_t kMinComparisonUnits = 3;

// Throws Error(TooFewUnits) below three units.
RankingComparison compare_rankings(std::span<const IndicatorReport> reports, Indicator indicator_a,
                                   Indicator indicator_b, double alpha = stats::kDefaultAlpha);

// Same analysis over precomputed value pairs.
RankingComparison compare_pairs(std::span<const UnitPair> pairs, Indicator indicator_a = Indicator::RomJournal,
                                Indicator indicator_b = Indicator::MorJournal, double alpha = stats::kDefaultAlpha);

}  // namespace citenorm
