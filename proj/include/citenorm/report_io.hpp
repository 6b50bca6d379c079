#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "citenorm/indicators.hpp"
#include "citenorm/ranking.hpp"
#include "citenorm/stats.hpp"

namespace citenorm {

enum class OutputFormat { Json, Csv, Markdown };

// JSON carries full precision; optional values are null when absent.
// Layout is documented in docs/json-schema.md.
void to_json(nlohmann::json& j, const IndicatorReport& report);
void from_json(const nlohmann::json& j, IndicatorReport& report);
void to_json(nlohmann::json& j, const stats::StatTestResult& result);
void to_json(nlohmann::json& j, const stats::RegressionFit& fit);
void to_json(nlohmann::json& j, const RankingEntry& entry);
void to_json(nlohmann::json& j, const RankingComparison& comparison);

// A labelled statistical result, as emitted by the `test` command.
struct LabelledTest {
    std::string label;  // unit id or "a vs b"
    stats::StatTestResult result;
};

void to_json(nlohmann::json& j, const LabelledTest& test);

// Human/tabular writers; numbers rounded half away from zero to `precision`.
void write_reports(std::ostream& out, std::span<const IndicatorReport> reports, OutputFormat format, int precision,
                   bool per_paper);
void write_ranking(std::ostream& out, std::span<const RankingEntry> entries, Indicator indicator,
                   OutputFormat format, int precision);
void write_comparison(std::ostream& out, const RankingComparison& comparison, OutputFormat format, int precision);
void write_tests(std::ostream& out, std::span<const LabelledTest> tests, OutputFormat format, int precision);

// Plot data for the ranking and relative-difference figures:
// unit_id,rom,mor,rel_diff_pct,rank_rom,rank_mor at full precision.
void write_plot_data(std::ostream& out, const RankingComparison& comparison);

}  // namespace citenorm
