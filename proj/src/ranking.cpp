#include "citenorm/ranking.hpp"

#include <algorithm>
#include <numeric>

#include "citenorm/error.hpp"

namespace citenorm {

std::string_view to_string(Indicator indicator) {
    switch (indicator) {
        case Indicator::RomJournal: return "rom";
        case Indicator::MorJournal: return "mor";
        case Indicator::RomField: return "rom-field";
        case Indicator::MorField: return "mor-field";
        case Indicator::Cpp: return "cpp";
    }
    return "rom";
}

std::optional<Indicator> parse_indicator(std::string_view text) {
    for (auto i : {Indicator::RomJournal, Indicator::MorJournal, Indicator::RomField, Indicator::MorField,
                   Indicator::Cpp}) {
        if (text == to_string(i)) return i;
    }
    return std::nullopt;
}

std::optional<double> indicator_value(const IndicatorReport& report, Indicator indicator) {
    switch (indicator) {
        case Indicator::RomJournal: return report.rom_journal;
        case Indicator::MorJournal: return report.mor_journal;
        case Indicator::RomField: return report.rom_field;
        case Indicator::MorField: return report.mor_field;
        case Indicator::Cpp: return report.cpp;
    }
    return std::nullopt;
}

namespace {

double require_value(const IndicatorReport& report, Indicator indicator) {
    auto v = indicator_value(report, indicator);
    if (!v) {
        throw Error(ErrorCode::MissingIndicator,
                    "unit '" + report.unit_id + "' has no value for indicator '" + std::string(to_string(indicator)) + "'");
    }
    return *v;
}

// Positions sorted by value descending, ties by key.
template <typename Key>
std::vector<std::size_t> descending_order(std::span<const double> values, Key key) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (values[a] != values[b]) return values[a] > values[b];
        return key(a) < key(b);
    });
    return order;
}

}  // namespace

std::vector<int> competition_ranks(std::span<const double> values) {
    auto order = descending_order(values, [](std::size_t i) { return i; });
    std::vector<int> ranks(values.size(), 1);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        if (pos > 0 && values[order[pos]] == values[order[pos - 1]]) {
            ranks[order[pos]] = ranks[order[pos - 1]];
        } else {
            ranks[order[pos]] = static_cast<int>(pos) + 1;
        }
    }
    return ranks;
}

std::vector<RankingEntry> rank_units(std::span<const IndicatorReport> reports, Indicator indicator) {
    std::vector<double> values;
    values.reserve(reports.size());
    for (const auto& r : reports) values.push_back(require_value(r, indicator));

    auto ranks = competition_ranks(values);
    auto order = descending_order(values, [&](std::size_t i) { return reports[i].unit_id; });
    std::vector<RankingEntry> out;
    out.reserve(reports.size());
    for (auto i : order) out.push_back({reports[i].unit_id, values[i], ranks[i], reports[i].p});
    return out;
}

double relative_difference(double rom, double mor) {
    if (!(rom > 0.0)) throw Error(ErrorCode::NonPositiveBaseline, "relative difference needs a positive baseline");
    return (mor - rom) / rom;
}

RankingComparison compare_pairs(std::span<const UnitPair> pairs, Indicator indicator_a, Indicator indicator_b,
                                double alpha) {
    if (pairs.size() < kMinComparisonUnits) {
        throw Error(ErrorCode::TooFewUnits, "ranking comparison needs at least " +
                                                std::to_string(kMinComparisonUnits) + " units, got " +
                                                std::to_string(pairs.size()));
    }
    std::vector<double> a;
    std::vector<double> b;
    std::vector<double> rel;
    for (const auto& p : pairs) {
        a.push_back(p.value_a);
        b.push_back(p.value_b);
        rel.push_back(relative_difference(p.value_a, p.value_b));
    }
    auto rank_a = competition_ranks(a);
    auto rank_b = competition_ranks(b);

    RankingComparison out;
    out.indicator_a = indicator_a;
    out.indicator_b = indicator_b;
    auto order = descending_order(a, [&](std::size_t i) { return pairs[i].unit_id; });
    for (auto i : order) out.entries.push_back({pairs[i].unit_id, a[i], b[i], rank_a[i], rank_b[i], rel[i]});
    out.pearson = stats::pearson(a, b, alpha);
    out.spearman = stats::spearman(a, b, alpha);
    out.regression = stats::ols_fit(a, rel);
    return out;
}

RankingComparison compare_rankings(std::span<const IndicatorReport> reports, Indicator indicator_a,
                                   Indicator indicator_b, double alpha) {
    std::vector<UnitPair> pairs;
    pairs.reserve(reports.size());
    for (const auto& r : reports) {
        pairs.push_back({r.unit_id, require_value(r, indicator_a), require_value(r, indicator_b)});
    }
    return compare_pairs(pairs, indicator_a, indicator_b, alpha);
}

}  // namespace citenorm
