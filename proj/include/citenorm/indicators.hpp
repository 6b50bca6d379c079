#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "citenorm/model.hpp"

namespace citenorm {

enum class NormalizationBasis { Journal, Field };

// Which bases build_report should populate. Journal figures are always
// computed; Field requires fcs on every record, Both fills field figures
// only when every record has an fcs.
enum class BasisSelection { Journal, Field, Both };

// CWTS convention: below 0.80 is underperformance, above 1.00 is above the
// world average; both boundary values fall inside the band.
enum class PerformanceFlag { BelowBorderline, WithinBand, AboveWorldAverage };

inline constexpr double kBorderline = 0.80;
inline constexpr double kWorldAverage = 1.00;

std::string_view to_string(NormalizationBasis basis);
std::string_view to_string(PerformanceFlag flag);

struct MeanWithError {
    double mean = 0.0;
    std::optional<double> sem;  // absent for a single observation
};

struct PaperRatio {
    std::string id;
    double journal = 0.0;
    std::optional<double> field;

    friend bool operator==(const PaperRatio&, const PaperRatio&) = default;
};

struct IndicatorReport {
    std::string unit_id;
    SelfCitationMode self_citation_mode = SelfCitationMode::Include;
    std::int64_t p = 0;
    std::int64_t c = 0;
    double cpp = 0.0;
    double jcsm = 0.0;
    std::optional<double> fcsm;
    double rom_journal = 0.0;
    std::optional<double> rom_field;
    double mor_journal = 0.0;
    std::optional<double> mor_field;
    std::optional<double> sem_journal;
    std::optional<double> sem_field;
    std::vector<PaperRatio> per_paper_ratios;
    // Flags for the ratio-of-means and mean-of-ratios journal indicators.
    PerformanceFlag rom_flag = PerformanceFlag::WithinBand;
    PerformanceFlag mor_flag = PerformanceFlag::WithinBand;

    friend bool operator==(const IndicatorReport&, const IndicatorReport&) = default;
};

// Mean effective citations per publication.
double cpp(const EvaluationSet& set, SelfCitationMode mode);

// Mean of per-paper expected rates; equals the publication-weighted
// journal (field) mean when each paper carries its journal's (field's) rate.
double expected_mean(const EvaluationSet& set, NormalizationBasis basis);
inline double jcsm(const EvaluationSet& set) { return expected_mean(set, NormalizationBasis::Journal); }
inline double fcsm(const EvaluationSet& set) { return expected_mean(set, NormalizationBasis::Field); }

// Sum of effective citations over sum of expected rates (CPP / JCSm).
double ratio_of_means(const EvaluationSet& set, NormalizationBasis basis, SelfCitationMode mode);

// Effective citations over expected rate, one entry per record in order.
std::vector<double> per_paper_ratios(const EvaluationSet& set, NormalizationBasis basis, SelfCitationMode mode);

// Mean of the per-paper ratios with the standard error of the mean
// (sample standard deviation, n - 1 denominator, over sqrt(P)).
MeanWithError mean_of_ratios(const EvaluationSet& set, NormalizationBasis basis, SelfCitationMode mode);

PerformanceFlag performance_flag(double indicator_value);

IndicatorReport build_report(const EvaluationSet& set, BasisSelection bases, SelfCitationMode mode);

// True when every record carries an fcs.
bool has_field_rates(const EvaluationSet& set);

}  // namespace citenorm
