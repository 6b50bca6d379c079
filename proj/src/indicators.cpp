#include "citenorm/indicators.hpp"

#include <algorithm>
#include <cmath>

#include "citenorm/error.hpp"

namespace citenorm {

namespace {

// Neumaier compensated summation; keeps totals independent of record order
// to well below the tolerances the indicators are reported at.
class CompensatedSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

void require_nonempty(const EvaluationSet& set) {
    if (set.records.empty()) throw Error(ErrorCode::EmptySet, "unit '" + set.unit_id + "' has no publications");
}

double expected_rate(const PublicationRecord& r, NormalizationBasis basis, const std::string& unit) {
    if (basis == NormalizationBasis::Journal) return r.jcs();
    if (!r.fcs()) {
        throw Error(ErrorCode::MissingFieldRate,
                    "unit '" + unit + "', record '" + r.id() + "': field citation score (fcs) is absent");
    }
    return *r.fcs();
}

MeanWithError mean_and_sem(const std::vector<double>& values) {
    // Welford update; the tests check it against a two-pass computation.
    double mean = 0.0;
    double m2 = 0.0;
    std::size_t n = 0;
    for (double x : values) {
        ++n;
        double delta = x - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (x - mean);
    }
    MeanWithError out{mean, std::nullopt};
    if (n > 1) {
        double variance = std::max(0.0, m2 / static_cast<double>(n - 1));
        out.sem = std::sqrt(variance) / std::sqrt(static_cast<double>(n));
    }
    return out;
}

}  // namespace

std::string_view to_string(NormalizationBasis basis) {
    return basis == NormalizationBasis::Journal ? "journal" : "field";
}

std::string_view to_string(PerformanceFlag flag) {
    switch (flag) {
        case PerformanceFlag::BelowBorderline: return "BelowBorderline";
        case PerformanceFlag::WithinBand: return "WithinBand";
        case PerformanceFlag::AboveWorldAverage: return "AboveWorldAverage";
    }
    return "WithinBand";
}

double cpp(const EvaluationSet& set, SelfCitationMode mode) {
    require_nonempty(set);
    std::uint64_t total = 0;
    for (const auto& r : set.records) total += effective_citations(r, mode);
    return static_cast<double>(total) / static_cast<double>(set.records.size());
}

double expected_mean(const EvaluationSet& set, NormalizationBasis basis) {
    require_nonempty(set);
    CompensatedSum sum;
    for (const auto& r : set.records) sum.add(expected_rate(r, basis, set.unit_id));
    return sum.value() / static_cast<double>(set.records.size());
}

double ratio_of_means(const EvaluationSet& set, NormalizationBasis basis, SelfCitationMode mode) {
    require_nonempty(set);
    std::uint64_t observed = 0;
    CompensatedSum expected;
    for (const auto& r : set.records) {
        observed += effective_citations(r, mode);
        expected.add(expected_rate(r, basis, set.unit_id));
    }
    return static_cast<double>(observed) / expected.value();
}

std::vector<double> per_paper_ratios(const EvaluationSet& set, NormalizationBasis basis, SelfCitationMode mode) {
    require_nonempty(set);
    std::vector<double> ratios;
    ratios.reserve(set.records.size());
    for (const auto& r : set.records) {
        ratios.push_back(static_cast<double>(effective_citations(r, mode)) / expected_rate(r, basis, set.unit_id));
    }
    return ratios;
}

MeanWithError mean_of_ratios(const EvaluationSet& set, NormalizationBasis basis, SelfCitationMode mode) {
    auto ratios = per_paper_ratios(set, basis, mode);
    // Sum the ratios compensated so the mean does not depend on record order.
    CompensatedSum sum;
    for (double x : ratios) sum.add(x);
    auto out = mean_and_sem(ratios);
    out.mean = sum.value() / static_cast<double>(ratios.size());
    return out;
}

PerformanceFlag performance_flag(double indicator_value) {
    if (indicator_value < kBorderline) return PerformanceFlag::BelowBorderline;
    if (indicator_value > kWorldAverage) return PerformanceFlag::AboveWorldAverage;
    return PerformanceFlag::WithinBand;
}

bool has_field_rates(const EvaluationSet& set) {
    return std::all_of(set.records.begin(), set.records.end(),
                       [](const PublicationRecord& r) { return r.fcs().has_value(); });
}

IndicatorReport build_report(const EvaluationSet& set, BasisSelection bases, SelfCitationMode mode) {
    require_nonempty(set);
    IndicatorReport report;
    report.unit_id = set.unit_id;
    report.self_citation_mode = mode;
    report.p = static_cast<std::int64_t>(set.records.size());

    std::uint64_t total = 0;
    for (const auto& r : set.records) total += effective_citations(r, mode);
    report.c = static_cast<std::int64_t>(total);

    report.cpp = cpp(set, mode);
    report.jcsm = jcsm(set);
    report.rom_journal = ratio_of_means(set, NormalizationBasis::Journal, mode);
    auto journal = mean_of_ratios(set, NormalizationBasis::Journal, mode);
    report.mor_journal = journal.mean;
    report.sem_journal = journal.sem;

    bool with_field = bases == BasisSelection::Field || (bases == BasisSelection::Both && has_field_rates(set));
    std::vector<double> field_ratios;
    if (with_field) {
        report.fcsm = fcsm(set);
        report.rom_field = ratio_of_means(set, NormalizationBasis::Field, mode);
        auto field = mean_of_ratios(set, NormalizationBasis::Field, mode);
        report.mor_field = field.mean;
        report.sem_field = field.sem;
        field_ratios = per_paper_ratios(set, NormalizationBasis::Field, mode);
    }

    auto journal_ratios = per_paper_ratios(set, NormalizationBasis::Journal, mode);
    report.per_paper_ratios.reserve(set.records.size());
    for (std::size_t i = 0; i < set.records.size(); ++i) {
        PaperRatio pr{set.records[i].id(), journal_ratios[i], std::nullopt};
        if (with_field) pr.field = field_ratios[i];
        report.per_paper_ratios.push_back(std::move(pr));
    }

    report.rom_flag = performance_flag(report.rom_journal);
    report.mor_flag = performance_flag(report.mor_journal);
    return report;
}

}  // namespace citenorm
