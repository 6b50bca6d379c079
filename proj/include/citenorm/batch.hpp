#pragma once

#include <span>
#include <vector>

#include "citenorm/indicators.hpp"
#include "citenorm/model.hpp"
#include "citenorm/stats.hpp"

namespace citenorm::batch {

struct EvaluationOptions {
    BasisSelection bases = BasisSelection::Journal;
    SelfCitationMode mode = SelfCitationMode::Include;
};

// One report per set, in input order. The parallel kernels distribute units
// over OpenMP threads; when several units fail, the error of the lowest
// index is rethrown so behaviour matches the serial reference exactly.
std::vector<IndicatorReport> evaluate_units(std::span<const EvaluationSet> sets, const EvaluationOptions& options);
std::vector<IndicatorReport> evaluate_units_serial(std::span<const EvaluationSet> sets,
                                                   const EvaluationOptions& options);

// Signed-rank test of each unit's per-paper ratios against 1.
std::vector<stats::StatTestResult> test_units_against_unity(std::span<const EvaluationSet> sets,
                                                            NormalizationBasis basis, SelfCitationMode mode,
                                                            double alpha);
std::vector<stats::StatTestResult> test_units_against_unity_serial(std::span<const EvaluationSet> sets,
                                                                   NormalizationBasis basis, SelfCitationMode mode,
                                                                   double alpha);

// Threads OpenMP will use (1 when built without OpenMP).
int max_threads();

}  // namespace citenorm::batch
