#include "citenorm/batch.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace citenorm::batch {

namespace {

template <typename Result, typename Fn>
std::vector<Result> parallel_map(std::span<const EvaluationSet> sets, Fn fn) {
    const auto n = static_cast<std::ptrdiff_t>(sets.size());
    std::vector<Result> out(sets.size());
    std::vector<std::exception_ptr> errors(sets.size());

#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = fn(sets[static_cast<std::size_t>(i)]);
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }

    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

template <typename Result, typename Fn>
std::vector<Result> serial_map(std::span<const EvaluationSet> sets, Fn fn) {
    std::vector<Result> out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.push_back(fn(s));
    return out;
}

}  // namespace

std::vector<IndicatorReport> evaluate_units(std::span<const EvaluationSet> sets, const EvaluationOptions& options) {
    return parallel_map<IndicatorReport>(
        sets, [&](const EvaluationSet& s) { return build_report(s, options.bases, options.mode); });
}

std::vector<IndicatorReport> evaluate_units_serial(std::span<const EvaluationSet> sets,
                                                   const EvaluationOptions& options) {
    return serial_map<IndicatorReport>(
        sets, [&](const EvaluationSet& s) { return build_report(s, options.bases, options.mode); });
}

std::vector<stats::StatTestResult> test_units_against_unity(std::span<const EvaluationSet> sets,
                                                            NormalizationBasis basis, SelfCitationMode mode,
                                                            double alpha) {
    return parallel_map<stats::StatTestResult>(sets, [&](const EvaluationSet& s) {
        return stats::test_against_unity(per_paper_ratios(s, basis, mode), alpha);
    });
}

std::vector<stats::StatTestResult> test_units_against_unity_serial(std::span<const EvaluationSet> sets,
                                                                   NormalizationBasis basis, SelfCitationMode mode,
                                                                   double alpha) {
    return serial_map<stats::StatTestResult>(sets, [&](const EvaluationSet& s) {
        return stats::test_against_unity(per_paper_ratios(s, basis, mode), alpha);
    });
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace citenorm::batch
