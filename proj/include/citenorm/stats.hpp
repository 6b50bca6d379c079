#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace citenorm::stats {

enum class TestName { KruskalWallis, WilcoxonSignedRank, MannWhitneyU, PearsonR, SpearmanRho };

std::string_view to_string(TestName name);

// How the reported p-value was obtained.
enum class PMethod { Exact, NormalApprox, ChiSquare, StudentT, Degenerate };

std::string_view to_string(PMethod method);

struct Correction {
    enum class Kind { None, Bonferroni } kind = Kind::None;
    int m = 1;

    static Correction none() { return {}; }
    static Correction bonferroni(int m) { return {Kind::Bonferroni, m}; }
};

inline constexpr double kDefaultAlpha = 0.05;

struct StatTestResult {
    TestName test_name = TestName::KruskalWallis;
    double statistic = 0.0;
    std::optional<int> df;
    double p_value = 1.0;  // after correction
    double raw_p_value = 1.0;
    Correction correction;
    bool significant = false;
    PMethod method = PMethod::Exact;
    // Kruskal-Wallis only: exact permutation p when enumeration is feasible.
    std::optional<double> exact_p_value;
    // Number of observations actually used (after zero-difference removal
    // for the signed-rank test).
    std::size_t n = 0;
};

struct RegressionFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r = 0.0;
    std::size_t n = 0;
};

// Mid-ranks (1-based) of `values`; tied values share the mean of their ranks.
std::vector<double> mid_ranks(std::span<const double> values);

// Sum over tie groups of (t^3 - t).
double tie_sum(std::span<const double> values);

// min(1, m * p).
double bonferroni(double p, int m);

// Kruskal-Wallis H with mid-ranks and tie correction; p from chi-square
// with k - 1 degrees of freedom. When every pooled value is identical the
// tie-correction denominator vanishes and H is 0 (p = 1).
// exact_p_value is filled by enumerating all distinct group assignments when
// their count does not exceed `max_exact_assignments`.
StatTestResult kruskal_wallis(std::span<const std::vector<double>> groups, double alpha = kDefaultAlpha,
                              std::size_t max_exact_assignments = 200000);

inline constexpr std::size_t kSignedRankExactMax = 20;

// Wilcoxon signed-rank test of location `mu` (default 1.0). Zero
// differences are dropped; if nothing remains the result is degenerate with
// p = 1. Statistic is T+, the sum of ranks of positive differences.
// Exact two-sided p for n <= 20, normal approximation with tie and
// continuity correction above.
StatTestResult test_against_unity(std::span<const double> ratios, double alpha = kDefaultAlpha, double mu = 1.0);

// Mann-Whitney U; statistic is U of the first group. Exact two-sided p when
// min(n1, n2) <= 10 and n1 + n2 <= 20, otherwise normal approximation.
StatTestResult mann_whitney(std::span<const double> first, std::span<const double> second,
                            double alpha = kDefaultAlpha);

struct PairwiseComparison {
    std::size_t first = 0;
    std::size_t second = 0;
    StatTestResult result;
};

// Upper triangle of the pairwise Mann-Whitney matrix, row-major, with
// Bonferroni correction over m = k(k - 1)/2 comparisons.
struct PairwiseMatrix {
    std::size_t groups = 0;
    std::vector<PairwiseComparison> pairs;

    // Result for groups i != j (order-insensitive).
    const StatTestResult& at(std::size_t i, std::size_t j) const;
};

PairwiseMatrix pairwise_posthoc(std::span<const std::vector<double>> groups, double alpha = kDefaultAlpha);

StatTestResult pearson(std::span<const double> x, std::span<const double> y, double alpha = kDefaultAlpha);
StatTestResult spearman(std::span<const double> x, std::span<const double> y, double alpha = kDefaultAlpha);

RegressionFit ols_fit(std::span<const double> x, std::span<const double> y);

// 100 * (count_below + 0.5 * count_equal) / N.
double percentile_rank(double value, std::span<const double> reference);

// Distribution helpers, exposed for tests.
double chi_square_sf(double x, int df);
double student_t_two_sided(double t, int df);
double normal_two_sided(double z);

}  // namespace citenorm::stats
