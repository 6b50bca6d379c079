#include "citenorm/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/students_t.hpp>

#include "citenorm/error.hpp"

namespace citenorm::stats {

namespace {

void require_finite(std::span<const double> values, std::string_view what) {
    for (double v : values) {
        if (!std::isfinite(v)) throw Error(ErrorCode::BadNumber, std::string(what) + ": non-finite value");
    }
}

// Mid-ranks are multiples of 1/2, so doubled ranks are exact integers.
std::vector<long long> doubled(const std::vector<double>& ranks) {
    std::vector<long long> out(ranks.size());
    std::transform(ranks.begin(), ranks.end(), out.begin(), [](double r) { return std::llround(2.0 * r); });
    return out;
}

double two_sided_from_tails(double lower, double upper) { return std::min(1.0, 2.0 * std::min(lower, upper)); }

StatTestResult finish(StatTestResult r, double alpha) {
    r.p_value = std::clamp(r.p_value, 0.0, 1.0);
    r.raw_p_value = r.p_value;
    r.significant = r.p_value < alpha;
    return r;
}

// Centered sums for correlation and regression.
struct Moments {
    double mean_x = 0.0, mean_y = 0.0, sxx = 0.0, syy = 0.0, sxy = 0.0;
};

Moments moments(std::span<const double> x, std::span<const double> y) {
    Moments m;
    const auto n = static_cast<double>(x.size());
    m.mean_x = std::accumulate(x.begin(), x.end(), 0.0) / n;
    m.mean_y = std::accumulate(y.begin(), y.end(), 0.0) / n;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - m.mean_x;
        double dy = y[i] - m.mean_y;
        m.sxx += dx * dx;
        m.syy += dy * dy;
        m.sxy += dx * dy;
    }
    return m;
}

StatTestResult correlation(TestName name, std::span<const double> x, std::span<const double> y, double alpha) {
    const auto n = x.size();
    auto m = moments(x, y);
    if (m.sxx == 0.0 || m.syy == 0.0) throw Error(ErrorCode::ConstantInput, "correlation of a constant series");
    double r = std::clamp(m.sxy / std::sqrt(m.sxx * m.syy), -1.0, 1.0);

    StatTestResult out;
    out.test_name = name;
    out.statistic = r;
    out.df = static_cast<int>(n) - 2;
    out.method = PMethod::StudentT;
    out.n = n;
    if (std::fabs(r) == 1.0) {
        out.p_value = 0.0;
    } else {
        double t = r * std::sqrt(static_cast<double>(*out.df) / (1.0 - r * r));
        out.p_value = student_t_two_sided(t, *out.df);
    }
    return finish(out, alpha);
}

void check_pair(std::span<const double> x, std::span<const double> y, std::size_t min_n) {
    if (x.size() != y.size()) {
        throw Error(ErrorCode::LengthMismatch,
                    "series lengths differ (" + std::to_string(x.size()) + " vs " + std::to_string(y.size()) + ")");
    }
    if (x.size() < min_n) {
        throw Error(ErrorCode::InsufficientData, "need at least " + std::to_string(min_n) + " paired observations");
    }
    require_finite(x, "x");
    require_finite(y, "y");
}

void check_groups(std::span<const std::vector<double>> groups) {
    if (groups.size() < 2) throw Error(ErrorCode::TooFewGroups, "at least two groups are required");
    for (std::size_t g = 0; g < groups.size(); ++g) {
        if (groups[g].empty()) throw Error(ErrorCode::EmptyGroup, "group " + std::to_string(g) + " is empty");
        require_finite(groups[g], "group");
    }
}

__extension__ typedef __int128 i128;

// Exact permutation p for Kruskal-Wallis. Enumerates every distinct
// assignment of the pooled observations to groups of the observed sizes and
// counts those whose sum of R_j^2 / n_j reaches the observed one. The
// comparison is done in integers: doubled rank sums scaled by lcm(n_j).
double kruskal_wallis_exact(const std::vector<long long>& ranks2, const std::vector<std::size_t>& sizes,
                            const std::vector<long long>& observed_sums2) {
    long long lcm = 1;
    for (auto n : sizes) lcm = std::lcm(lcm, static_cast<long long>(n));
    std::vector<i128> weight(sizes.size());
    for (std::size_t g = 0; g < sizes.size(); ++g) weight[g] = lcm / static_cast<long long>(sizes[g]);

    auto score = [&](const std::vector<long long>& sums2) {
        i128 s = 0;
        for (std::size_t g = 0; g < sums2.size(); ++g) s += static_cast<i128>(sums2[g]) * sums2[g] * weight[g];
        return s;
    };
    const i128 target = score(observed_sums2);

    std::vector<std::size_t> remaining = sizes;
    std::vector<long long> sums2(sizes.size(), 0);
    std::uint64_t hits = 0;
    std::uint64_t total = 0;

    auto recurse = [&](auto&& self, std::size_t item) -> void {
        if (item == ranks2.size()) {
            ++total;
            if (score(sums2) >= target) ++hits;
            return;
        }
        for (std::size_t g = 0; g < sizes.size(); ++g) {
            if (remaining[g] == 0) continue;
            --remaining[g];
            sums2[g] += ranks2[item];
            self(self, item + 1);
            sums2[g] -= ranks2[item];
            ++remaining[g];
        }
    };
    recurse(recurse, 0);
    return static_cast<double>(hits) / static_cast<double>(total);
}

double multinomial_count(const std::vector<std::size_t>& sizes) {
    double log_count = std::lgamma(static_cast<double>(std::accumulate(sizes.begin(), sizes.end(), std::size_t{0})) + 1);
    for (auto n : sizes) log_count -= std::lgamma(static_cast<double>(n) + 1);
    return std::exp(log_count);
}

}  // namespace

std::string_view to_string(TestName name) {
    switch (name) {
        case TestName::KruskalWallis: return "KruskalWallis";
        case TestName::WilcoxonSignedRank: return "WilcoxonSignedRank";
        case TestName::MannWhitneyU: return "MannWhitneyU";
        case TestName::PearsonR: return "PearsonR";
        case TestName::SpearmanRho: return "SpearmanRho";
    }
    return "Unknown";
}

std::string_view to_string(PMethod method) {
    switch (method) {
        case PMethod::Exact: return "exact";
        case PMethod::NormalApprox: return "normal";
        case PMethod::ChiSquare: return "chi-square";
        case PMethod::StudentT: return "student-t";
        case PMethod::Degenerate: return "degenerate";
    }
    return "unknown";
}

std::vector<double> mid_ranks(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(values.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i + 1;
        while (j < order.size() && values[order[j]] == values[order[i]]) ++j;
        // Positions i..j-1 hold ranks i+1..j.
        double rank = 0.5 * static_cast<double>(i + 1 + j);
        for (std::size_t k = i; k < j; ++k) ranks[order[k]] = rank;
        i = j;
    }
    return ranks;
}

double tie_sum(std::span<const double> values) {
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    double total = 0.0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i + 1;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        double t = static_cast<double>(j - i);
        total += t * t * t - t;
        i = j;
    }
    return total;
}

double bonferroni(double p, int m) { return std::min(1.0, static_cast<double>(m) * p); }

double chi_square_sf(double x, int df) {
    if (x <= 0.0) return 1.0;
    return boost::math::cdf(boost::math::complement(boost::math::chi_squared_distribution<double>(df), x));
}

double student_t_two_sided(double t, int df) {
    if (!std::isfinite(t)) return 0.0;
    return 2.0 * boost::math::cdf(boost::math::complement(boost::math::students_t_distribution<double>(df), std::fabs(t)));
}

double normal_two_sided(double z) { return std::erfc(std::fabs(z) / std::sqrt(2.0)); }

StatTestResult kruskal_wallis(std::span<const std::vector<double>> groups, double alpha,
                              std::size_t max_exact_assignments) {
    check_groups(groups);
    std::vector<double> pooled;
    std::vector<std::size_t> sizes;
    for (const auto& g : groups) {
        pooled.insert(pooled.end(), g.begin(), g.end());
        sizes.push_back(g.size());
    }
    const auto n_total = pooled.size();
    if (n_total < 3) throw Error(ErrorCode::InsufficientData, "Kruskal-Wallis needs at least 3 observations");

    auto ranks = mid_ranks(pooled);
    auto ranks2 = doubled(ranks);
    std::vector<long long> sums2(groups.size(), 0);
    std::vector<double> rank_sums(groups.size(), 0.0);
    std::size_t offset = 0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        for (std::size_t i = 0; i < sizes[g]; ++i) {
            sums2[g] += ranks2[offset + i];
            rank_sums[g] += ranks[offset + i];
        }
        offset += sizes[g];
    }

    const auto n = static_cast<double>(n_total);
    double s = 0.0;
    for (std::size_t g = 0; g < groups.size(); ++g) s += rank_sums[g] * rank_sums[g] / static_cast<double>(sizes[g]);
    double h_uncorrected = 12.0 / (n * (n + 1.0)) * s - 3.0 * (n + 1.0);
    double correction = 1.0 - tie_sum(pooled) / (n * n * n - n);

    StatTestResult out;
    out.test_name = TestName::KruskalWallis;
    out.df = static_cast<int>(groups.size()) - 1;
    out.n = n_total;
    if (correction <= 0.0) {
        out.statistic = 0.0;
        out.p_value = 1.0;
        out.method = PMethod::Degenerate;
        out.exact_p_value = 1.0;
        return finish(out, alpha);
    }
    out.statistic = std::max(0.0, h_uncorrected / correction);
    out.p_value = chi_square_sf(out.statistic, *out.df);
    out.method = PMethod::ChiSquare;
    if (multinomial_count(sizes) <= static_cast<double>(max_exact_assignments)) {
        out.exact_p_value = kruskal_wallis_exact(ranks2, sizes, sums2);
    }
    return finish(out, alpha);
}

StatTestResult test_against_unity(std::span<const double> ratios, double alpha, double mu) {
    if (ratios.empty()) throw Error(ErrorCode::InsufficientData, "signed-rank test needs at least one value");
    require_finite(ratios, "ratios");

    std::vector<double> magnitude;
    std::vector<bool> positive;
    for (double x : ratios) {
        double d = x - mu;
        if (d == 0.0) continue;
        magnitude.push_back(std::fabs(d));
        positive.push_back(d > 0.0);
    }

    StatTestResult out;
    out.test_name = TestName::WilcoxonSignedRank;
    out.n = magnitude.size();
    if (magnitude.empty()) {
        out.method = PMethod::Degenerate;
        out.p_value = 1.0;
        return finish(out, alpha);
    }

    auto ranks = mid_ranks(magnitude);
    auto ranks2 = doubled(ranks);
    long long t_plus2 = 0;
    for (std::size_t i = 0; i < ranks2.size(); ++i) {
        if (positive[i]) t_plus2 += ranks2[i];
    }
    out.statistic = static_cast<double>(t_plus2) / 2.0;

    const auto n = static_cast<double>(magnitude.size());
    if (magnitude.size() <= kSignedRankExactMax) {
        // dist[s]: number of sign vectors whose doubled T+ equals s.
        const long long max_sum = std::accumulate(ranks2.begin(), ranks2.end(), 0LL);
        std::vector<double> dist(static_cast<std::size_t>(max_sum) + 1, 0.0);
        dist[0] = 1.0;
        long long reach = 0;
        for (long long r : ranks2) {
            for (long long s = reach; s >= 0; --s) dist[static_cast<std::size_t>(s + r)] += dist[static_cast<std::size_t>(s)];
            reach += r;
        }
        const double total = std::ldexp(1.0, static_cast<int>(magnitude.size()));
        double lower = 0.0;
        double upper = 0.0;
        for (long long s = 0; s <= max_sum; ++s) {
            if (s <= t_plus2) lower += dist[static_cast<std::size_t>(s)];
            if (s >= t_plus2) upper += dist[static_cast<std::size_t>(s)];
        }
        out.p_value = two_sided_from_tails(lower / total, upper / total);
        out.method = PMethod::Exact;
    } else {
        double mean = n * (n + 1.0) / 4.0;
        double variance = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0 - tie_sum(magnitude) / 48.0;
        out.method = PMethod::NormalApprox;
        if (variance <= 0.0) {
            out.p_value = 1.0;
        } else {
            double z = std::max(0.0, std::fabs(out.statistic - mean) - 0.5) / std::sqrt(variance);
            out.p_value = normal_two_sided(z);
        }
    }
    return finish(out, alpha);
}

StatTestResult mann_whitney(std::span<const double> first, std::span<const double> second, double alpha) {
    if (first.empty() || second.empty()) throw Error(ErrorCode::EmptyGroup, "Mann-Whitney needs two non-empty groups");
    require_finite(first, "first");
    require_finite(second, "second");

    std::vector<double> pooled(first.begin(), first.end());
    pooled.insert(pooled.end(), second.begin(), second.end());
    auto ranks = mid_ranks(pooled);
    auto ranks2 = doubled(ranks);

    const std::size_t n1 = first.size();
    const std::size_t n2 = second.size();
    long long r1_2 = 0;
    for (std::size_t i = 0; i < n1; ++i) r1_2 += ranks2[i];

    StatTestResult out;
    out.test_name = TestName::MannWhitneyU;
    out.n = n1 + n2;
    const double d1 = static_cast<double>(n1);
    const double d2 = static_cast<double>(n2);
    out.statistic = static_cast<double>(r1_2) / 2.0 - d1 * (d1 + 1.0) / 2.0;

    if (std::min(n1, n2) <= 10 && n1 + n2 <= 20) {
        // ways[j][s]: subsets of size j with doubled rank sum s.
        const long long max_sum = std::accumulate(ranks2.begin(), ranks2.end(), 0LL);
        const std::size_t width = static_cast<std::size_t>(max_sum) + 1;
        std::vector<std::vector<double>> ways(n1 + 1, std::vector<double>(width, 0.0));
        ways[0][0] = 1.0;
        for (long long r : ranks2) {
            for (std::size_t j = n1; j >= 1; --j) {
                for (long long s = max_sum - r; s >= 0; --s) {
                    ways[j][static_cast<std::size_t>(s + r)] += ways[j - 1][static_cast<std::size_t>(s)];
                }
            }
        }
        double total = 0.0;
        double lower = 0.0;
        double upper = 0.0;
        for (long long s = 0; s <= max_sum; ++s) {
            double w = ways[n1][static_cast<std::size_t>(s)];
            total += w;
            if (s <= r1_2) lower += w;
            if (s >= r1_2) upper += w;
        }
        out.p_value = two_sided_from_tails(lower / total, upper / total);
        out.method = PMethod::Exact;
    } else {
        const double n = d1 + d2;
        const double mean = d1 * d2 / 2.0;
        const double variance = d1 * d2 / 12.0 * (n + 1.0 - tie_sum(pooled) / (n * (n - 1.0)));
        out.method = PMethod::NormalApprox;
        if (variance <= 0.0) {
            out.p_value = 1.0;
        } else {
            double z = std::max(0.0, std::fabs(out.statistic - mean) - 0.5) / std::sqrt(variance);
            out.p_value = normal_two_sided(z);
        }
    }
    return finish(out, alpha);
}

const StatTestResult& PairwiseMatrix::at(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    for (const auto& p : pairs) {
        if (p.first == i && p.second == j) return p.result;
    }
    throw std::out_of_range("PairwiseMatrix::at: no such pair");
}

PairwiseMatrix pairwise_posthoc(std::span<const std::vector<double>> groups, double alpha) {
    check_groups(groups);
    const std::size_t k = groups.size();
    const int m = static_cast<int>(k * (k - 1) / 2);
    PairwiseMatrix out;
    out.groups = k;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            auto r = mann_whitney(groups[i], groups[j], alpha);
            r.raw_p_value = r.p_value;
            r.p_value = bonferroni(r.raw_p_value, m);
            r.correction = Correction::bonferroni(m);
            r.significant = r.p_value < alpha;
            out.pairs.push_back({i, j, r});
        }
    }
    return out;
}

StatTestResult pearson(std::span<const double> x, std::span<const double> y, double alpha) {
    check_pair(x, y, 3);
    return correlation(TestName::PearsonR, x, y, alpha);
}

StatTestResult spearman(std::span<const double> x, std::span<const double> y, double alpha) {
    check_pair(x, y, 3);
    auto rx = mid_ranks(x);
    auto ry = mid_ranks(y);
    return correlation(TestName::SpearmanRho, rx, ry, alpha);
}

RegressionFit ols_fit(std::span<const double> x, std::span<const double> y) {
    check_pair(x, y, 2);
    auto m = moments(x, y);
    if (m.sxx == 0.0) throw Error(ErrorCode::ConstantInput, "regression on a constant predictor");
    RegressionFit fit;
    fit.n = x.size();
    fit.slope = m.sxy / m.sxx;
    fit.intercept = m.mean_y - fit.slope * m.mean_x;
    fit.r = m.syy > 0.0 ? std::clamp(m.sxy / std::sqrt(m.sxx * m.syy), -1.0, 1.0) : 0.0;
    return fit;
}

double percentile_rank(double value, std::span<const double> reference) {
    if (reference.empty()) throw Error(ErrorCode::EmptyReference, "percentile rank against an empty reference");
    double below = 0.0;
    double equal = 0.0;
    for (double r : reference) {
        if (r < value) {
            below += 1.0;
        } else if (r == value) {
            equal += 1.0;
        }
    }
    return 100.0 * (below + 0.5 * equal) / static_cast<double>(reference.size());
}

}  // namespace citenorm::stats
