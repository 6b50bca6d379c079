#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "citenorm/error.hpp"
#include "citenorm/indicators.hpp"
#include "citenorm/ingest.hpp"
#include "citenorm/stats.hpp"
#include "oracles.hpp"

using namespace citenorm;
using namespace citenorm::stats;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

template <typename F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::Io;
}

std::vector<double> draw(std::mt19937_64& rng, std::size_t n, int levels) {
    // Small integer levels give plenty of ties.
    std::uniform_int_distribution<int> d(0, levels);
    std::vector<double> v(n);
    for (auto& x : v) x = d(rng) * 0.25;
    return v;
}

}  // namespace

TEST_CASE("mid-ranks agree with counting", "[stats]") {
    std::vector<double> v{3.0, 1.0, 3.0, 2.0, 3.0};
    auto r = mid_ranks(v);
    CHECK(r == std::vector<double>{4.0, 1.0, 4.0, 2.0, 4.0});
    CHECK(tie_sum(v) == 24.0);

    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
        auto x = draw(rng, 1 + t % 30, 6);
        CHECK(mid_ranks(x) == oracle::ranks_by_counting(x));
    }
}

TEST_CASE("Kruskal-Wallis worked examples", "[stats][kw]") {
    std::vector<std::vector<double>> groups{{1, 2, 3}, {4, 5, 6}};
    auto r = kruskal_wallis(groups);
    CHECK_THAT(r.statistic, WithinRel(3.857142857142857, 1e-12));
    CHECK_THAT(r.p_value, WithinRel(0.04953461343562649, 1e-9));
    CHECK(r.df == 1);
    CHECK(r.method == PMethod::ChiSquare);
    CHECK(r.significant);
    REQUIRE(r.exact_p_value);
    CHECK_THAT(*r.exact_p_value, WithinAbs(0.1, 1e-12));
    CHECK(r.n == 6);

    std::vector<std::vector<double>> same{{1, 2, 3}, {1, 2, 3}};
    auto s = kruskal_wallis(same);
    CHECK_THAT(s.statistic, WithinAbs(0.0, 1e-12));
    CHECK_THAT(s.p_value, WithinAbs(1.0, 1e-12));

    std::vector<std::vector<double>> tied{{2, 2}, {2, 2, 2}};
    auto t = kruskal_wallis(tied);
    CHECK(t.statistic == 0.0);
    CHECK(t.p_value == 1.0);
    CHECK(t.method == PMethod::Degenerate);
}

TEST_CASE("Kruskal-Wallis errors", "[stats][kw]") {
    std::vector<std::vector<double>> one{{1, 2, 3}};
    CHECK(code_of([&] { kruskal_wallis(one); }) == ErrorCode::TooFewGroups);
    std::vector<std::vector<double>> empty{{1, 2}, {}};
    CHECK(code_of([&] { kruskal_wallis(empty); }) == ErrorCode::EmptyGroup);
    std::vector<std::vector<double>> tiny{{1}, {2}};
    CHECK(code_of([&] { kruskal_wallis(tiny); }) == ErrorCode::InsufficientData);
    std::vector<std::vector<double>> nan{{1, NAN}, {2, 3}};
    CHECK(code_of([&] { kruskal_wallis(nan); }) == ErrorCode::BadNumber);
}

TEST_CASE("Kruskal-Wallis matches the textbook formula and permutation oracle", "[stats][kw][oracle]") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 60; ++t) {
        std::size_t k = 2 + t % 2;
        std::vector<std::vector<double>> groups;
        for (std::size_t g = 0; g < k; ++g) groups.push_back(draw(rng, 1 + (t + g) % 4, 5));
        auto r = kruskal_wallis(groups);
        CHECK_THAT(r.statistic, WithinAbs(oracle::kruskal_h(groups), 1e-12));
        if (r.method != PMethod::Degenerate) {
            REQUIRE(r.exact_p_value);
            CHECK_THAT(*r.exact_p_value, WithinAbs(oracle::kruskal_exact_p(groups), 1e-12));
        }
    }
}

TEST_CASE("Kruskal-Wallis is invariant under monotone transforms", "[stats][kw][property]") {
    std::mt19937_64 rng(11);
    std::lognormal_distribution<double> d(0.0, 1.0);
    for (int t = 0; t < 100; ++t) {
        std::vector<std::vector<double>> a(3), b(3);
        for (std::size_t g = 0; g < 3; ++g) {
            for (int i = 0; i < 4 + t % 5; ++i) {
                double x = d(rng);
                a[g].push_back(x);
                b[g].push_back(std::log(x) * 3.0 + 2.0);
            }
        }
        CHECK_THAT(kruskal_wallis(a, 0.05, 0).statistic, WithinAbs(kruskal_wallis(b, 0.05, 0).statistic, 1e-12));
    }
}

TEST_CASE("signed-rank test against unity", "[stats][wilcoxon]") {
    std::vector<double> up{1.2, 1.3, 1.4};
    auto r = test_against_unity(up);
    CHECK(r.statistic == 6.0);
    CHECK_THAT(r.p_value, WithinAbs(0.25, 1e-12));
    CHECK(r.method == PMethod::Exact);
    CHECK_FALSE(r.significant);

    std::vector<double> down{0.5, 0.6, 0.4, 0.55, 0.45};
    auto d = test_against_unity(down);
    CHECK(d.statistic == 0.0);
    CHECK_THAT(d.p_value, WithinAbs(0.0625, 1e-12));

    std::vector<double> ones{1.0, 1.0, 1.0};
    auto o = test_against_unity(ones);
    CHECK(o.p_value == 1.0);
    CHECK(o.method == PMethod::Degenerate);
    CHECK(o.n == 0);

    std::vector<double> none;
    CHECK(code_of([&] { test_against_unity(none); }) == ErrorCode::InsufficientData);
}

TEST_CASE("signed-rank exact p matches sign enumeration", "[stats][wilcoxon][oracle]") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 150; ++t) {
        auto x = draw(rng, 1 + t % 16, 8);
        auto r = test_against_unity(x);
        CHECK_THAT(r.p_value, WithinAbs(oracle::signed_rank_p(x, 1.0), 1e-12));
    }
}

TEST_CASE("signed-rank normal approximation for larger samples", "[stats][wilcoxon]") {
    auto set = load_appendix_fixture();
    auto ratios = per_paper_ratios(set, NormalizationBasis::Journal, SelfCitationMode::Include);
    auto r = test_against_unity(ratios);
    CHECK(r.method == PMethod::NormalApprox);
    CHECK(r.n == 65);
    CHECK(r.statistic == 706.0);
    // scipy.stats.wilcoxon(x - 1, correction=True, method="approx")
    CHECK_THAT(r.p_value, WithinRel(0.01676017695040523, 1e-9));
}

TEST_CASE("Mann-Whitney worked example and oracle", "[stats][mw]") {
    std::vector<double> a{1, 2}, b{3, 4};
    auto r = mann_whitney(a, b);
    CHECK(r.statistic == 0.0);
    CHECK_THAT(r.p_value, WithinAbs(1.0 / 3.0, 1e-12));
    CHECK(r.method == PMethod::Exact);

    std::mt19937_64 rng(17);
    for (int t = 0; t < 100; ++t) {
        auto x = draw(rng, 1 + t % 7, 6);
        auto y = draw(rng, 1 + (t / 7) % 7, 6);
        CHECK_THAT(mann_whitney(x, y).p_value, WithinAbs(oracle::mann_whitney_p(x, y), 1e-12));
    }

    std::vector<double> big_a, big_b;
    for (int i = 0; i < 15; ++i) {
        big_a.push_back(i);
        big_b.push_back(i + 0.5);
    }
    CHECK(mann_whitney(big_a, big_b).method == PMethod::NormalApprox);
}

TEST_CASE("Bonferroni and pairwise post-hoc", "[stats][mw]") {
    CHECK(bonferroni(0.4, 3) == 1.0);
    CHECK_THAT(bonferroni(0.01, 3), WithinAbs(0.03, 1e-15));

    std::vector<std::vector<double>> groups{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    auto m = pairwise_posthoc(groups);
    CHECK(m.pairs.size() == 3);
    const auto& ab = m.at(1, 0);
    CHECK(ab.correction.kind == Correction::Kind::Bonferroni);
    CHECK(ab.correction.m == 3);
    CHECK_THAT(ab.raw_p_value, WithinAbs(0.1, 1e-12));
    CHECK_THAT(ab.p_value, WithinAbs(0.3, 1e-12));
}

TEST_CASE("correlation and regression examples", "[stats][corr]") {
    std::vector<double> x{1, 2, 3}, y{1, 2, 4};
    auto p = pearson(x, y);
    CHECK_THAT(p.statistic, WithinRel(0.9819805060619657, 1e-12));
    CHECK(p.method == PMethod::StudentT);
    CHECK(p.df == 1);

    std::vector<double> perm{2, 1, 3};
    CHECK_THAT(spearman(x, perm).statistic, WithinAbs(0.5, 1e-12));
    CHECK_THAT(spearman(x, y).statistic, WithinAbs(1.0, 1e-12));
    CHECK(spearman(x, y).p_value == 0.0);

    auto fit = ols_fit(x, y);
    CHECK_THAT(fit.slope, WithinAbs(1.5, 1e-12));
    CHECK_THAT(fit.intercept, WithinAbs(-2.0 / 3.0, 1e-12));

    std::vector<double> two{1, 2};
    CHECK(code_of([&] { pearson(two, two); }) == ErrorCode::InsufficientData);
    std::vector<double> four{1, 2, 3, 4};
    CHECK(code_of([&] { pearson(x, four); }) == ErrorCode::LengthMismatch);
    std::vector<double> flat{2, 2, 2};
    CHECK(code_of([&] { pearson(x, flat); }) == ErrorCode::ConstantInput);
    CHECK(code_of([&] { ols_fit(flat, x); }) == ErrorCode::ConstantInput);
    CHECK(ols_fit(x, flat).r == 0.0);
}

TEST_CASE("Pearson p-value follows Student t", "[stats][corr]") {
    std::vector<double> rom{1.99, 1.52, 1.54, 1.03, 1.03, 0.71, 0.54};
    std::vector<double> mor{2.03, 1.74, 1.54, 1.50, 0.93, 0.91, 0.78};
    auto p = pearson(rom, mor);
    CHECK(p.df == 5);
    double t = p.statistic * std::sqrt(5.0 / (1.0 - p.statistic * p.statistic));
    CHECK_THAT(p.p_value, WithinRel(student_t_two_sided(t, 5), 1e-12));
}

TEST_CASE("percentile rank", "[stats]") {
    std::vector<double> ref{1, 2, 3, 4};
    CHECK(percentile_rank(3, ref) == 62.5);
    CHECK(percentile_rank(0, ref) == 0.0);
    CHECK(percentile_rank(5, ref) == 100.0);
    std::vector<double> none;
    CHECK(code_of([&] { percentile_rank(1, none); }) == ErrorCode::EmptyReference);
}

TEST_CASE("distribution helpers", "[stats]") {
    CHECK_THAT(chi_square_sf(3.841458820694124, 1), WithinAbs(0.05, 1e-12));
    CHECK_THAT(normal_two_sided(1.959963984540054), WithinAbs(0.05, 1e-12));
    CHECK_THAT(student_t_two_sided(2.570581835636314, 5), WithinAbs(0.05, 1e-12));
}
