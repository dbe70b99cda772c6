#include <cmath>
#include <vector>

#include "doctest.h"
#include "walkmax/rng.hpp"
#include "walkmax/stats.hpp"
#include "walkmax/step_law.hpp"

using namespace walkmax;
namespace st = walkmax::stats;

TEST_SUITE_BEGIN("stats");

TEST_CASE("dkw threshold") {
    CHECK(st::dkw_threshold(2000, 1e-3) == doctest::Approx(0.04359157724).epsilon(1e-8));
    // quadrupling the sample halves the band
    CHECK(st::dkw_threshold(1000, 0.01) ==
          doctest::Approx(2.0 * st::dkw_threshold(4000, 0.01)).epsilon(1e-14));
    CHECK_THROWS(st::dkw_threshold(0, 0.5));
    CHECK_THROWS(st::dkw_threshold(100, 2.0));
    CHECK_THROWS(st::dkw_threshold(100, 0.0));
}

TEST_CASE("ks distance") {
    const auto uniform = [](double t) { return std::min(1.0, std::max(0.0, t)); };
    SUBCASE("single point") {
        CHECK(st::ks_distance({0.5}, uniform) == doctest::Approx(0.5).epsilon(1e-15));
    }
    SUBCASE("exact quantile construction") {
        const std::size_t m = 100;
        std::vector<double> sample;
        for (std::size_t i = 1; i <= m; ++i)
            sample.push_back((static_cast<double>(i) - 0.5) / static_cast<double>(m));
        CHECK(st::ks_distance(sample, uniform) <= 0.5 / static_cast<double>(m) + 1e-12);
    }
    SUBCASE("uniform sample against its own cdf stays within the DKW band") {
        RandomState rng(2024);
        std::vector<double> sample;
        for (int i = 0; i < 2000; ++i) sample.push_back(rng.next_open01());
        CHECK(st::ks_distance(sample, uniform) <= st::dkw_threshold(2000, 1e-3));
    }
    SUBCASE("invariant under strictly increasing transforms") {
        RandomState rng(77);
        std::vector<double> sample, mapped;
        for (int i = 0; i < 500; ++i) {
            const double u = rng.next_open01();
            sample.push_back(u);
            mapped.push_back(std::exp(u));
        }
        const auto exp_uniform = [&](double t) { return uniform(std::log(t)); };
        CHECK(st::ks_distance(sample, uniform) ==
              doctest::Approx(st::ks_distance(mapped, exp_uniform)).epsilon(1e-12));
    }
    CHECK_THROWS(st::ks_distance({}, uniform));
}

TEST_CASE("two-sample ks") {
    CHECK(st::ks_two_sample({1.0, 2.0, 3.0}, {1.0, 2.0, 3.0}) == 0.0);
    CHECK(st::ks_two_sample({1.0, 2.0}, {5.0, 6.0}) == doctest::Approx(1.0));
    CHECK(st::ks_two_sample({1.0, 3.0}, {2.0, 4.0}) == doctest::Approx(0.5));
}

TEST_CASE("hill estimator") {
    SUBCASE("forced by construction") {
        const std::vector<double> sample = {std::exp(4.0), std::exp(3.0), std::exp(2.0), std::exp(1.0)};
        CHECK(st::hill(sample, 3) == doctest::Approx(2.0).epsilon(1e-13));
        // the alternate convention divides by the k-th order statistic
        CHECK(st::hill(sample, 3, st::HillThreshold::order_k) == doctest::Approx(1.0).epsilon(1e-13));
    }
    SUBCASE("scale invariance") {
        RandomState rng(5);
        const StepLaw law = StepLaw::pareto_positive(2.0, 1.0);
        std::vector<double> sample, scaled;
        for (int i = 0; i < 500; ++i) {
            const double v = law.sample(rng);
            sample.push_back(v);
            scaled.push_back(3.7 * v);
        }
        CHECK(st::hill(sample, 100) == doctest::Approx(st::hill(scaled, 100)).epsilon(1e-12));
    }
    SUBCASE("consistency on an iid power-tail sample") {
        RandomState rng(9);
        const StepLaw law = StepLaw::pareto_positive(2.5, 1.0);
        std::vector<double> sample;
        for (int i = 0; i < 5000; ++i) sample.push_back(law.sample(rng));
        CHECK(std::fabs(st::hill(sample, 200) - 0.4) < 0.06);
    }
    SUBCASE("errors") {
        CHECK_THROWS(st::hill({1.0, 2.0}, 0));
        CHECK_THROWS(st::hill({1.0, 2.0}, 2));
        CHECK_THROWS(st::hill({3.0, 2.0, -1.0}, 2));  // nonpositive inside the top k+1
    }
}

TEST_CASE("tail empirical measure") {
    SUBCASE("counting") {
        const auto est = st::tail_empirical_measure({5.0, 5.0, 5.0, 5.0}, 2,
                                                    {{0.0, std::numeric_limits<double>::infinity()}});
        CHECK(est.masses[0] == doctest::Approx(2.0));
    }
    SUBCASE("additivity over disjoint intervals and exact k-denominators") {
        RandomState rng(31);
        std::vector<double> pts;
        for (int i = 0; i < 400; ++i) pts.push_back(4.0 * rng.next_open01());
        const std::size_t k = 7;
        const auto split = st::tail_empirical_measure(pts, k, {{0.0, 1.0}, {1.0, 2.0}});
        const auto merged = st::tail_empirical_measure(pts, k, {{0.0, 2.0}});
        CHECK(split.masses[0] + split.masses[1] == doctest::Approx(merged.masses[0]).epsilon(1e-14));
        for (const double m : split.masses) {
            const double scaled = m * static_cast<double>(k);
            CHECK(scaled == doctest::Approx(std::round(scaled)).epsilon(1e-12));
        }
    }
    SUBCASE("frechet-regime points against the limit intensity") {
        // ensemble of p sums of n heavy-tailed steps, k = p/100: the (1,inf)
        // mass estimates p_plus within 25%
        const StepLaw law = StepLaw::symmetric_pareto(1.5, 0.5);
        const std::uint64_t n = 20, p = 50000;
        const std::size_t k = 500;
        const double a = std::pow(static_cast<double>(n) * static_cast<double>(p) /
                                      static_cast<double>(k),
                                  1.0 / 1.5);
        std::vector<double> pts;
        RandomState rng(55);
        for (std::uint64_t i = 0; i < p; ++i) {
            double s = 0.0;
            for (std::uint64_t t = 0; t < n; ++t) s += law.sample(rng);
            pts.push_back(s / a);
        }
        const auto est =
            st::tail_empirical_measure(pts, k, {{1.0, std::numeric_limits<double>::infinity()}});
        CHECK(est.masses[0] == doctest::Approx(0.5).epsilon(0.25));
    }
    CHECK_THROWS(st::tail_empirical_measure({1.0}, 2, {{0.0, 1.0}}));
}

TEST_CASE("gof report semantics") {
    const auto pass = st::make_gof("stat", 0.01, 0.05, 100, "target");
    CHECK(pass.pass);
    const auto fail = st::make_gof("stat", 0.06, 0.05, 100, "target");
    CHECK_FALSE(fail.pass);
}

TEST_CASE("joint max/min check") {
    SUBCASE("degenerate single replication is an indicator") {
        const auto r = st::joint_maxmin_check({-1.0}, {-2.0}, 0.0, 0.0, 0.5);
        const double target = std::exp(-1.0) * (1.0 - std::exp(-1.0));
        CHECK(r.observed == doctest::Approx(std::fabs(1.0 - target)).epsilon(1e-12));
    }
    SUBCASE("far in the upper corner both sides approach one") {
        std::vector<double> maxima, minima;
        RandomState rng(13);
        for (int i = 0; i < 200; ++i) {
            maxima.push_back(rng.next_normal());
            minima.push_back(maxima.back() - 1.0);
        }
        const auto r = st::joint_maxmin_check(maxima, minima, 50.0, 50.0, 0.05);
        CHECK(r.observed < 1e-6);
        CHECK(r.pass);
    }
    CHECK_THROWS(st::joint_maxmin_check({1.0}, {1.0, 2.0}, 0.0, 0.0, 0.05));
}

TEST_CASE("pearson correlation") {
    CHECK(st::pearson_correlation({1.0, 2.0, 3.0}, {2.0, 4.0, 6.0}) == doctest::Approx(1.0));
    CHECK(st::pearson_correlation({1.0, 2.0, 3.0}, {3.0, 2.0, 1.0}) == doctest::Approx(-1.0));
    CHECK_THROWS(st::pearson_correlation({1.0}, {1.0}));
}

TEST_SUITE_END();
