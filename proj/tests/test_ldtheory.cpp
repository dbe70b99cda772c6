#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "walkmax/ldtheory.hpp"
#include "walkmax/normal.hpp"
#include "walkmax/step_law.hpp"

using namespace walkmax;
namespace ld = walkmax::ldtheory;

TEST_SUITE_BEGIN("ldtheory");

TEST_CASE("normal survival against the series/continued-fraction oracle") {
    for (const double x : {0.1, 1.0, 5.0, 10.0, 30.0}) {
        const double ref = oracle::normal_survival(x);
        CHECK(std::fabs(normal_survival(x) / ref - 1.0) < 1e-12);
    }
    CHECK(normal_survival(0.0) == 0.5);
    CHECK(normal_survival(3.0) == doctest::Approx(1.3498980316300959e-3).epsilon(1e-10));
    SUBCASE("monotone decreasing") {
        double prev = 1.0;
        for (double x = -8.0; x <= 38.0; x += 0.5) {
            const double v = normal_survival(x);
            REQUIRE(v < prev);
            prev = v;
        }
    }
    SUBCASE("symmetry identity") {
        for (const double x : {0.5, 1.0, 2.0})
            CHECK(normal_survival(x) + normal_survival(-x) == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("limit cdfs") {
    CHECK(ld::limit_cdf_gumbel(0.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    for (const double a : {0.7, 1.5, 3.0})
        CHECK(ld::limit_cdf_frechet(1.0, a) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(ld::limit_cdf_frechet_power(1.0, 2.0, 0.5) == doctest::Approx(std::exp(-0.5)).epsilon(1e-15));
    CHECK(ld::limit_cdf_frechet(0.0, 1.5) == 0.0);
    CHECK(ld::limit_cdf_frechet(-3.0, 1.5) == 0.0);
    CHECK(ld::limit_cdf_frechet_power(-3.0, 1.5, 0.5) == 0.0);
}

TEST_CASE("two-term tail approximation") {
    const StepLaw law = StepLaw::symmetric_pareto(3.0, 0.5, true);
    const auto approx = ld::nagaev_approx(law, 100.0, 50.0);
    CHECK(approx.value == doctest::Approx(7.72666874638293e-05).epsilon(1e-10));
    CHECK(approx.normal_term == doctest::Approx(2.866515718791945e-07).epsilon(1e-10));
    CHECK(approx.heavy_term == doctest::Approx(7.698003589195011e-05).epsilon(1e-12));
    CHECK(approx.value >= approx.normal_term);
    CHECK(approx.value >= approx.heavy_term);

    SUBCASE("normal term dominates at the diffusive edge x = sqrt(n)") {
        const auto edge = ld::nagaev_approx(law, 100.0, 10.0);
        CHECK(edge.normal_term / edge.heavy_term ==
              doctest::Approx(16.487937641821524).epsilon(1e-10));
        CHECK(edge.normal_term > 10.0 * edge.heavy_term);
    }
    SUBCASE("heavy term dominates past the boundary") {
        // x/sqrt(n) = 5 lies above sqrt((alpha-2+delta) log n) for delta = 1
        CHECK(approx.heavy_term > 100.0 * approx.normal_term);
    }
    SUBCASE("preconditions") {
        CHECK_THROWS(ld::nagaev_approx(law, 100.0, 9.0));                            // x < sqrt(n)
        CHECK_THROWS(ld::nagaev_approx(StepLaw::symmetric_pareto(3.0), 100.0, 50.0));  // not standardized
        CHECK_THROWS(ld::nagaev_approx(StepLaw::std_normal(), 100.0, 50.0));
    }
}

TEST_CASE("single-big-jump approximation") {
    CHECK(ld::subexp_approx(StepLaw::weibull_type(0.5), 10.0, 100.0).value ==
          doctest::Approx(4.5399929762484854e-04).epsilon(1e-12));
    CHECK(ld::subexp_approx(StepLaw::pareto_positive(3.0, 1.0), 50.0, 30.0).value ==
          doctest::Approx(0.001851851851851852).epsilon(1e-12));

    SUBCASE("n = 1 returns the survival function itself") {
        const StepLaw law = StepLaw::std_lognormal();
        CHECK(ld::subexp_approx(law, 1.0, 7.0).value == doctest::Approx(law.survival(7.0)).epsilon(1e-15));
    }
    SUBCASE("equals the heavy term of the two-term form") {
        const StepLaw law = StepLaw::symmetric_pareto(3.0, 0.5, true);
        CHECK(ld::subexp_approx(law, 100.0, 50.0).value ==
              doctest::Approx(ld::nagaev_approx(law, 100.0, 50.0).heavy_term).epsilon(1e-15));
    }
    SUBCASE("clamped to one") {
        CHECK(ld::subexp_approx(StepLaw::pareto_positive(0.5, 1.0), 5.0, 2.0).value == 1.0);
    }
    SUBCASE("threshold flag") {
        // tau = 1/2: psi_n = n * loglog(n) = 152.7 at n = 100
        const StepLaw law = StepLaw::weibull_type(0.5);
        const auto below = ld::subexp_approx(law, 100.0, 100.0);
        CHECK(below.has_psi);
        CHECK_FALSE(below.above_psi);
        CHECK(ld::subexp_approx(law, 100.0, 200.0).above_psi);
        // no table row below two moments
        CHECK_FALSE(ld::subexp_approx(StepLaw::symmetric_pareto(1.5), 100.0, 50.0).has_psi);
    }
    SUBCASE("light-tailed laws are rejected") {
        CHECK_THROWS(ld::subexp_approx(StepLaw::std_normal(), 10.0, 5.0));
        CHECK_THROWS(ld::subexp_approx(StepLaw::centered_exponential(), 10.0, 5.0));
    }
}

TEST_CASE("lognormal-type piecewise approximation") {
    SUBCASE("normal branch below the threshold") {
        const ld::RozovskiiParams params{1.5, 1.0, 0.0, 0.0, 1.0};
        const double n = 1000.0;
        const double thr = norming::rozovskii_threshold(1.5, 1.0, n);
        const auto below = ld::rozovskii_ln_approx(params, n, 0.5 * thr);
        CHECK(below.regime == ld::ApproxRegime::rozovskii_below);
        CHECK(below.value == doctest::Approx(normal_survival(0.5 * thr / std::sqrt(n))).epsilon(1e-14));
        const auto above = ld::rozovskii_ln_approx(params, n, 2.0 * thr);
        CHECK(above.regime == ld::ApproxRegime::rozovskii_above);
        CHECK(above.value == doctest::Approx(above.heavy_term).epsilon(1e-14));
    }
    SUBCASE("gamma = 2 correction factor from the symbolic derivative") {
        // lambda = 1, beta = -2, xi = 0, c = 1: g'(x) = 2 log x / x
        const ld::RozovskiiParams params{2.0, 1.0, -2.0, 0.0, 1.0};
        const double n = 100.0;
        const double x = 2.0 * norming::rozovskii_threshold(2.0, 1.0, n);
        const auto approx = ld::rozovskii_ln_approx(params, n, x);
        const double expected_factor = std::exp(2.0 * n * std::log(x) * std::log(x) / (x * x));
        CHECK(approx.value / approx.heavy_term == doctest::Approx(expected_factor).epsilon(1e-10));
    }
    SUBCASE("at the threshold the heavy branch carries e^lambda") {
        // standard-lognormal-like parameters; at x = gamma_n the correction
        // factor approaches e^{lambda} (within 1% at n = 1e6)
        const double lambda = 0.5;
        const ld::RozovskiiParams params{2.0, lambda, 0.0, -1.0, 1.0 / std::sqrt(2.0 * M_PI)};
        const double n = 1e6;
        const double gn = norming::rozovskii_threshold(2.0, lambda, n);
        const auto at = ld::rozovskii_ln_approx(params, n, gn);
        CHECK(at.regime == ld::ApproxRegime::rozovskii_above);
        const double factor = at.value / at.heavy_term;
        CHECK(factor == doctest::Approx(1.659716227620925).epsilon(1e-9));
        CHECK(factor / std::exp(lambda) == doctest::Approx(1.0).epsilon(0.05));
    }
    CHECK_THROWS(ld::rozovskii_ln_approx({2.5, 1.0, 0.0, 0.0, 1.0}, 100.0, 50.0));
    CHECK_THROWS(ld::rozovskii_ln_approx({1.5, 1.0, 0.0, 0.0, 1.0}, 100.0, 2.0));  // x <= e
}

TEST_CASE("wilson interval") {
    for (const std::uint64_t hits : {std::uint64_t{0}, std::uint64_t{1}, std::uint64_t{500},
                                     std::uint64_t{999}, std::uint64_t{1000}}) {
        const auto ci = ld::wilson99(hits, 1000);
        const double p = static_cast<double>(hits) / 1000.0;
        CHECK(ci.low <= p);
        CHECK(ci.high >= p);
        CHECK(ci.low >= 0.0);
        CHECK(ci.high <= 1.0);
    }
    // interval narrows like 1/sqrt(n)
    CHECK(ld::wilson99(500000, 1000000).high - ld::wilson99(500000, 1000000).low <
          0.3 * (ld::wilson99(5000, 10000).high - ld::wilson99(5000, 10000).low));
}

TEST_CASE("monte carlo tail estimator") {
    SUBCASE("median of a single normal step") {
        const auto est = ld::mc_tail(StepLaw::std_normal(), 1, 0.0, 1000000, 7, false);
        CHECK(est.hits == static_cast<std::uint64_t>(est.p_hat * 1e6 + 0.5));
        CHECK(std::fabs(est.p_hat - 0.5) < 0.0013);
        CHECK(est.ci_low <= est.p_hat);
        CHECK(est.ci_high >= est.p_hat);
    }
    SUBCASE("sums of normals stay symmetric") {
        const auto est = ld::mc_tail(StepLaw::std_normal(), 4, 0.0, 1000000, 8, false);
        CHECK(std::fabs(est.p_hat - 0.5) < 0.0013);
    }
    SUBCASE("deterministic for every worker count") {
        std::vector<ld::MCTailEstimate> runs;
        for (const unsigned w : {1u, 4u, 7u})
            runs.push_back(ld::mc_tail(StepLaw::symmetric_pareto(3.0, 0.5, true), 16, 4.0, 200000, 99,
                                       false, ParallelConfig{w}));
        for (const auto& est : runs) {
            CHECK(est.hits == runs.front().hits);
            CHECK(est.p_hat == runs.front().p_hat);
        }
        // repeated run is bit-identical
        const auto again = ld::mc_tail(StepLaw::symmetric_pareto(3.0, 0.5, true), 16, 4.0, 200000, 99,
                                       false, ParallelConfig{2});
        CHECK(again.hits == runs.front().hits);
    }
    SUBCASE("matches exact gamma-tail references for centered exponential steps") {
        // P(S_400 > x sqrt(400)) = Q(400, 400 + 20 x); references from the
        // continued-fraction oracle, cross-checked below.
        const double q05 = oracle::gamma_q_cf(400.0, 410.0);
        const double q20 = oracle::gamma_q_cf(400.0, 440.0);
        CHECK(q05 == doctest::Approx(0.30414136506762396).epsilon(1e-10));
        CHECK(q20 == doctest::Approx(0.02537996243201433).epsilon(1e-10));
        const auto est05 = ld::mc_tail(StepLaw::centered_exponential(), 400, 10.0, 100000, 31, false);
        CHECK(std::fabs(est05.p_hat / q05 - 1.0) < 0.02);
        const auto est20 = ld::mc_tail(StepLaw::centered_exponential(), 400, 40.0, 300000, 37, false);
        CHECK(std::fabs(est20.p_hat / q20 - 1.0) < 0.045);
    }
    SUBCASE("normal approximation holds at the moment-zone boundary") {
        // s = 4 moments: x = sqrt((s-2) log n) at n = 100; finite-n ratio
        // sits near 0.96, well inside the nominal [0.9, 1.1] band.
        const double x = std::sqrt(2.0 * std::log(100.0));
        const auto est = ld::mc_tail(StepLaw::symmetric_pareto(5.0, 0.5, true), 100, x * 10.0,
                                     2000000, 41, false);
        const double ratio = est.p_hat / normal_survival(x);
        CHECK(ratio > 0.9);
        CHECK(ratio < 1.1);
    }
    SUBCASE("extended-precision path for alpha <= 1") {
        const StepLaw heavy = StepLaw::pareto_positive(0.7, 1.0);
        const auto certain = ld::mc_tail(heavy, 50, 0.0, 1000, 3, false);
        CHECK(certain.p_hat == 1.0);  // positive steps
        const auto rare = ld::mc_tail(heavy, 50, 1e12, 1000, 3, false);
        CHECK(rare.p_hat >= 0.0);
        CHECK(rare.p_hat < 0.2);
        const auto rare2 = ld::mc_tail(heavy, 50, 1e12, 1000, 3, false, ParallelConfig{3});
        CHECK(rare.hits == rare2.hits);
    }
    SUBCASE("centered flag needs a defined mean") {
        CHECK_THROWS(ld::mc_tail(StepLaw::pareto_positive(1.0, 1.0), 10, 5.0, 1000, 1, true));
    }
    CHECK_THROWS(ld::mc_tail(StepLaw::std_normal(), 1, 0.0, 999, 1, false));
}

TEST_SUITE_END();
