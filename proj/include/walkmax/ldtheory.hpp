#pragma once

#include <cstdint>
#include <string>

#include "walkmax/normal.hpp"
#include "walkmax/norming.hpp"
#include "walkmax/parallel.hpp"
#include "walkmax/step_law.hpp"

namespace walkmax::ldtheory {

/// Standard Gumbel CDF exp(-exp(-x)).
double limit_cdf_gumbel(double x);
/// Frechet CDF exp(-x^{-alpha}) for x > 0, 0 otherwise.
double limit_cdf_frechet(double x, double alpha);
/// Frechet CDF raised to the positive tail weight: exp(-p_plus x^{-alpha}).
double limit_cdf_frechet_power(double x, double alpha, double p_plus);

enum class ApproxRegime { normal_zone, nagaev_two_term, subexponential, rozovskii_below, rozovskii_above };

/// One evaluated tail approximation, clamped to [0,1], with its input echo.
struct TailApprox {
    double value = 0.0;
    ApproxRegime regime = ApproxRegime::subexponential;
    double n = 0.0;
    double x = 0.0;
    std::string label;
    double normal_term = 0.0;
    double heavy_term = 0.0;
    bool has_psi = false;    // separating sequence defined for this class
    double psi = 0.0;
    bool above_psi = false;  // x exceeds psi_n
};

/// Two-term approximation Phibar(x/sqrt(n)) + n P(X > x) for standardized
/// power-tail steps with alpha > 2; valid for x >= sqrt(n).
TailApprox nagaev_approx(const StepLaw& law, double n, double x);

/// Single-big-jump value n P(X > x) for the heavy-tailed variants.
TailApprox subexp_approx(const StepLaw& law, double n, double x);

struct RozovskiiParams {
    double gamma;   // in (1, 2]
    double lambda;  // > 0
    double beta = 0.0;
    double xi = 0.0;
    double c = 1.0;
};

/// Piecewise lognormal-type approximation: normal branch below the
/// threshold gamma_n, heavy branch above; for gamma = 2 the heavy branch
/// carries the exp(n g'(x)^2 / 2) correction factor. The switch at gamma_n
/// is hard; the two branches do not agree there.
TailApprox rozovskii_ln_approx(const RozovskiiParams& params, double n, double x);

struct WilsonInterval {
    double low = 0.0;
    double high = 1.0;
};
/// 99% Wilson score interval; well-behaved at zero or tiny hit counts.
WilsonInterval wilson99(std::uint64_t hits, std::uint64_t total);

struct MCTailEstimate {
    double p_hat = 0.0;
    std::uint64_t replications = 0;
    std::uint64_t hits = 0;
    double ci_low = 0.0;   // Wilson 99%
    double ci_high = 1.0;
};

/// Monte Carlo estimate of P(S_n - (centered ? n mean : 0) > x) from R
/// replications. Replications are processed in fixed 2^16 chunks with
/// counter-derived substreams, so the result is a pure function of
/// (law, n, x, R, seed, centered) for every worker count.
MCTailEstimate mc_tail(const StepLaw& law, std::uint64_t n, double x, std::uint64_t R, std::uint64_t seed,
                       bool centered, const ParallelConfig& par = {});

}  // namespace walkmax::ldtheory
