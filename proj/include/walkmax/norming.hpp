#pragma once

#include <cstdint>
#include <string>

#include "walkmax/step_law.hpp"

namespace walkmax::norming {

enum class Regime { gumbel_normal, gumbel_subexp, frechet };

/// Centering/scale pair for one ensemble regime, computed at sequence index m.
struct NormingPair {
    double center = 0.0;
    double scale = 1.0;
    Regime regime = Regime::gumbel_normal;
    double index = 0.0;
};

/// Slack sequence h_n used to instantiate the free "h_n -> infinity" and
/// o(.) choices in the regime-boundary formulas. Default: log log n.
using SlackFn = double (*)(double);
double slack_loglog(double n);
double slack_log(double n);
double slack_sqrt_log(double n);
SlackFn slack_by_name(const std::string& name);

/// Gumbel constants for the normal ensemble: center d with
/// d = sqrt(2 log p) - (log log p + log 4 pi) / (2 sqrt(2 log p)), scale 1/d.
NormingPair gumbel_constants_normal(double p);

/// Gumbel constants for the standard lognormal: d = exp(d_normal), c = d / sqrt(2 log n).
NormingPair gumbel_constants_lognormal(double n);

struct WeibullTailParams {
    double c = 1.0;
    double beta = 0.0;
    double lambda = 1.0;
    double tau = 0.5;
};

/// Gumbel constants for a Weibull-type tail c x^beta exp(-lambda x^tau),
/// built from s_n = log(n) / lambda.
NormingPair gumbel_constants_weibull_type(double n, const WeibullTailParams& tp);

/// Frechet scale a_m solving m * P(|X| > a_m) = 1. Closed form for power
/// tails and the other invertible variants, bisection (rel. tol 1e-10) otherwise.
NormingPair frechet_scale(const StepLaw& law, double m);

/// Truncated-mean centering n * E[X 1(|X| <= a_n)] for power tails with alpha = 1.
double alpha_one_centering(const StepLaw& law, double n);

enum class TailClassKind { regularly_varying, lognormal_type, weibull_type, light_tail, moment };

/// Tail taxonomy driving the regime-boundary tables. Parameter ranges:
/// alpha > 0, gamma > 1, tau in (0,1), s > 2.
class TailClass {
public:
    static TailClass regularly_varying(double alpha);                  // epsilon = min(1, (alpha-2)/2)
    static TailClass regularly_varying(double alpha, double epsilon);  // epsilon in (0, alpha-2)
    static TailClass lognormal_type(double gamma, double lambda = 1.0, double beta = 0.0, double xi = 0.0,
                                    double c = 1.0);
    static TailClass weibull_type(double tau, double lambda = 1.0, double beta = 0.0, double c = 1.0);
    static TailClass light_tail();
    static TailClass moment(double s);

    TailClassKind kind() const noexcept { return kind_; }
    double alpha() const noexcept { return alpha_; }
    double epsilon() const noexcept { return epsilon_; }
    double gamma() const noexcept { return gamma_; }
    double tau() const noexcept { return tau_; }
    double lambda() const noexcept { return lambda_; }
    double beta() const noexcept { return beta_; }
    double xi() const noexcept { return xi_; }
    double c() const noexcept { return c_; }
    double s() const noexcept { return s_; }

private:
    TailClass() = default;
    TailClassKind kind_ = TailClassKind::light_tail;
    double alpha_ = 0, epsilon_ = 0, gamma_ = 0, tau_ = 0, lambda_ = 1, beta_ = 0, xi_ = 0, c_ = 1, s_ = 0;
};

/// Thresholds (xi_n, psi_n): the normal approximation holds below xi_n, the
/// subexponential one above psi_n. Defined for the heavy regular classes only.
struct SeparatingPair {
    double xi = 0.0;
    double psi = 0.0;
};
SeparatingPair separating_sequences(const TailClass& cls, double n, SlackFn h = slack_loglog);

/// Largest admissible ensemble growth p_n for the normal-regime Gumbel limit.
double max_p_bound(const TailClass& cls, double n, SlackFn h = slack_loglog);

/// Smallest admissible block length r_n. `must_diverge` distinguishes
/// "r_n / value -> infinity" rows from plain "r_n > value" rows.
struct BlockBound {
    double value = 0.0;
    bool must_diverge = false;
};
BlockBound min_block_bound(const TailClass& cls, double n);

/// Switch point between the normal and heavy branch of the lognormal-type
/// tail approximation: (lambda 2^{1-gamma})^{1/2} sqrt(n) (log n)^{gamma/2}.
double rozovskii_threshold(double gamma, double lambda, double n);

}  // namespace walkmax::norming
