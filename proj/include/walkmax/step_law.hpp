#pragma once

#include <cmath>
#include <string>

#include "walkmax/normal.hpp"
#include "walkmax/rng.hpp"

namespace walkmax {

enum class LawKind {
    std_normal,
    symmetric_pareto,
    pareto_positive,
    std_lognormal,
    weibull_type,
    lognormal_type,
    centered_exponential,
};

struct Moments {
    double mean = 0.0;          // meaningful only when mean_defined
    double variance = 0.0;      // +infinity allowed
    bool mean_defined = true;
};

/// A step distribution: exact inverse-transform sampler, analytic survival
/// function, and moment data. Immutable value type.
class StepLaw {
public:
    static StepLaw std_normal();
    /// Two-sided power tail on |x| >= 1 (unit scale) with sign weights
    /// p_plus / 1-p_plus. With `standardized`, the variable is divided by
    /// sqrt(alpha/(alpha-2)) so that mean = 0 and variance = 1; this requires
    /// alpha > 2 and p_plus = 1/2.
    static StepLaw symmetric_pareto(double alpha, double p_plus = 0.5, bool standardized = false);
    static StepLaw pareto_positive(double alpha, double x_m);
    static StepLaw std_lognormal();
    /// Survival exp(-x^tau) on [0, inf), tau in (0,1).
    static StepLaw weibull_type(double tau);
    /// Survival exp(-lambda (log x)^gamma) on [1, inf), gamma > 1.
    static StepLaw lognormal_type(double gamma, double lambda);
    static StepLaw centered_exponential();

    LawKind kind() const noexcept { return kind_; }
    double alpha() const noexcept { return alpha_; }
    double p_plus() const noexcept { return p_plus_; }
    double x_m() const noexcept { return x_m_; }
    double tau() const noexcept { return tau_; }
    double tail_gamma() const noexcept { return gamma_; }
    double tail_lambda() const noexcept { return lambda_; }
    bool standardized() const noexcept { return standardized_; }

    /// P(X > x), exact.
    double survival(double x) const noexcept;

    /// P(|X| > x); equals survival(x) for the nonnegative-support variants.
    double two_sided(double x) const noexcept;

    /// Generalized inverse of the survival function: x with survival(x) = u.
    double quantile_from_uniform(double u) const noexcept;

    /// One exact draw: inverse transform of a (0,1) uniform.
    double sample(RandomState& rng) const noexcept { return quantile_from_uniform(rng.next_open01()); }

    Moments moments() const;

    bool has_power_tail() const noexcept {
        return kind_ == LawKind::symmetric_pareto || kind_ == LawKind::pareto_positive;
    }
    bool nonnegative_support() const noexcept {
        return kind_ == LawKind::pareto_positive || kind_ == LawKind::std_lognormal ||
               kind_ == LawKind::weibull_type || kind_ == LawKind::lognormal_type;
    }
    /// Subexponential-style variants accepted by the heavy-tail approximations.
    bool heavy_tailed() const noexcept {
        return kind_ != LawKind::std_normal && kind_ != LawKind::centered_exponential;
    }

    std::string label() const;

private:
    StepLaw() = default;

    LawKind kind_ = LawKind::std_normal;
    double alpha_ = 0.0;
    double p_plus_ = 0.5;
    double x_m_ = 1.0;
    double tau_ = 0.0;
    double gamma_ = 0.0;
    double lambda_ = 0.0;
    bool standardized_ = false;
    double inv_sd_ = 1.0;  // symmetric_pareto: multiply x by this to reach unit scale
};

inline double StepLaw::survival(double x) const noexcept {
    switch (kind_) {
        case LawKind::std_normal:
            return normal_survival(x);
        case LawKind::symmetric_pareto: {
            const double y = x * inv_sd_;
            if (y >= 1.0) return p_plus_ * std::pow(y, -alpha_);
            if (y >= -1.0) return p_plus_;
            return 1.0 - (1.0 - p_plus_) * std::pow(-y, -alpha_);
        }
        case LawKind::pareto_positive:
            return x >= x_m_ ? std::pow(x_m_ / x, alpha_) : 1.0;
        case LawKind::std_lognormal:
            return x > 0.0 ? normal_survival(std::log(x)) : 1.0;
        case LawKind::weibull_type:
            return x >= 0.0 ? std::exp(-std::pow(x, tau_)) : 1.0;
        case LawKind::lognormal_type:
            return x >= 1.0 ? std::exp(-lambda_ * std::pow(std::log(x), gamma_)) : 1.0;
        case LawKind::centered_exponential:
            return x >= -1.0 ? std::exp(-(x + 1.0)) : 1.0;
    }
    return 0.0;
}

inline double StepLaw::two_sided(double x) const noexcept {
    if (x < 0.0) return 1.0;
    switch (kind_) {
        case LawKind::std_normal:
            return 2.0 * normal_survival(x);
        case LawKind::symmetric_pareto: {
            const double y = x * inv_sd_;
            return y >= 1.0 ? std::pow(y, -alpha_) : 1.0;
        }
        case LawKind::centered_exponential: {
            // mass below -x exists only while x < 1
            const double upper = std::exp(-(x + 1.0));
            return x < 1.0 ? upper + 1.0 - std::exp(-(1.0 - x)) : upper;
        }
        default:
            return survival(x);
    }
}

inline double StepLaw::quantile_from_uniform(double u) const noexcept {
    switch (kind_) {
        case LawKind::std_normal:
            return -inverse_normal_cdf(u);
        case LawKind::symmetric_pareto:
            if (u < p_plus_) return std::pow(p_plus_ / u, 1.0 / alpha_) / inv_sd_;
            return -std::pow((1.0 - p_plus_) / (1.0 - u), 1.0 / alpha_) / inv_sd_;
        case LawKind::pareto_positive:
            return x_m_ * std::pow(u, -1.0 / alpha_);
        case LawKind::std_lognormal:
            return std::exp(-inverse_normal_cdf(u));
        case LawKind::weibull_type:
            return std::pow(-std::log(u), 1.0 / tau_);
        case LawKind::lognormal_type:
            return std::exp(std::pow(-std::log(u) / lambda_, 1.0 / gamma_));
        case LawKind::centered_exponential:
            return -std::log(u) - 1.0;
    }
    return 0.0;
}

}  // namespace walkmax
