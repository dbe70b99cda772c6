#include "walkmax/step_law.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace walkmax {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double simpson(const double a, const double b, const double fa, const double fm, const double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
double adaptive_simpson(const F& f, double a, double b, double fa, double fm, double fb, double whole,
                        double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename F>
double integrate(const F& f, double a, double b, double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    return adaptive_simpson(f, a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), tol, 48);
}

// E[X^k] for the lognormal-type law: X = exp((W/lambda)^(1/gamma)), W ~ Exp(1).
double lognormal_type_moment(int k, double gamma, double lambda) {
    const auto integrand = [=](double w) {
        return std::exp(static_cast<double>(k) * std::pow(w / lambda, 1.0 / gamma) - w);
    };
    // Past w*, the exponent is dominated by -w/2; pick a cutoff with e^{-w/2} ~ 1e-130.
    double cutoff = 64.0;
    while (static_cast<double>(k) * std::pow(cutoff / lambda, 1.0 / gamma) > 0.5 * cutoff || cutoff < 600.0)
        cutoff *= 2.0;
    double total = 0.0;
    double lo = 0.0;
    for (double hi = 1.0; lo < cutoff; hi = std::min(hi * 4.0, cutoff)) {
        total += integrate(integrand, lo, hi, 1e-13 * (1.0 + total));
        lo = hi;
        if (hi >= cutoff) break;
    }
    return total;
}

}  // namespace

StepLaw StepLaw::std_normal() {
    StepLaw law;
    law.kind_ = LawKind::std_normal;
    return law;
}

StepLaw StepLaw::symmetric_pareto(double alpha, double p_plus, bool standardized) {
    if (!(alpha > 0.0)) throw std::invalid_argument("symmetric_pareto: alpha must be > 0");
    if (!(p_plus >= 0.0 && p_plus <= 1.0)) throw std::invalid_argument("symmetric_pareto: p_plus must lie in [0,1]");
    if (standardized && !(alpha > 2.0))
        throw std::invalid_argument("symmetric_pareto: standardized form needs alpha > 2 (finite variance)");
    if (standardized && p_plus != 0.5)
        throw std::invalid_argument("symmetric_pareto: standardized form needs p_plus = 1/2 (zero mean)");
    StepLaw law;
    law.kind_ = LawKind::symmetric_pareto;
    law.alpha_ = alpha;
    law.p_plus_ = p_plus;
    law.standardized_ = standardized;
    law.inv_sd_ = standardized ? std::sqrt(alpha / (alpha - 2.0)) : 1.0;
    return law;
}

StepLaw StepLaw::pareto_positive(double alpha, double x_m) {
    if (!(alpha > 0.0)) throw std::invalid_argument("pareto_positive: alpha must be > 0");
    if (!(x_m > 0.0)) throw std::invalid_argument("pareto_positive: x_m must be > 0");
    StepLaw law;
    law.kind_ = LawKind::pareto_positive;
    law.alpha_ = alpha;
    law.x_m_ = x_m;
    return law;
}

StepLaw StepLaw::std_lognormal() {
    StepLaw law;
    law.kind_ = LawKind::std_lognormal;
    return law;
}

StepLaw StepLaw::weibull_type(double tau) {
    if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("weibull_type: tau must lie in (0,1)");
    StepLaw law;
    law.kind_ = LawKind::weibull_type;
    law.tau_ = tau;
    return law;
}

StepLaw StepLaw::lognormal_type(double gamma, double lambda) {
    if (!(gamma > 1.0)) throw std::invalid_argument("lognormal_type: gamma must be > 1");
    if (!(lambda > 0.0)) throw std::invalid_argument("lognormal_type: lambda must be > 0");
    StepLaw law;
    law.kind_ = LawKind::lognormal_type;
    law.gamma_ = gamma;
    law.lambda_ = lambda;
    return law;
}

StepLaw StepLaw::centered_exponential() {
    StepLaw law;
    law.kind_ = LawKind::centered_exponential;
    return law;
}

Moments StepLaw::moments() const {
    switch (kind_) {
        case LawKind::std_normal:
            return {0.0, 1.0, true};
        case LawKind::symmetric_pareto: {
            if (alpha_ <= 1.0) return {kNaN, kInf, false};
            const double abs_mean = alpha_ / (alpha_ - 1.0);  // E|X| at unit scale
            const double mean = (2.0 * p_plus_ - 1.0) * abs_mean / inv_sd_;
            if (alpha_ <= 2.0) return {mean, kInf, true};
            const double second = alpha_ / (alpha_ - 2.0) / (inv_sd_ * inv_sd_);
            return {mean, second - mean * mean, true};
        }
        case LawKind::pareto_positive: {
            if (alpha_ <= 1.0) return {kNaN, kInf, false};
            const double mean = alpha_ * x_m_ / (alpha_ - 1.0);
            if (alpha_ <= 2.0) return {mean, kInf, true};
            const double var = x_m_ * x_m_ * alpha_ / ((alpha_ - 1.0) * (alpha_ - 1.0) * (alpha_ - 2.0));
            return {mean, var, true};
        }
        case LawKind::std_lognormal: {
            const double mean = std::exp(0.5);
            return {mean, std::exp(2.0) - std::exp(1.0), true};
        }
        case LawKind::weibull_type: {
            const double m1 = std::tgamma(1.0 + 1.0 / tau_);
            const double m2 = std::tgamma(1.0 + 2.0 / tau_);
            return {m1, m2 - m1 * m1, true};
        }
        case LawKind::lognormal_type: {
            const double m1 = lognormal_type_moment(1, gamma_, lambda_);
            const double m2 = lognormal_type_moment(2, gamma_, lambda_);
            return {m1, m2 - m1 * m1, true};
        }
        case LawKind::centered_exponential:
            return {0.0, 1.0, true};
    }
    return {kNaN, kNaN, false};
}

std::string StepLaw::label() const {
    char buf[96];
    switch (kind_) {
        case LawKind::std_normal:
            return "normal";
        case LawKind::symmetric_pareto:
            std::snprintf(buf, sizeof buf, "pareto-sym(alpha=%g,p=%g%s)", alpha_, p_plus_,
                          standardized_ ? ",std" : "");
            return buf;
        case LawKind::pareto_positive:
            std::snprintf(buf, sizeof buf, "pareto(alpha=%g,xm=%g)", alpha_, x_m_);
            return buf;
        case LawKind::std_lognormal:
            return "lognormal";
        case LawKind::weibull_type:
            std::snprintf(buf, sizeof buf, "weibull(tau=%g)", tau_);
            return buf;
        case LawKind::lognormal_type:
            std::snprintf(buf, sizeof buf, "lognormal-type(gamma=%g,lambda=%g)", gamma_, lambda_);
            return buf;
        case LawKind::centered_exponential:
            return "exp-centered";
    }
    return "?";
}

}  // namespace walkmax
