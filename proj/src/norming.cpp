#include "walkmax/norming.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "walkmax/normal.hpp"

namespace walkmax::norming {

namespace {

constexpr double kLog4Pi = 2.5310242469692907930;  // log(4*pi)

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

double d_normal(double p) {
    const double s = std::sqrt(2.0 * std::log(p));
    return s - (std::log(std::log(p)) + kLog4Pi) / (2.0 * s);
}

}  // namespace

double slack_loglog(double n) { return std::log(std::log(n)); }
double slack_log(double n) { return std::log(n); }
double slack_sqrt_log(double n) { return std::sqrt(std::log(n)); }

SlackFn slack_by_name(const std::string& name) {
    if (name == "loglog") return slack_loglog;
    if (name == "log") return slack_log;
    if (name == "sqrtlog") return slack_sqrt_log;
    throw std::invalid_argument("unknown slack '" + name + "' (expected loglog, log or sqrtlog)");
}

NormingPair gumbel_constants_normal(double p) {
    require(p >= 3.0, "gumbel_constants_normal: p must be >= 3");
    const double d = d_normal(p);
    return {d, 1.0 / d, Regime::gumbel_normal, p};
}

NormingPair gumbel_constants_lognormal(double n) {
    require(n >= 3.0, "gumbel_constants_lognormal: n must be >= 3");
    const double d = std::exp(d_normal(n));
    return {d, d / std::sqrt(2.0 * std::log(n)), Regime::gumbel_subexp, n};
}

NormingPair gumbel_constants_weibull_type(double n, const WeibullTailParams& tp) {
    require(n >= 2.0, "gumbel_constants_weibull_type: n must be >= 2");
    require(tp.lambda > 0.0 && tp.tau > 0.0 && tp.c > 0.0,
            "gumbel_constants_weibull_type: c, lambda, tau must be > 0");
    const double s = std::log(n) / tp.lambda;
    const double scale = std::pow(s, 1.0 / tp.tau - 1.0) / (tp.lambda * tp.tau);
    const double center = std::pow(s, 1.0 / tp.tau) +
                          std::pow(s, 1.0 / tp.tau - 1.0) / tp.tau *
                              (tp.beta / (tp.lambda * tp.tau) * std::log(s) + std::log(tp.c) / tp.lambda);
    return {center, scale, Regime::gumbel_subexp, n};
}

NormingPair frechet_scale(const StepLaw& law, double m) {
    require(m >= 1.0, "frechet_scale: m must be >= 1");
    const double target = 1.0 / m;
    double a = 0.0;
    switch (law.kind()) {
        case LawKind::symmetric_pareto: {
            const double unit = std::pow(m, 1.0 / law.alpha());
            a = law.standardized() ? unit / std::sqrt(law.alpha() / (law.alpha() - 2.0)) : unit;
            break;
        }
        case LawKind::pareto_positive:
            a = law.x_m() * std::pow(m, 1.0 / law.alpha());
            break;
        case LawKind::std_lognormal:
        case LawKind::weibull_type:
        case LawKind::lognormal_type:
            a = law.quantile_from_uniform(target);
            break;
        case LawKind::std_normal:
            a = -inverse_normal_cdf(0.5 * target);
            break;
        case LawKind::centered_exponential: {
            if (target <= std::exp(-2.0)) {
                a = -std::log(target) - 1.0;  // only the upper branch carries mass past x = 1
                break;
            }
            // two_sided is continuous and strictly decreasing on [0,1]; bisect.
            double lo = 0.0, hi = 1.0;
            while (law.two_sided(hi) > target) {
                lo = hi;
                hi *= 2.0;  // geometric expansion of the bracket
            }
            for (int i = 0; i < 200; ++i) {
                const double mid = 0.5 * (lo + hi);
                (law.two_sided(mid) > target ? lo : hi) = mid;
                if (hi - lo <= 1e-10 * std::max(1.0, std::fabs(mid))) break;
            }
            a = 0.5 * (lo + hi);
            break;
        }
    }
    if (!(law.two_sided(a) > 0.0) || !std::isfinite(a))
        throw std::invalid_argument("frechet_scale: survival not bracketable at 1/m");
    double center = 0.0;
    if (law.has_power_tail() && law.alpha() == 1.0) center = alpha_one_centering(law, m);
    return {center, a, Regime::frechet, m};
}

double alpha_one_centering(const StepLaw& law, double n) {
    require(law.has_power_tail() && law.alpha() == 1.0, "alpha_one_centering: law must have a power tail with alpha = 1");
    require(n >= 1.0, "alpha_one_centering: n must be >= 1");
    // E[X 1(|X| <= a_n)] has closed form: the truncated first moment of a
    // unit power tail is log(a_n / support_edge).
    if (law.kind() == LawKind::pareto_positive) {
        const double a_n = law.x_m() * n;
        return n * law.x_m() * std::log(a_n / law.x_m());
    }
    const double a_n = n;  // unit-scale two-sided tail: P(|X| > x) = 1/x
    return n * (2.0 * law.p_plus() - 1.0) * std::log(a_n);
}

TailClass TailClass::regularly_varying(double alpha) {
    require(alpha > 0.0, "TailClass: alpha must be > 0");
    TailClass c;
    c.kind_ = TailClassKind::regularly_varying;
    c.alpha_ = alpha;
    c.epsilon_ = alpha > 2.0 ? std::min(1.0, (alpha - 2.0) / 2.0) : 0.0;
    return c;
}

TailClass TailClass::regularly_varying(double alpha, double epsilon) {
    TailClass c = regularly_varying(alpha);
    require(alpha > 2.0 && epsilon > 0.0 && epsilon < alpha - 2.0,
            "TailClass: epsilon must lie in (0, alpha-2)");
    c.epsilon_ = epsilon;
    return c;
}

TailClass TailClass::lognormal_type(double gamma, double lambda, double beta, double xi, double cc) {
    require(gamma > 1.0, "TailClass: gamma must be > 1");
    require(lambda > 0.0 && cc > 0.0, "TailClass: lambda and c must be > 0");
    TailClass c;
    c.kind_ = TailClassKind::lognormal_type;
    c.gamma_ = gamma;
    c.lambda_ = lambda;
    c.beta_ = beta;
    c.xi_ = xi;
    c.c_ = cc;
    return c;
}

TailClass TailClass::weibull_type(double tau, double lambda, double beta, double cc) {
    require(tau > 0.0 && tau < 1.0, "TailClass: tau must lie in (0,1)");
    require(lambda > 0.0 && cc > 0.0, "TailClass: lambda and c must be > 0");
    TailClass c;
    c.kind_ = TailClassKind::weibull_type;
    c.tau_ = tau;
    c.lambda_ = lambda;
    c.beta_ = beta;
    c.c_ = cc;
    return c;
}

TailClass TailClass::light_tail() {
    TailClass c;
    c.kind_ = TailClassKind::light_tail;
    return c;
}

TailClass TailClass::moment(double s) {
    require(s > 2.0, "TailClass: moment order s must be > 2");
    TailClass c;
    c.kind_ = TailClassKind::moment;
    c.s_ = s;
    return c;
}

SeparatingPair separating_sequences(const TailClass& cls, double n, SlackFn h) {
    require(n >= 3.0, "separating_sequences: n must be >= 3");
    const double L = std::log(n);
    const double slack = h(n);
    switch (cls.kind()) {
        case TailClassKind::regularly_varying: {
            require(cls.alpha() > 2.0, "separating_sequences: regularly varying class needs alpha > 2");
            const double v = std::sqrt((cls.alpha() - 2.0) * n * L);
            return {v, v};
        }
        case TailClassKind::lognormal_type: {
            const double gamma = cls.gamma();
            if (gamma < 2.0) {
                const double v = std::sqrt(n * std::pow(L, gamma));
                return {v, v};
            }
            return {std::sqrt(n * std::pow(L, gamma)) / slack, std::sqrt(n) * std::pow(L, gamma - 1.0) * slack};
        }
        case TailClassKind::weibull_type: {
            const double tau = cls.tau();
            const double psi = std::pow(n, 1.0 / (2.0 - 2.0 * tau)) * slack;
            const double xi = tau <= 0.5 ? std::pow(n, 1.0 / (2.0 - tau)) / slack : std::pow(n, 2.0 / 3.0) / slack;
            return {xi, psi};
        }
        default:
            throw std::invalid_argument("separating_sequences: class has no separating-sequence row");
    }
}

double max_p_bound(const TailClass& cls, double n, SlackFn h) {
    require(n >= 3.0, "max_p_bound: n must be >= 3");
    const double L = std::log(n);
    const double slack = h(n);
    switch (cls.kind()) {
        case TailClassKind::light_tail:
            return std::exp(std::cbrt(n) / slack);
        case TailClassKind::moment:
            return std::pow(n, (cls.s() - 2.0) / 2.0);
        case TailClassKind::regularly_varying: {
            require(cls.alpha() > 2.0, "max_p_bound: regularly varying class needs alpha > 2");
            return std::pow(n, (cls.alpha() - 2.0 - cls.epsilon()) / 2.0);
        }
        case TailClassKind::lognormal_type:
            return std::exp(std::pow(L, cls.gamma()) / slack);
        case TailClassKind::weibull_type: {
            const double tau = cls.tau();
            if (tau <= 0.5) return std::exp(std::pow(n, tau / (2.0 - tau)) / slack);
            return std::exp(std::cbrt(n) / slack);
        }
    }
    return 0.0;
}

BlockBound min_block_bound(const TailClass& cls, double n) {
    require(n >= 3.0, "min_block_bound: n must be >= 3");
    const double L = std::log(n);
    switch (cls.kind()) {
        case TailClassKind::light_tail:
            return {L * L * L, true};
        case TailClassKind::moment:
            return {std::pow(n, 2.0 / cls.s()), false};
        case TailClassKind::regularly_varying: {
            require(cls.alpha() > 2.0, "min_block_bound: regularly varying class needs alpha > 2");
            return {std::pow(n, 2.0 / (cls.alpha() - cls.epsilon())), false};
        }
        case TailClassKind::lognormal_type:
            return {std::exp(std::pow(2.0 * L, 1.0 / cls.gamma())), true};
        case TailClassKind::weibull_type: {
            const double tau = cls.tau();
            if (tau <= 0.5) return {std::pow(L, (2.0 - tau) / tau), true};
            return {L * L * L, true};
        }
    }
    return {};
}

double rozovskii_threshold(double gamma, double lambda, double n) {
    require(gamma > 1.0 && gamma <= 2.0, "rozovskii_threshold: gamma must lie in (1,2]");
    require(lambda > 0.0, "rozovskii_threshold: lambda must be > 0");
    require(n >= 3.0, "rozovskii_threshold: n must be >= 3");
    return std::sqrt(lambda * std::pow(2.0, 1.0 - gamma)) * std::sqrt(n) * std::pow(std::log(n), gamma / 2.0);
}

}  // namespace walkmax::norming
