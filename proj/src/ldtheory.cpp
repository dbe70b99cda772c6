#include "walkmax/ldtheory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace walkmax::ldtheory {

namespace {

constexpr double kZ99 = 2.5758293035489004;  // 99.5% normal quantile

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

// Separating sequence psi_n for the law's tail class, when a row exists.
void attach_psi(TailApprox& out, const StepLaw& law, double n) {
    using norming::TailClass;
    try {
        TailClass cls = TailClass::light_tail();
        switch (law.kind()) {
            case LawKind::symmetric_pareto:
            case LawKind::pareto_positive:
                cls = TailClass::regularly_varying(law.alpha());
                break;
            case LawKind::weibull_type:
                cls = TailClass::weibull_type(law.tau());
                break;
            case LawKind::lognormal_type:
                cls = TailClass::lognormal_type(law.tail_gamma(), law.tail_lambda());
                break;
            case LawKind::std_lognormal:
                cls = TailClass::lognormal_type(2.0, 0.5, 0.0, -1.0, 1.0 / std::sqrt(2.0 * M_PI));
                break;
            default:
                return;
        }
        const auto pair = norming::separating_sequences(cls, n);
        out.has_psi = true;
        out.psi = pair.psi;
        out.above_psi = out.x > pair.psi;
    } catch (const std::invalid_argument&) {
        // class without a table row (e.g. alpha <= 2): leave has_psi = false
    }
}

}  // namespace

double limit_cdf_gumbel(double x) { return std::exp(-std::exp(-x)); }

double limit_cdf_frechet(double x, double alpha) {
    require(alpha > 0.0, "limit_cdf_frechet: alpha must be > 0");
    return x > 0.0 ? std::exp(-std::pow(x, -alpha)) : 0.0;
}

double limit_cdf_frechet_power(double x, double alpha, double p_plus) {
    require(alpha > 0.0, "limit_cdf_frechet_power: alpha must be > 0");
    require(p_plus >= 0.0 && p_plus <= 1.0, "limit_cdf_frechet_power: p_plus must lie in [0,1]");
    return x > 0.0 ? std::exp(-p_plus * std::pow(x, -alpha)) : 0.0;
}

TailApprox nagaev_approx(const StepLaw& law, double n, double x) {
    require(n >= 1.0, "nagaev_approx: n must be >= 1");
    require(law.kind() == LawKind::symmetric_pareto && law.standardized() && law.alpha() > 2.0,
            "nagaev_approx: law must be a standardized power-tail step with alpha > 2");
    require(x >= std::sqrt(n), "nagaev_approx: x must be >= sqrt(n)");
    TailApprox out;
    out.regime = ApproxRegime::nagaev_two_term;
    out.n = n;
    out.x = x;
    out.label = law.label();
    out.normal_term = normal_survival(x / std::sqrt(n));
    out.heavy_term = n * law.survival(x);
    out.value = clamp01(out.normal_term + out.heavy_term);
    attach_psi(out, law, n);
    return out;
}

TailApprox subexp_approx(const StepLaw& law, double n, double x) {
    require(n >= 1.0, "subexp_approx: n must be >= 1");
    require(law.heavy_tailed(), "subexp_approx: law must be a heavy-tailed variant");
    require(x > 0.0, "subexp_approx: x must be > 0");
    TailApprox out;
    out.regime = ApproxRegime::subexponential;
    out.n = n;
    out.x = x;
    out.label = law.label();
    out.heavy_term = n * law.survival(x);
    out.value = clamp01(out.heavy_term);
    attach_psi(out, law, n);
    return out;
}

TailApprox rozovskii_ln_approx(const RozovskiiParams& params, double n, double x) {
    require(params.gamma > 1.0 && params.gamma <= 2.0, "rozovskii_ln_approx: gamma must lie in (1,2]");
    require(params.lambda > 0.0 && params.c > 0.0, "rozovskii_ln_approx: lambda and c must be > 0");
    require(n >= 3.0, "rozovskii_ln_approx: n must be >= 3");
    require(x > std::exp(1.0), "rozovskii_ln_approx: x must exceed e");
    const double threshold = norming::rozovskii_threshold(params.gamma, params.lambda, n);
    TailApprox out;
    out.n = n;
    out.x = x;
    out.label = "lognormal-type";
    out.has_psi = true;
    out.psi = threshold;
    out.above_psi = x >= threshold;
    out.normal_term = normal_survival(x / std::sqrt(n));
    const double lx = std::log(x);
    const double tail = params.c * std::pow(x, params.beta) * std::pow(lx, params.xi) *
                        std::exp(-params.lambda * std::pow(lx, params.gamma));
    out.heavy_term = n * tail;
    if (x < threshold) {
        out.regime = ApproxRegime::rozovskii_below;
        out.value = clamp01(out.normal_term);
        return out;
    }
    out.regime = ApproxRegime::rozovskii_above;
    double v = out.heavy_term;
    if (params.gamma == 2.0) {
        // g(x) = lambda log^2 x - (beta+2) log x - xi log log x - log c
        const double gprime = (2.0 * params.lambda * lx - (params.beta + 2.0) - params.xi / lx) / x;
        v *= std::exp(0.5 * n * gprime * gprime);
    }
    out.value = clamp01(v);
    return out;
}

WilsonInterval wilson99(std::uint64_t hits, std::uint64_t total) {
    require(total > 0, "wilson99: total must be > 0");
    const double nn = static_cast<double>(total);
    const double p = static_cast<double>(hits) / nn;
    const double z2 = kZ99 * kZ99;
    const double denom = 1.0 + z2 / nn;
    const double center = (p + z2 / (2.0 * nn)) / denom;
    const double half = kZ99 * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

MCTailEstimate mc_tail(const StepLaw& law, std::uint64_t n, double x, std::uint64_t R, std::uint64_t seed,
                       bool centered, const ParallelConfig& par) {
    require(n >= 1, "mc_tail: n must be >= 1");
    require(R >= 1000, "mc_tail: R must be >= 1000");
    double shift = 0.0;
    if (centered) {
        const Moments m = law.moments();
        require(m.mean_defined, "mc_tail: centered run needs a defined mean");
        shift = static_cast<double>(n) * m.mean;
    }
    // Power tails with alpha <= 1 produce astronomically large summands;
    // accumulate those in extended precision.
    const bool extended = law.has_power_tail() && law.alpha() <= 1.0;
    const double threshold = x + shift;

    constexpr std::uint64_t kChunk = 1 << 16;
    const std::uint64_t n_chunks = (R + kChunk - 1) / kChunk;
    std::vector<std::uint64_t> hits(n_chunks, 0);

    parallel_chunks(R, kChunk, resolve_workers(par),
                    [&](std::uint64_t chunk, std::uint64_t begin, std::uint64_t end) {
                        RandomState rng = RandomState::substream(seed, chunk);
                        std::uint64_t h = 0;
                        if (extended) {
                            for (std::uint64_t r = begin; r < end; ++r) {
                                long double sum = 0.0L;
                                for (std::uint64_t i = 0; i < n; ++i) sum += law.sample(rng);
                                if (static_cast<double>(sum) > threshold) ++h;
                            }
                        } else {
                            for (std::uint64_t r = begin; r < end; ++r) {
                                double sum = 0.0;
                                for (std::uint64_t i = 0; i < n; ++i) sum += law.sample(rng);
                                if (sum > threshold) ++h;
                            }
                        }
                        hits[chunk] = h;
                    });

    std::uint64_t total_hits = 0;
    for (const auto h : hits) total_hits += h;

    MCTailEstimate out;
    out.replications = R;
    out.hits = total_hits;
    out.p_hat = static_cast<double>(total_hits) / static_cast<double>(R);
    const WilsonInterval ci = wilson99(total_hits, R);
    out.ci_low = ci.low;
    out.ci_high = ci.high;
    return out;
}

}  // namespace walkmax::ldtheory
