#include "walkmax/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace walkmax::simulate {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

bool is_unit_law(const StepLaw& law) {
    const Moments m = law.moments();
    return m.mean_defined && std::fabs(m.mean) < 1e-12 && std::isfinite(m.variance) &&
           std::fabs(m.variance - 1.0) < 1e-12;
}

void check_regime(const ExperimentPlan& plan) {
    switch (plan.norming.regime) {
        case norming::Regime::gumbel_normal:
            require(is_unit_law(plan.law), "ensemble: the normal regime needs a standardized finite-variance law");
            break;
        case norming::Regime::gumbel_subexp:
            require(plan.law.kind() == LawKind::std_lognormal || plan.law.kind() == LawKind::weibull_type ||
                        plan.law.kind() == LawKind::lognormal_type,
                    "ensemble: the subexponential Gumbel regime needs a lognormal or Weibull-type law");
            break;
        case norming::Regime::frechet:
            require(plan.law.has_power_tail(), "ensemble: the Frechet regime needs a power-tail law");
            require(plan.law.alpha() != 2.0, "ensemble: alpha = 2 is excluded from the Frechet regime");
            break;
    }
}

// Streamed descending top-k with first-come order on ties.
class TopK {
public:
    explicit TopK(std::uint32_t k) : vals_(k, -std::numeric_limits<double>::infinity()) {}

    void offer(double v, std::uint64_t index) {
        if (index == 0 || v > max_) {
            max_ = v;
            argmax_ = index;
        }
        if (!(v > vals_.back())) return;
        std::size_t pos = vals_.size() - 1;
        while (pos > 0 && v > vals_[pos - 1]) {
            vals_[pos] = vals_[pos - 1];
            --pos;
        }
        vals_[pos] = v;
    }

    const std::vector<double>& values() const { return vals_; }
    std::uint64_t argmax() const { return argmax_; }

private:
    std::vector<double> vals_;
    double max_ = -std::numeric_limits<double>::infinity();
    std::uint64_t argmax_ = 0;
};

struct Normalizer {
    norming::Regime regime;
    double center;
    double scale;
    double sqrt_n;
    double n_mean;  // n * E[X] for the subexponential regime

    double max_value(double s) const {
        switch (regime) {
            case norming::Regime::gumbel_normal:
                return (s / sqrt_n - center) / scale;
            case norming::Regime::gumbel_subexp:
                return (s - n_mean - center) / scale;
            case norming::Regime::frechet:
                return (s - center) / scale;
        }
        return s;
    }
    double min_value(double s) const {
        switch (regime) {
            case norming::Regime::gumbel_normal:
                return (s / sqrt_n + center) / scale;
            case norming::Regime::gumbel_subexp:
                return (s - n_mean + center) / scale;
            case norming::Regime::frechet:
                return (s - center) / scale;
        }
        return s;
    }
};

Normalizer make_normalizer(const ExperimentPlan& plan, std::uint64_t walk_len) {
    Normalizer nz{plan.norming.regime, plan.norming.center, plan.norming.scale,
                  std::sqrt(static_cast<double>(walk_len)), 0.0};
    require(plan.norming.scale > 0.0, "ensemble: norming scale must be > 0");
    if (nz.regime == norming::Regime::gumbel_subexp)
        nz.n_mean = static_cast<double>(walk_len) * plan.law.moments().mean;
    return nz;
}

void run_replications(const ExperimentPlan& plan, const ParallelConfig& par,
                      const std::function<void(std::uint64_t, RandomState&, ReplicationSummary&)>& one_rep,
                      EnsembleSummary& out) {
    out.reps.assign(plan.R, {});
    parallel_chunks(plan.R, 1, resolve_workers(par),
                    [&](std::uint64_t chunk, std::uint64_t begin, std::uint64_t) {
                        (void)chunk;
                        RandomState rng = RandomState::substream(plan.seed, begin);
                        one_rep(begin, rng, out.reps[begin]);
                    });
    for (const auto& r : out.reps)
        if (r.empty) ++out.empty_count;
}

void summarize_ensemble(const ExperimentPlan& plan, const Normalizer& nz, std::uint64_t walks,
                        RandomState& rng, ReplicationSummary& rep) {
    if (walks == 0) {
        rep.empty = true;
        rep.min_value = std::numeric_limits<double>::quiet_NaN();
        return;
    }
    TopK top(plan.k);
    double raw_min = std::numeric_limits<double>::infinity();
    for (std::uint64_t i = 0; i < walks; ++i) {
        double s = 0.0;
        for (std::uint64_t t = 0; t < plan.n; ++t) s += plan.law.sample(rng);
        top.offer(s, i);
        raw_min = std::min(raw_min, s);
    }
    rep.top.reserve(plan.k);
    const std::uint32_t kept = static_cast<std::uint32_t>(std::min<std::uint64_t>(plan.k, walks));
    for (std::uint32_t j = 0; j < kept; ++j) rep.top.push_back(nz.max_value(top.values()[j]));
    rep.min_value = nz.min_value(raw_min);
    rep.argmax = top.argmax();
}

}  // namespace

norming::NormingPair default_norming(const StepLaw& law, norming::Regime regime, std::uint64_t n,
                                     std::uint64_t p) {
    const double np = static_cast<double>(n) * static_cast<double>(p);
    switch (regime) {
        case norming::Regime::gumbel_normal:
            return norming::gumbel_constants_normal(static_cast<double>(p));
        case norming::Regime::gumbel_subexp:
            switch (law.kind()) {
                case LawKind::std_lognormal:
                    return norming::gumbel_constants_lognormal(np);
                case LawKind::weibull_type:
                    return norming::gumbel_constants_weibull_type(np, {1.0, 0.0, 1.0, law.tau()});
                default:
                    throw std::invalid_argument(
                        "default_norming: closed-form subexponential Gumbel constants exist for the "
                        "lognormal and Weibull-type laws only");
            }
        case norming::Regime::frechet: {
            norming::NormingPair pair = norming::frechet_scale(law, np);
            pair.center = law.alpha() == 1.0 ? norming::alpha_one_centering(law, static_cast<double>(n)) : 0.0;
            return pair;
        }
    }
    throw std::invalid_argument("default_norming: unknown regime");
}

EnsembleSummary ensemble_topk(const ExperimentPlan& plan, const ParallelConfig& par) {
    require(plan.R >= 1, "ensemble_topk: R must be >= 1");
    require(plan.k >= 1 && plan.k <= plan.p, "ensemble_topk: need 1 <= k <= p");
    require(plan.n >= 1 && plan.p >= 1, "ensemble_topk: n and p must be >= 1");
    check_regime(plan);
    const Normalizer nz = make_normalizer(plan, plan.n);
    EnsembleSummary out;
    run_replications(plan, par,
                     [&](std::uint64_t, RandomState& rng, ReplicationSummary& rep) {
                         summarize_ensemble(plan, nz, plan.p, rng, rep);
                     },
                     out);
    return out;
}

EnsembleSummary block_maxima(const ExperimentPlan& plan, const ParallelConfig& par) {
    const std::uint64_t r = plan.block_len;
    require(r >= 2, "block_maxima: block length must be >= 2");
    require(r <= plan.n, "block_maxima: block length must not exceed n");
    const std::uint64_t blocks = plan.n / r;
    require(blocks >= 2, "block_maxima: need at least 2 blocks");
    require(plan.k >= 1 && plan.k <= blocks, "block_maxima: need 1 <= k <= floor(n/r)");
    check_regime(plan);
    const Normalizer nz = make_normalizer(plan, r);
    EnsembleSummary out;
    run_replications(plan, par,
                     [&](std::uint64_t, RandomState& rng, ReplicationSummary& rep) {
                         TopK top(plan.k);
                         double raw_min = std::numeric_limits<double>::infinity();
                         double total = 0.0;
                         for (std::uint64_t b = 0; b < blocks; ++b) {
                             double s = 0.0;
                             for (std::uint64_t t = 0; t < r; ++t) s += plan.law.sample(rng);
                             top.offer(s, b);
                             raw_min = std::min(raw_min, s);
                             total += s;
                         }
                         rep.top.reserve(plan.k);
                         for (std::uint32_t j = 0; j < plan.k; ++j)
                             rep.top.push_back(nz.max_value(top.values()[j]));
                         rep.min_value = nz.min_value(raw_min);
                         rep.argmax = top.argmax();
                         rep.walk_total = total;
                     },
                     out);
    return out;
}

EnsembleSummary random_index_maxima(const ExperimentPlan& plan, IndexLaw index_law,
                                    const ParallelConfig& par) {
    require(plan.R >= 1, "random_index_maxima: R must be >= 1");
    require(plan.k >= 1 && plan.k <= plan.p, "random_index_maxima: need 1 <= k <= p");
    check_regime(plan);
    const Normalizer nz = make_normalizer(plan, plan.n);
    EnsembleSummary out;
    run_replications(plan, par,
                     [&](std::uint64_t, RandomState& rng, ReplicationSummary& rep) {
                         std::uint64_t walks = plan.p;
                         if (index_law == IndexLaw::poisson)
                             walks = sample_poisson(rng, static_cast<double>(plan.p));
                         summarize_ensemble(plan, nz, walks, rng, rep);
                     },
                     out);
    return out;
}

ldtheory::MCTailEstimate random_sum_tail(double lambda_t, const StepLaw& law, double x, std::uint64_t R,
                                         std::uint64_t seed, const ParallelConfig& par) {
    require(lambda_t > 0.0, "random_sum_tail: lambda_t must be > 0");
    require(law.kind() == LawKind::pareto_positive, "random_sum_tail: law must be a positive power tail");
    require(law.alpha() > 1.0, "random_sum_tail: need alpha > 1 (finite mean)");
    require(R >= 1000, "random_sum_tail: R must be >= 1000");
    const double threshold = x + law.moments().mean * lambda_t;

    constexpr std::uint64_t kChunk = 1 << 14;
    const std::uint64_t n_chunks = (R + kChunk - 1) / kChunk;
    std::vector<std::uint64_t> hits(n_chunks, 0);
    parallel_chunks(R, kChunk, resolve_workers(par),
                    [&](std::uint64_t chunk, std::uint64_t begin, std::uint64_t end) {
                        RandomState rng = RandomState::substream(seed, chunk);
                        std::uint64_t h = 0;
                        for (std::uint64_t rrep = begin; rrep < end; ++rrep) {
                            const std::uint64_t count = sample_poisson(rng, lambda_t);
                            double s = 0.0;
                            for (std::uint64_t i = 0; i < count; ++i) s += law.sample(rng);
                            if (s > threshold) ++h;
                        }
                        hits[chunk] = h;
                    });
    std::uint64_t total = 0;
    for (const auto h : hits) total += h;
    ldtheory::MCTailEstimate out;
    out.replications = R;
    out.hits = total;
    out.p_hat = static_cast<double>(total) / static_cast<double>(R);
    const auto ci = ldtheory::wilson99(total, R);
    out.ci_low = ci.low;
    out.ci_high = ci.high;
    return out;
}

MvMaximaSummary mv_component_maxima(const std::vector<StepLaw>& laws, std::uint64_t n, std::uint64_t p,
                                    std::uint64_t R, std::uint64_t seed, const ParallelConfig& par) {
    require(!laws.empty(), "mv_component_maxima: need at least one component");
    require(n >= 1 && p >= 1 && R >= 1, "mv_component_maxima: n, p, R must be >= 1");
    const double alpha = laws.front().alpha();
    for (const auto& law : laws) {
        require(law.has_power_tail(), "mv_component_maxima: every component needs a power tail");
        require(std::fabs(law.alpha() - alpha) < 1e-12, "mv_component_maxima: components must share alpha");
        require(law.alpha() != 2.0, "mv_component_maxima: alpha = 2 is excluded from the Frechet regime");
    }
    const std::size_t d = laws.size();
    MvMaximaSummary out;
    out.scales.reserve(d);
    out.centers.reserve(d);
    for (const auto& law : laws) {
        const auto pair = default_norming(law, norming::Regime::frechet, n, p);
        out.scales.push_back(pair.scale);
        out.centers.push_back(pair.center);
    }
    out.rows.assign(R, {});
    parallel_chunks(R, 1, resolve_workers(par),
                    [&](std::uint64_t, std::uint64_t begin, std::uint64_t) {
                        RandomState rng = RandomState::substream(seed, begin);
                        std::vector<double> maxima(d, -std::numeric_limits<double>::infinity());
                        for (std::uint64_t i = 0; i < p; ++i) {
                            for (std::size_t j = 0; j < d; ++j) {
                                double s = 0.0;
                                for (std::uint64_t t = 0; t < n; ++t) s += laws[j].sample(rng);
                                maxima[j] = std::max(maxima[j], s);
                            }
                        }
                        auto& row = out.rows[begin];
                        row.resize(d);
                        for (std::size_t j = 0; j < d; ++j)
                            row[j] = (maxima[j] - out.centers[j]) / out.scales[j];
                    });
    return out;
}

}  // namespace walkmax::simulate
