#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "walkmax/ldtheory.hpp"
#include "walkmax/norming.hpp"
#include "walkmax/parallel.hpp"
#include "walkmax/step_law.hpp"

namespace walkmax::simulate {

/// Complete description of one ensemble experiment. `norming` carries the
/// centering/scale pair for the regime; see default_norming for the
/// standard choices (index p for the normal regime, n*p otherwise).
struct ExperimentPlan {
    StepLaw law = StepLaw::std_normal();
    std::uint64_t n = 1;       // walk length
    std::uint64_t p = 1;       // ensemble size
    std::uint32_t k = 1;       // top-k depth, k <= p
    std::uint64_t R = 1;       // replications
    std::uint64_t seed = 0;
    norming::NormingPair norming;
    std::uint64_t block_len = 0;  // r, used by block_maxima only
};

/// Standard norming pair for (law, regime, n, p): the normal-regime pair at
/// index p, the subexponential pair at index n*p, or the Frechet scale at
/// n*p with the alpha = 1 centering taken at n.
norming::NormingPair default_norming(const StepLaw& law, norming::Regime regime, std::uint64_t n,
                                     std::uint64_t p);

struct ReplicationSummary {
    std::vector<double> top;        // normalized, descending
    double min_value = 0.0;         // normalized ensemble minimum
    std::uint64_t argmax = 0;       // walk index attaining the maximum
    double walk_total = 0.0;        // block runs: raw sum of the whole walk
    bool empty = false;             // random-index runs: zero-walk replication
};

struct EnsembleSummary {
    std::vector<ReplicationSummary> reps;
    std::uint64_t empty_count = 0;
};

/// p independent walks of length n per replication, streamed; keeps the
/// top-k and the minimum under the regime normalization.
EnsembleSummary ensemble_topk(const ExperimentPlan& plan, const ParallelConfig& par = {});

/// Disjoint block sums of one walk of length floor(n/r)*r, treated as an
/// ensemble of size floor(n/r); block length r = plan.block_len.
EnsembleSummary block_maxima(const ExperimentPlan& plan, const ParallelConfig& par = {});

enum class IndexLaw { deterministic, poisson };

/// Ensemble with a random number of walks P (mean plan.p); the norming
/// constants stay those of the deterministic plan. P = 0 replications are
/// flagged empty and excluded from downstream samples.
EnsembleSummary random_index_maxima(const ExperimentPlan& plan, IndexLaw index_law,
                                    const ParallelConfig& par = {});

/// Monte Carlo tail of a Poisson random sum: P(S(t) - mean*lambda_t > x)
/// with S(t) a Poisson(lambda_t)-indexed sum of iid positive power-tail
/// steps with alpha > 1.
ldtheory::MCTailEstimate random_sum_tail(double lambda_t, const StepLaw& law, double x, std::uint64_t R,
                                         std::uint64_t seed, const ParallelConfig& par = {});

struct MvMaximaSummary {
    std::vector<std::vector<double>> rows;  // per replication: d normalized componentwise maxima
    std::vector<double> scales;             // per-component Frechet scale at n*p
    std::vector<double> centers;            // per-component centering at n
};

/// Componentwise maxima of p independent d-dimensional walks with
/// independent components; all component laws must share the tail index.
MvMaximaSummary mv_component_maxima(const std::vector<StepLaw>& laws, std::uint64_t n, std::uint64_t p,
                                    std::uint64_t R, std::uint64_t seed, const ParallelConfig& par = {});

}  // namespace walkmax::simulate
