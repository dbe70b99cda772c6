#pragma once

#include <string>
#include <vector>

#include "walkmax/simulate.hpp"
#include "walkmax/stats.hpp"

namespace walkmax::io {

/// Locale-independent "%.{sig}g" rendering; csv uses 12 significant digits,
/// json 17 (round-trippable).
std::string format_double(double v, int significant = 12);

/// Per-replication csv for an ensemble run: fixed header
/// rep,top_1,...,top_k,min,argmax,empty[,walk_total].
std::string ensemble_csv(const simulate::EnsembleSummary& summary, std::uint32_t k, bool with_walk_total);

/// Per-replication csv for componentwise maxima: rep,comp_1,...,comp_d.
std::string mv_csv(const simulate::MvMaximaSummary& summary);

/// One gof report per line: statistic,observed,threshold,sample_size,target,pass.
std::string gof_csv(const std::vector<stats::GofReport>& reports);

}  // namespace walkmax::io
