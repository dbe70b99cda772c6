#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "walkmax/parallel.hpp"
#include "walkmax/stats.hpp"

namespace walkmax::scenarios {

/// Outcome of one named verification scenario. `artifact` holds the
/// deterministic numeric payload (csv); it is a pure function of
/// (scenario, seed) and never contains timings or worker counts, so byte
/// comparison across worker counts is meaningful.
struct ScenarioResult {
    std::string id;    // "A1" ... "A13"
    std::string name;  // e.g. "gumbel-normal-exact"
    std::vector<stats::GofReport> checks;
    bool pass = false;
    double seconds = 0.0;
    std::string artifact;
};

const std::vector<std::string>& ids();
std::string name_of(const std::string& id);

/// Runs one scenario by id ("A3") or name ("frechet-maxima").
ScenarioResult run(const std::string& id_or_name, std::uint64_t seed, const ParallelConfig& par = {});

/// Runs A1..A13 in order. The determinism scenario reuses the artifacts of
/// this pass for its matching worker count instead of recomputing them.
std::vector<ScenarioResult> run_all(std::uint64_t seed, const ParallelConfig& par = {});

}  // namespace walkmax::scenarios
