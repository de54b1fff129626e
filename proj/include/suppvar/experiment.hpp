#pragma once

#include <cstdint>
#include <string>

#include "suppvar/io.hpp"

namespace suppvar {

struct ExperimentConfig {
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    std::size_t dim_max = 12;
    Json algebra;
    /// catalog | random-quotient | syzygy-of-random | tensor-closure
    std::string recipe = "random-quotient";
    std::uint32_t field_degree = 1;
    std::size_t threads = 0;  ///< 0 = hardware concurrency; never affects the report
};

ExperimentConfig config_from_json(const Json& j);
Json config_to_json(const ExperimentConfig& c);

struct ExperimentOutcome {
    Json report;
    std::size_t failures = 0;
    std::size_t errors = 0;
};
/// TPP check on every trial pair. Random recipes draw `trials` pairs with
/// per-trial seed = seed ^ trial; enumerative recipes use every ordered pair.
ExperimentOutcome run_experiment(const ExperimentConfig& c);

}  // namespace suppvar
