#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ghn/registry.hpp"

namespace ghn {

struct SweepConfig {
    GridBounds bounds;
    std::vector<std::string> check_ids;  // empty = whole registry
    unsigned threads = 1;
    bool timing = false;
    std::uint64_t seed = 0;  // recorded for reproducibility; sweeps are exhaustive
};

struct SweepSummary {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skip = 0;
};

struct SweepResult {
    SweepConfig config;
    SweepSummary summary;
    std::vector<CheckReport> results;  // executed checks, sorted by (id, params, p)
};

/// Runs every selected check at every admissible (params, p). Results are
/// deterministic and identically ordered regardless of thread count.
SweepResult sweep(const SweepConfig& config);

/// Same but against a caller-supplied check list (tests use perturbed specs).
SweepResult sweep_checks(const SweepConfig& config, const std::vector<CheckSpec>& checks);

}  // namespace ghn
