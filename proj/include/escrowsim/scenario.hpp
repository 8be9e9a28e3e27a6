#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>

#include "escrowsim/simulator.hpp"

namespace escrowsim {

struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flat key = value scenario format, full-line '#' comments, one key per line.
//
// Required keys: k1, k2, max_amount, max_duration, n_clients, horizon_days,
// seed. Optional, with defaults: warmup_days (max_duration),
// daily_interest_rate (0), client_interest_share (0), commission_rate (0),
// conversion_prob (0), rollover_prob (0), replications (1).
//
// Unknown and duplicate keys are rejected; every diagnostic names the
// offending key.
SimConfig parse_scenario(std::istream& in);
SimConfig load_scenario(const std::filesystem::path& path);

}  // namespace escrowsim
