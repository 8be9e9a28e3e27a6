#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "escrowsim/distribution.hpp"
#include "escrowsim/ledger.hpp"

namespace escrowsim {

struct SimConfig {
    DistributionParams dist_params;
    std::int64_t n_clients = 0;
    std::int64_t horizon_days = 0;
    // Days excluded from steady-state statistics; defaults to max_duration,
    // the history depth the standing balance accumulates over.
    std::optional<std::int64_t> warmup_days;
    std::uint64_t seed = 0;
    double daily_interest_rate = 0.0;
    double client_interest_share = 0.0;
    double commission_rate = 0.0;
    double conversion_prob = 0.0;  // maturing deposit becomes a buy-sell
    double rollover_prob = 0.0;    // maturing deposit re-opens, subscription style
    std::int64_t replications = 1;

    std::int64_t resolved_warmup() const {
        return warmup_days ? *warmup_days : dist_params.max_duration;
    }
    // Throws std::invalid_argument naming the offending field.
    void validate() const;
};

struct DayRow {
    Day day = 0;
    Coins float_balance = 0;
    Coins total_deposited = 0;
    Coins total_refunded = 0;
    Coins total_converted_revenue = 0;
    double interest_earned = 0.0;
};

struct SimReport {
    // Day-by-day trajectory of replication 0; later replications only feed
    // the steady-state statistics.
    std::vector<DayRow> days;
    double steady_state_mean = 0.0;       // coins, mean float over measured days
    double steady_state_std_error = 0.0;  // across replications; NaN when replications == 1
    double per_client_balance = 0.0;      // steady_state_mean / n_clients
    double analytic_balance = 0.0;        // expected standing balance of the configured pmf
    LedgerTotals totals;                  // final ledger of replication 0
};

// Source of the per-client daily draw and of rollover durations. The default
// model samples the configured distribution; tests may inject point masses.
// Callables must be stateless apart from the rng argument: replications
// invoke them concurrently.
struct DrawModel {
    std::function<Draw(std::mt19937_64&)> daily_draw;
    std::function<std::int64_t(std::mt19937_64&)> rollover_duration;
};

// Runs the daily event loop over horizon_days: settle maturities (convert /
// roll over / refund), one draw per client with deposits opened immediately,
// accrue interest, record the float. Steady-state statistics use days >=
// warmup. Replications run on independent streams derived from the base seed
// and aggregate in replication order, so identical configs give bit-identical
// reports.
SimReport run(const SimConfig& config);
SimReport run(const SimConfig& config, const DrawModel& model);

struct ComparisonRecord {
    double analytic_balance = 0.0;   // coins per client
    double simulated_balance = 0.0;  // coins per client
    double std_error = 0.0;          // per client, across replications
    double abs_gap = 0.0;
    double rel_gap = 0.0;
    bool pass = false;  // |gap| <= 3 * std_error
};

// Cross-validates the simulator against the analytic expectation. Only the
// pure deposit/refund protocol is comparable, so configs with nonzero
// conversion, rollover or commission are refused, as are replications < 2
// (no standard error otherwise).
ComparisonRecord compare(const SimConfig& config);

}  // namespace escrowsim
