#include "escrowsim/simulator.hpp"

#include <cassert>
#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>

#include "escrowsim/analytic.hpp"

namespace escrowsim {

namespace {

struct RepOutcome {
    std::vector<DayRow> days;
    double mean_float = 0.0;
    LedgerTotals totals;
};

RepOutcome simulate_one(const SimConfig& config, const DrawModel& model, std::uint64_t rep) {
    std::mt19937_64 rng(stream_seed(config.seed, rep));
    Ledger ledger(config.commission_rate);
    const std::int64_t warmup = config.resolved_warmup();

    RepOutcome out;
    out.days.reserve(static_cast<std::size_t>(config.horizon_days));
    double measured_sum = 0.0;

    for (std::int64_t day = 0; day < config.horizon_days; ++day) {
        if (day > 0) {
            // Start of day: settle everything maturing today. A settled
            // contract converts, rolls over at the same principal with a
            // fresh duration, or refunds.
            const std::vector<DepositContract> settled =
                ledger.advance_day([&](const DepositContract&) {
                    return uniform01(rng) < config.conversion_prob;
                });
            for (const DepositContract& contract : settled) {
                if (contract.state != ContractState::Refunded) continue;
                if (uniform01(rng) < config.rollover_prob && contract.principal >= 1)
                    ledger.open_deposit(contract.client_id, contract.principal,
                                        model.rollover_duration(rng));
            }
        }
        for (std::int64_t client = 0; client < config.n_clients; ++client) {
            const Draw draw = model.daily_draw(rng);
            if (draw.is_deposit())
                ledger.open_deposit(static_cast<std::uint64_t>(client), draw.amount,
                                    draw.duration);
        }
        ledger.accrue_interest(config.daily_interest_rate, config.client_interest_share);
        assert(ledger.conservation_check());

        out.days.push_back({day, ledger.float_balance, ledger.total_deposited,
                            ledger.total_refunded, ledger.total_converted_revenue,
                            ledger.interest_earned});
        if (day >= warmup) measured_sum += static_cast<double>(ledger.float_balance);
    }

    out.mean_float = measured_sum / static_cast<double>(config.horizon_days - warmup);
    out.totals = ledger.totals();
    return out;
}

SimReport run_impl(const SimConfig& config, const DrawModel& model, double analytic_balance) {
    const std::size_t reps = static_cast<std::size_t>(config.replications);
    std::vector<RepOutcome> outcomes(reps);
    if (reps == 1) {
        outcomes[0] = simulate_one(config, model, 0);
    } else {
        std::vector<std::future<RepOutcome>> futures;
        futures.reserve(reps);
        for (std::size_t rep = 0; rep < reps; ++rep)
            futures.push_back(std::async(std::launch::async, [&config, &model, rep] {
                return simulate_one(config, model, static_cast<std::uint64_t>(rep));
            }));
        for (std::size_t rep = 0; rep < reps; ++rep) outcomes[rep] = futures[rep].get();
    }

    // Fixed reduction order over replication index keeps reports bit-identical.
    double mean = 0.0;
    for (std::size_t rep = 0; rep < reps; ++rep) mean += outcomes[rep].mean_float;
    mean /= static_cast<double>(reps);

    double std_error = std::numeric_limits<double>::quiet_NaN();
    if (reps >= 2) {
        double ss = 0.0;
        for (std::size_t rep = 0; rep < reps; ++rep) {
            const double d = outcomes[rep].mean_float - mean;
            ss += d * d;
        }
        std_error = std::sqrt(ss / static_cast<double>(reps - 1)) /
                    std::sqrt(static_cast<double>(reps));
    }

    SimReport report;
    report.days = std::move(outcomes[0].days);
    report.totals = outcomes[0].totals;
    report.steady_state_mean = mean;
    report.steady_state_std_error = std_error;
    report.per_client_balance = mean / static_cast<double>(config.n_clients);
    report.analytic_balance = analytic_balance;
    return report;
}

}  // namespace

void SimConfig::validate() const {
    // DistributionParams invariants are enforced by construction.
    DepositDistribution probe(dist_params);
    (void)probe;
    if (n_clients < 1) throw std::invalid_argument("n_clients must be >= 1");
    if (horizon_days < 1) throw std::invalid_argument("horizon_days must be >= 1");
    const std::int64_t warmup = resolved_warmup();
    if (warmup < 0) throw std::invalid_argument("warmup_days must be >= 0");
    if (warmup + 1 > horizon_days)
        throw std::invalid_argument("warmup_days + 1 must not exceed horizon_days");
    if (daily_interest_rate < 0.0)
        throw std::invalid_argument("daily_interest_rate must be >= 0");
    if (client_interest_share < 0.0 || client_interest_share > 1.0)
        throw std::invalid_argument("client_interest_share must lie in [0,1]");
    if (commission_rate < 0.0 || commission_rate > 1.0)
        throw std::invalid_argument("commission_rate must lie in [0,1]");
    if (conversion_prob < 0.0 || conversion_prob > 1.0)
        throw std::invalid_argument("conversion_prob must lie in [0,1]");
    if (rollover_prob < 0.0 || rollover_prob > 1.0)
        throw std::invalid_argument("rollover_prob must lie in [0,1]");
    if (replications < 1) throw std::invalid_argument("replications must be >= 1");
}

SimReport run(const SimConfig& config) {
    config.validate();
    const DepositDistribution dist(config.dist_params);
    DrawModel model;
    model.daily_draw = [dist](std::mt19937_64& rng) { return dist.sample(rng); };
    model.rollover_duration = [dist](std::mt19937_64& rng) { return dist.sample_duration(rng); };
    return run_impl(config, model, expected_standing_balance(dist));
}

SimReport run(const SimConfig& config, const DrawModel& model) {
    config.validate();
    const DepositDistribution dist(config.dist_params);
    return run_impl(config, model, expected_standing_balance(dist));
}

ComparisonRecord compare(const SimConfig& config) {
    config.validate();
    if (config.conversion_prob != 0.0)
        throw std::invalid_argument(
            "compare: conversion_prob must be 0, the analytic expectation covers pure deposit/refund only");
    if (config.rollover_prob != 0.0)
        throw std::invalid_argument(
            "compare: rollover_prob must be 0, the analytic expectation covers pure deposit/refund only");
    if (config.commission_rate != 0.0)
        throw std::invalid_argument(
            "compare: commission_rate must be 0, the analytic expectation covers pure deposit/refund only");
    if (config.replications < 2)
        throw std::invalid_argument("compare: replications must be >= 2 to estimate a standard error");

    const SimReport report = run(config);
    ComparisonRecord record;
    record.analytic_balance = report.analytic_balance;
    record.simulated_balance = report.per_client_balance;
    record.std_error = report.steady_state_std_error / static_cast<double>(config.n_clients);
    record.abs_gap = std::abs(record.simulated_balance - record.analytic_balance);
    record.rel_gap = record.abs_gap / record.analytic_balance;
    record.pass = record.abs_gap <= 3.0 * record.std_error;
    return record;
}

}  // namespace escrowsim
