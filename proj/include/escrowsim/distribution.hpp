#pragma once

#include <cstdint>

#include "escrowsim/rng.hpp"

namespace escrowsim {

// Parameters of the deposit probability mass function
//
//   p(x,t) = k1/(x(x+1)) * k2/(t(t+1))   for x >= 1 coins, t >= 1 days
//   p(x,t) = k0                          for x = 0 or t = 0
//
// over the grid x in 0..max_amount, t in 0..max_duration. One cell is the
// outcome of one client on one day; any cell with x = 0 or t = 0 means
// "no deposit today".
struct DistributionParams {
    double k1 = 0.0;
    double k2 = 0.0;
    std::int64_t max_amount = 0;    // M, coins
    std::int64_t max_duration = 0;  // T, days
};

struct Draw {
    std::int64_t amount = 0;    // coins, 0..M
    std::int64_t duration = 0;  // days, 0..T
    bool is_deposit() const { return amount >= 1 && duration >= 1; }
};

// Smallest n in 1..n_max with CDF(n) >= u for the truncated marginal with
// weights 1/(n(n+1)). The telescoped CDF is (1 - 1/(n+1)) / (1 - 1/(n_max+1)),
// so the inverse is closed-form; no table is needed for any n_max.
std::int64_t inverse_marginal_cdf(double u, std::int64_t n_max);

class DepositDistribution {
public:
    // Validates the parameters and normalizes the pmf. The mass of the
    // deposit region telescopes to k1*k2*(M/(M+1))*(T/(T+1)); construction
    // fails if that exceeds 1. The remaining mass is spread uniformly over
    // the M+T+1 zero cells, so the grid sums to 1 exactly.
    explicit DepositDistribution(const DistributionParams& params);

    double pmf(std::int64_t amount, std::int64_t duration) const;

    // Total mass of cells with amount >= 1 and duration >= 1.
    double deposit_prob() const { return deposit_prob_; }
    // Per-cell probability k0 of each zero cell.
    double zero_cell_prob() const { return zero_cell_prob_; }
    const DistributionParams& params() const { return params_; }

    // One client-day outcome. Given a deposit, amount and duration are
    // independent, each drawn by inverse CDF from its marginal. All
    // no-deposit mass collapses to the (0,0) representative.
    template <class URBG>
    Draw sample(URBG& rng) const {
        if (uniform01(rng) >= deposit_prob_) return Draw{0, 0};
        const std::int64_t amount = sample_amount(rng);
        const std::int64_t duration = sample_duration(rng);
        return Draw{amount, duration};
    }

    // Amount marginal conditioned on a deposit happening.
    template <class URBG>
    std::int64_t sample_amount(URBG& rng) const {
        return inverse_marginal_cdf(uniform01(rng), params_.max_amount);
    }

    // Duration marginal conditioned on a deposit happening.
    template <class URBG>
    std::int64_t sample_duration(URBG& rng) const {
        return inverse_marginal_cdf(uniform01(rng), params_.max_duration);
    }

private:
    DistributionParams params_;
    double deposit_prob_ = 0.0;
    double zero_cell_prob_ = 0.0;
};

}  // namespace escrowsim
