#pragma once

#include <cstdint>
#include <optional>

#include "escrowsim/distribution.hpp"

namespace escrowsim {

enum class BalanceMethod { ExactSum, ClosedFormApprox };

struct AnalyticReport {
    double deposit_prob = 0.0;
    double expected_daily_deposit = 0.0;      // coins per client per day
    double expected_standing_balance = 0.0;   // coins per client
    std::optional<std::int64_t> required_clients;
    BalanceMethod method = BalanceMethod::ExactSum;
};

// H_n = sum_{k=1..n} 1/k. Compensated summation up to n = 10^6, the
// asymptotic expansion ln n + gamma + 1/(2n) - 1/(12n^2) beyond, which is
// accurate to far better than 1e-10 relative at that scale.
double harmonic(std::int64_t n);

// E[amount deposited today] = sum_{x>=1} x sum_{t>=1} p(x,t)
//                           = k1*k2 * (H_{M+1} - 1) * T/(T+1).
double expected_daily_deposit(const DepositDistribution& dist);

// Expected per-client float at steady state. The day-by-day triple sum
// sum_{k=1..T} sum_x x sum_{t>=k} p(x,t) reorders to sum_{x,t} x*t*p(x,t)
// (Little's law: inflow rate times mean residence), which factorizes to
// k1*k2 * (H_{M+1} - 1) * (H_{T+1} - 1), evaluated in O(M+T).
double expected_standing_balance(const DepositDistribution& dist);

// Same quantity evaluated the way a back-of-envelope derivation groups it:
// k1k2 * (H_{M+1} - 1) * (H_T - T/(T+1)). Algebraically equal to
// expected_standing_balance; only rounding differs.
double closed_form_balance(double k1k2, std::int64_t max_amount, std::int64_t max_duration);

// ceil(target_balance / expected_standing_balance): the smallest client count
// whose combined standing balance reaches the target float.
std::int64_t required_clients(const DepositDistribution& dist, double target_balance);

AnalyticReport analyze(const DepositDistribution& dist,
                       std::optional<double> target_balance = std::nullopt);

}  // namespace escrowsim
