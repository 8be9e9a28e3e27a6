#include "escrowsim/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace escrowsim {

namespace {

constexpr double kEulerGamma = 0.577215664901532860606512090082402431;
constexpr std::int64_t kExactSumLimit = 1'000'000;

// Neumaier-compensated sum of 1/k for k = n..1, ascending magnitude.
double harmonic_exact(std::int64_t n) {
    double sum = 0.0;
    double comp = 0.0;
    for (std::int64_t k = n; k >= 1; --k) {
        const double term = 1.0 / static_cast<double>(k);
        const double next = sum + term;
        if (std::abs(sum) >= std::abs(term))
            comp += (sum - next) + term;
        else
            comp += (term - next) + sum;
        sum = next;
    }
    return sum + comp;
}

}  // namespace

double harmonic(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("harmonic: n must be >= 1");
    if (n <= kExactSumLimit) return harmonic_exact(n);
    const double x = static_cast<double>(n);
    return std::log(x) + kEulerGamma + 1.0 / (2.0 * x) - 1.0 / (12.0 * x * x);
}

double expected_daily_deposit(const DepositDistribution& dist) {
    const DistributionParams& p = dist.params();
    // sum_x x/(x(x+1)) = H_{M+1} - 1,  sum_t 1/(t(t+1)) = T/(T+1)
    const double amount_factor = harmonic(p.max_amount + 1) - 1.0;
    const double duration_mass =
        static_cast<double>(p.max_duration) / static_cast<double>(p.max_duration + 1);
    return p.k1 * p.k2 * amount_factor * duration_mass;
}

double expected_standing_balance(const DepositDistribution& dist) {
    const DistributionParams& p = dist.params();
    // sum_{x,t} x*t*p(x,t), both sides reduced to sums of 1/(n+1)
    const double amount_factor = harmonic(p.max_amount + 1) - 1.0;
    const double duration_factor = harmonic(p.max_duration + 1) - 1.0;
    return p.k1 * p.k2 * amount_factor * duration_factor;
}

double closed_form_balance(double k1k2, std::int64_t max_amount, std::int64_t max_duration) {
    if (!(k1k2 > 0.0) || k1k2 > 1.0)
        throw std::invalid_argument("closed_form_balance: k1k2 must lie in (0,1]");
    if (max_amount < 1) throw std::invalid_argument("closed_form_balance: max_amount must be >= 1");
    if (max_duration < 1)
        throw std::invalid_argument("closed_form_balance: max_duration must be >= 1");
    const double amount_factor = harmonic(max_amount + 1) - 1.0;
    // sum_{k=1..T} (1/k - 1/(T+1)) = H_T - T/(T+1)
    const double duration_factor =
        harmonic(max_duration) -
        static_cast<double>(max_duration) / static_cast<double>(max_duration + 1);
    return k1k2 * amount_factor * duration_factor;
}

std::int64_t required_clients(const DepositDistribution& dist, double target_balance) {
    if (!(target_balance > 0.0))
        throw std::invalid_argument("required_clients: target_balance must be positive");
    const double per_client = expected_standing_balance(dist);
    if (!(per_client > 0.0))
        throw std::invalid_argument("required_clients: per-client standing balance is zero");
    return static_cast<std::int64_t>(std::ceil(target_balance / per_client));
}

AnalyticReport analyze(const DepositDistribution& dist, std::optional<double> target_balance) {
    AnalyticReport report;
    report.deposit_prob = dist.deposit_prob();
    report.expected_daily_deposit = expected_daily_deposit(dist);
    report.expected_standing_balance = expected_standing_balance(dist);
    report.method = BalanceMethod::ExactSum;
    if (target_balance) report.required_clients = required_clients(dist, *target_balance);
    return report;
}

}  // namespace escrowsim
