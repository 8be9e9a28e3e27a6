#include "escrowsim/distribution.hpp"

#include <cmath>
#include <stdexcept>

namespace escrowsim {

std::int64_t inverse_marginal_cdf(double u, std::int64_t n_max) {
    if (n_max < 1) throw std::invalid_argument("inverse_marginal_cdf: n_max must be >= 1");
    if (u < 0.0) u = 0.0;
    // CDF(n) >= u  <=>  n/(n+1) >= u * n_max/(n_max+1)  <=>  n >= c/(1-c)
    const double c = u * (static_cast<double>(n_max) / static_cast<double>(n_max + 1));
    std::int64_t n = static_cast<std::int64_t>(std::ceil(c / (1.0 - c)));
    if (n < 1) n = 1;
    if (n > n_max) n = n_max;
    return n;
}

DepositDistribution::DepositDistribution(const DistributionParams& params) : params_(params) {
    if (!(params.k1 > 0.0)) throw std::invalid_argument("k1 must be positive");
    if (!(params.k2 > 0.0)) throw std::invalid_argument("k2 must be positive");
    if (params.max_amount < 1) throw std::invalid_argument("max_amount must be >= 1");
    if (params.max_duration < 1) throw std::invalid_argument("max_duration must be >= 1");

    // sum_{n=1..N} 1/(n(n+1)) telescopes to N/(N+1); no summation loop.
    const double amount_mass =
        static_cast<double>(params.max_amount) / static_cast<double>(params.max_amount + 1);
    const double duration_mass =
        static_cast<double>(params.max_duration) / static_cast<double>(params.max_duration + 1);
    deposit_prob_ = params.k1 * params.k2 * amount_mass * duration_mass;
    if (deposit_prob_ > 1.0)
        throw std::invalid_argument(
            "k1*k2*(M/(M+1))*(T/(T+1)) exceeds 1: deposit cells cannot carry more than the whole mass");

    // (M+1)(T+1) - M*T = M + T + 1 cells have x = 0 or t = 0.
    const double zero_cells =
        static_cast<double>(params.max_amount + params.max_duration + 1);
    zero_cell_prob_ = (1.0 - deposit_prob_) / zero_cells;
}

double DepositDistribution::pmf(std::int64_t amount, std::int64_t duration) const {
    if (amount < 0 || amount > params_.max_amount)
        throw std::out_of_range("pmf: amount outside 0..max_amount");
    if (duration < 0 || duration > params_.max_duration)
        throw std::out_of_range("pmf: duration outside 0..max_duration");
    if (amount == 0 || duration == 0) return zero_cell_prob_;
    const double x = static_cast<double>(amount);
    const double t = static_cast<double>(duration);
    return (params_.k1 / (x * (x + 1.0))) * (params_.k2 / (t * (t + 1.0)));
}

}  // namespace escrowsim
