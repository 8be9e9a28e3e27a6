#include "escrowsim/ledger.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace escrowsim {

Ledger::Ledger(double commission_rate_in) : commission_rate(commission_rate_in) {
    if (commission_rate < 0.0 || commission_rate > 1.0)
        throw std::invalid_argument("commission_rate must lie in [0,1]");
}

DepositContract Ledger::open_deposit(std::uint64_t client_id, Coins principal, Day duration) {
    if (principal < 1) throw std::invalid_argument("open_deposit: principal must be >= 1 coin");
    if (duration < 1) throw std::invalid_argument("open_deposit: duration must be >= 1 day");

    Coins commission = 0;
    if (commission_rate > 0.0) {
        commission = static_cast<Coins>(
            std::llround(static_cast<double>(principal) * commission_rate));
        commission = std::clamp<Coins>(commission, 0, principal);
    }
    const Coins net = principal - commission;

    DepositContract contract;
    contract.id = next_contract_id++;
    contract.client_id = client_id;
    contract.principal = net;
    contract.start_day = current_day;
    contract.duration = duration;
    contract.state = ContractState::Active;

    commissions_collected += commission;
    total_deposited += net;
    float_balance += net;
    active_by_maturity[contract.maturity_day()].push_back(contract);
    return contract;
}

std::vector<DepositContract> Ledger::advance_day(
    const std::function<bool(const DepositContract&)>& convert_decider) {
    ++current_day;
    std::vector<DepositContract> settled;
    auto it = active_by_maturity.find(current_day);
    if (it == active_by_maturity.end()) return settled;
    settled = std::move(it->second);
    active_by_maturity.erase(it);
    for (DepositContract& contract : settled) {
        if (convert_decider(contract)) {
            contract.state = ContractState::Converted;
            total_converted_revenue += contract.principal;
        } else {
            contract.state = ContractState::Refunded;
            total_refunded += contract.principal;
        }
        float_balance -= contract.principal;
    }
    return settled;
}

double Ledger::accrue_interest(double daily_rate, double client_share) {
    if (daily_rate < 0.0) throw std::invalid_argument("accrue_interest: daily_rate must be >= 0");
    if (client_share < 0.0 || client_share > 1.0)
        throw std::invalid_argument("accrue_interest: client_share must lie in [0,1]");
    const double accrued = static_cast<double>(float_balance) * daily_rate;
    interest_earned += accrued * (1.0 - client_share);
    client_interest_paid += accrued * client_share;
    return accrued;
}

bool Ledger::conservation_check() const {
    if (float_balance < 0 || total_deposited < 0 || total_refunded < 0 ||
        total_converted_revenue < 0 || commissions_collected < 0)
        return false;
    if (float_balance != total_deposited - total_refunded - total_converted_revenue) return false;
    Coins active_sum = 0;
    for (const auto& [maturity, bucket] : active_by_maturity) {
        (void)maturity;
        for (const DepositContract& contract : bucket) active_sum += contract.principal;
    }
    return active_sum == float_balance;
}

std::size_t Ledger::active_contracts() const {
    std::size_t count = 0;
    for (const auto& [maturity, bucket] : active_by_maturity) {
        (void)maturity;
        count += bucket.size();
    }
    return count;
}

LedgerTotals Ledger::totals() const {
    LedgerTotals t;
    t.total_deposited = total_deposited;
    t.total_refunded = total_refunded;
    t.total_converted_revenue = total_converted_revenue;
    t.commissions_collected = commissions_collected;
    t.interest_earned = interest_earned;
    t.client_interest_paid = client_interest_paid;
    return t;
}

}  // namespace escrowsim
