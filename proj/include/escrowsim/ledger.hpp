#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace escrowsim {

using Coins = std::int64_t;
using Day = std::int64_t;

enum class ContractState { Active, Refunded, Converted };

// One escrow agreement: the client parks `principal` coins for `duration`
// days and uses the product meanwhile. It settles at start of day
// start_day + duration, so it contributes to the float on days
// start_day .. start_day + duration - 1 inclusive.
struct DepositContract {
    std::uint64_t id = 0;
    std::uint64_t client_id = 0;
    Coins principal = 0;  // net of any consumer-side commission
    Day start_day = 0;
    Day duration = 0;
    ContractState state = ContractState::Active;

    Day maturity_day() const { return start_day + duration; }
};

struct LedgerTotals {
    Coins total_deposited = 0;
    Coins total_refunded = 0;
    Coins total_converted_revenue = 0;
    Coins commissions_collected = 0;
    double interest_earned = 0.0;
    double client_interest_paid = 0.0;
};

// Manufacturer-side cash accounting over integer coins. The escrowed float
// is kept exactly: float_balance == total_deposited - total_refunded -
// total_converted_revenue == sum of active principals, after every
// operation. Interest is real-valued side income and never enters the
// integer float. Single-owner mutable state; independent ledgers may run
// concurrently.
struct Ledger {
    explicit Ledger(double commission_rate = 0.0);

    // Opens an Active contract at current_day. A nonzero commission_rate is
    // deducted consumer-side at open: the contract credits (and later
    // refunds) the net principal, the cut goes to commissions_collected.
    DepositContract open_deposit(std::uint64_t client_id, Coins principal, Day duration);

    // Moves to the next day and settles every contract maturing on it.
    // convert_decider elects Converted (principal becomes revenue) or
    // Refunded (principal returns to the client). Contracts settle in the
    // order they were opened. Returns the settled contracts.
    std::vector<DepositContract> advance_day(
        const std::function<bool(const DepositContract&)>& convert_decider);

    // Books one day of interest on the current float: the manufacturer keeps
    // (1 - client_share) of float * daily_rate, clients get the rest.
    // Returns the total accrued this call.
    double accrue_interest(double daily_rate, double client_share);

    // True iff float_balance matches both the counter identity and the
    // direct sum over active contracts, with all counters nonnegative.
    bool conservation_check() const;

    std::size_t active_contracts() const;
    LedgerTotals totals() const;

    Day current_day = 0;
    Coins float_balance = 0;
    Coins total_deposited = 0;
    Coins total_refunded = 0;
    Coins total_converted_revenue = 0;
    Coins commissions_collected = 0;
    double interest_earned = 0.0;
    double client_interest_paid = 0.0;
    double commission_rate = 0.0;

    std::map<Day, std::vector<DepositContract>> active_by_maturity;
    std::uint64_t next_contract_id = 1;
};

}  // namespace escrowsim
