#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "escrowsim/simulator.hpp"

namespace escrowsim {

inline constexpr const char* kDaySeriesHeader =
    "day,float_balance,total_deposited,total_refunded,total_converted_revenue,interest_earned";

// One row per day, header exactly kDaySeriesHeader, newline-terminated,
// '.' decimal separator. Doubles are written shortest-round-trip, so a
// reparse reproduces the series bit for bit.
std::string day_series_csv(const std::vector<DayRow>& days);

// Inverse of day_series_csv. Throws std::runtime_error on malformed input.
std::vector<DayRow> parse_day_series_csv(std::istream& in);

}  // namespace escrowsim
