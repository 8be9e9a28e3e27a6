#include "escrowsim/csv.hpp"

#include <charconv>
#include <istream>
#include <stdexcept>
#include <system_error>

namespace escrowsim {

namespace {

void append_int(std::string& out, std::int64_t value) {
    char buf[24];
    const auto result = std::to_chars(buf, buf + sizeof buf, value);
    out.append(buf, result.ptr);
}

void append_double(std::string& out, double value) {
    char buf[40];
    // shortest representation that round-trips
    const auto result = std::to_chars(buf, buf + sizeof buf, value);
    out.append(buf, result.ptr);
}

std::int64_t parse_int_field(std::string_view field, std::size_t line_no) {
    std::int64_t value = 0;
    const auto result = std::from_chars(field.data(), field.data() + field.size(), value);
    if (result.ec != std::errc{} || result.ptr != field.data() + field.size())
        throw std::runtime_error("csv: bad integer field on line " + std::to_string(line_no));
    return value;
}

double parse_double_field(std::string_view field, std::size_t line_no) {
    double value = 0.0;
    const auto result = std::from_chars(field.data(), field.data() + field.size(), value);
    if (result.ec != std::errc{} || result.ptr != field.data() + field.size())
        throw std::runtime_error("csv: bad numeric field on line " + std::to_string(line_no));
    return value;
}

}  // namespace

std::string day_series_csv(const std::vector<DayRow>& days) {
    std::string out;
    out.reserve(64 + days.size() * 48);
    out += kDaySeriesHeader;
    out += '\n';
    for (const DayRow& row : days) {
        append_int(out, row.day);
        out += ',';
        append_int(out, row.float_balance);
        out += ',';
        append_int(out, row.total_deposited);
        out += ',';
        append_int(out, row.total_refunded);
        out += ',';
        append_int(out, row.total_converted_revenue);
        out += ',';
        append_double(out, row.interest_earned);
        out += '\n';
    }
    return out;
}

std::vector<DayRow> parse_day_series_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kDaySeriesHeader)
        throw std::runtime_error("csv: missing or unexpected header row");
    std::vector<DayRow> days;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::string_view rest(line);
        std::string_view fields[6];
        for (int i = 0; i < 6; ++i) {
            const std::size_t comma = rest.find(',');
            if (i < 5) {
                if (comma == std::string_view::npos)
                    throw std::runtime_error("csv: expected 6 fields on line " +
                                             std::to_string(line_no));
                fields[i] = rest.substr(0, comma);
                rest.remove_prefix(comma + 1);
            } else {
                if (comma != std::string_view::npos)
                    throw std::runtime_error("csv: expected 6 fields on line " +
                                             std::to_string(line_no));
                fields[i] = rest;
            }
        }
        DayRow row;
        row.day = parse_int_field(fields[0], line_no);
        row.float_balance = parse_int_field(fields[1], line_no);
        row.total_deposited = parse_int_field(fields[2], line_no);
        row.total_refunded = parse_int_field(fields[3], line_no);
        row.total_converted_revenue = parse_int_field(fields[4], line_no);
        row.interest_earned = parse_double_field(fields[5], line_no);
        days.push_back(row);
    }
    return days;
}

}  // namespace escrowsim
