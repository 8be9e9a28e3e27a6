#include "escrowsim/scenario.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <map>
#include <string>

namespace escrowsim {

namespace {

std::string_view trim(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = text.find_last_not_of(" \t\r");
    return text.substr(first, last - first + 1);
}

double to_double(const std::string& key, const std::string& value) {
    errno = 0;
    char* end = nullptr;
    const double parsed = std::strtod(value.c_str(), &end);
    if (errno != 0 || end != value.c_str() + value.size() || value.empty())
        throw ScenarioError("scenario: key '" + key + "' has a malformed numeric value '" +
                            value + "'");
    return parsed;
}

std::int64_t to_int(const std::string& key, const std::string& value) {
    errno = 0;
    char* end = nullptr;
    const long long parsed = std::strtoll(value.c_str(), &end, 10);
    if (errno != 0 || end != value.c_str() + value.size() || value.empty())
        throw ScenarioError("scenario: key '" + key + "' has a malformed integer value '" +
                            value + "'");
    return parsed;
}

class KeyMap {
public:
    void insert(const std::string& key, const std::string& value) {
        if (!entries_.emplace(key, value).second)
            throw ScenarioError("scenario: duplicate key '" + key + "'");
    }

    bool has(const std::string& key) const { return entries_.count(key) != 0; }

    std::string require(const std::string& key) {
        auto it = entries_.find(key);
        if (it == entries_.end())
            throw ScenarioError("scenario: missing required key '" + key + "'");
        consumed_.insert({key, true});
        return it->second;
    }

    std::string take(const std::string& key, const std::string& fallback) {
        auto it = entries_.find(key);
        if (it == entries_.end()) return fallback;
        consumed_.insert({key, true});
        return it->second;
    }

    void reject_unconsumed() const {
        for (const auto& [key, value] : entries_) {
            (void)value;
            if (consumed_.count(key) == 0)
                throw ScenarioError("scenario: unknown key '" + key + "'");
        }
    }

private:
    std::map<std::string, std::string> entries_;
    std::map<std::string, bool> consumed_;
};

}  // namespace

SimConfig parse_scenario(std::istream& in) {
    KeyMap keys;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string_view::npos)
            throw ScenarioError("scenario: line " + std::to_string(line_no) +
                                " is not of the form key = value");
        const std::string key{trim(stripped.substr(0, eq))};
        const std::string value{trim(stripped.substr(eq + 1))};
        if (key.empty())
            throw ScenarioError("scenario: line " + std::to_string(line_no) + " has an empty key");
        keys.insert(key, value);
    }

    SimConfig config;
    config.dist_params.k1 = to_double("k1", keys.require("k1"));
    config.dist_params.k2 = to_double("k2", keys.require("k2"));
    config.dist_params.max_amount = to_int("max_amount", keys.require("max_amount"));
    config.dist_params.max_duration = to_int("max_duration", keys.require("max_duration"));
    config.n_clients = to_int("n_clients", keys.require("n_clients"));
    config.horizon_days = to_int("horizon_days", keys.require("horizon_days"));
    config.seed = static_cast<std::uint64_t>(to_int("seed", keys.require("seed")));

    if (keys.has("warmup_days"))
        config.warmup_days = to_int("warmup_days", keys.take("warmup_days", ""));
    config.daily_interest_rate =
        to_double("daily_interest_rate", keys.take("daily_interest_rate", "0"));
    config.client_interest_share =
        to_double("client_interest_share", keys.take("client_interest_share", "0"));
    config.commission_rate = to_double("commission_rate", keys.take("commission_rate", "0"));
    config.conversion_prob = to_double("conversion_prob", keys.take("conversion_prob", "0"));
    config.rollover_prob = to_double("rollover_prob", keys.take("rollover_prob", "0"));
    config.replications = to_int("replications", keys.take("replications", "1"));

    keys.reject_unconsumed();
    return config;
}

SimConfig load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("scenario: cannot open file '" + path.string() + "'");
    return parse_scenario(in);
}

}  // namespace escrowsim
