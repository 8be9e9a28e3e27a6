#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "escrowsim/analytic.hpp"
#include "escrowsim/csv.hpp"
#include "escrowsim/scenario.hpp"
#include "escrowsim/simulator.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;      // bad arguments, unreadable/invalid scenario, IO failure
constexpr int kExitStatFail = 2;   // compare verdict FAIL

struct CommonOpts {
    std::string scenario_path;
    std::optional<std::int64_t> seed_override;
    std::optional<std::int64_t> replications_override;
};

escrowsim::SimConfig load_config(const CommonOpts& opts) {
    escrowsim::SimConfig config = escrowsim::load_scenario(opts.scenario_path);
    if (opts.seed_override) config.seed = static_cast<std::uint64_t>(*opts.seed_override);
    if (opts.replications_override) config.replications = *opts.replications_override;
    config.validate();
    return config;
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << body;
    if (!out) throw std::runtime_error("failed writing output file '" + path + "'");
}

std::string fmt(double value) {
    std::ostringstream os;
    os << std::setprecision(10) << value;
    return os.str();
}

int run_analytic(const CommonOpts& opts, std::optional<double> target,
                 const std::string& out_path) {
    const escrowsim::SimConfig config = load_config(opts);
    const escrowsim::DepositDistribution dist(config.dist_params);
    const escrowsim::AnalyticReport report = escrowsim::analyze(dist, target);
    const double closed = escrowsim::closed_form_balance(
        config.dist_params.k1 * config.dist_params.k2, config.dist_params.max_amount,
        config.dist_params.max_duration);

    std::cout << "deposit_prob                 " << fmt(report.deposit_prob) << "\n"
              << "expected_daily_deposit       " << fmt(report.expected_daily_deposit) << "\n"
              << "standing_balance_exact       " << fmt(report.expected_standing_balance) << "\n"
              << "standing_balance_closed_form " << fmt(closed) << "\n";
    if (report.required_clients)
        std::cout << "required_clients             " << *report.required_clients << "\n";

    if (!out_path.empty()) {
        std::string csv = "metric,value\n";
        csv += "deposit_prob," + fmt(report.deposit_prob) + "\n";
        csv += "expected_daily_deposit," + fmt(report.expected_daily_deposit) + "\n";
        csv += "standing_balance_exact," + fmt(report.expected_standing_balance) + "\n";
        csv += "standing_balance_closed_form," + fmt(closed) + "\n";
        if (report.required_clients)
            csv += "required_clients," + std::to_string(*report.required_clients) + "\n";
        write_file(out_path, csv);
    }
    return kExitOk;
}

int run_simulate(const CommonOpts& opts, const std::string& out_path) {
    const escrowsim::SimConfig config = load_config(opts);
    const escrowsim::SimReport report = escrowsim::run(config);

    write_file(out_path, escrowsim::day_series_csv(report.days));

    const std::int64_t warmup = config.resolved_warmup();
    std::cout << "replications          " << config.replications << "\n"
              << "measured_days         " << (config.horizon_days - warmup) << " (warmup "
              << warmup << ")\n"
              << "steady_state_float    " << fmt(report.steady_state_mean) << "\n"
              << "std_error             "
              << (std::isnan(report.steady_state_std_error)
                      ? std::string("n/a")
                      : fmt(report.steady_state_std_error))
              << "\n"
              << "per_client_balance    " << fmt(report.per_client_balance) << "\n"
              << "analytic_balance      " << fmt(report.analytic_balance) << "\n"
              << "total_deposited       " << report.totals.total_deposited << "\n"
              << "total_refunded        " << report.totals.total_refunded << "\n"
              << "total_converted       " << report.totals.total_converted_revenue << "\n"
              << "commissions_collected " << report.totals.commissions_collected << "\n"
              << "interest_earned       " << fmt(report.totals.interest_earned) << "\n"
              << "client_interest_paid  " << fmt(report.totals.client_interest_paid) << "\n"
              << "csv                   " << out_path << "\n";
    return kExitOk;
}

int run_compare(const CommonOpts& opts) {
    const escrowsim::SimConfig config = load_config(opts);
    const escrowsim::ComparisonRecord record = escrowsim::compare(config);

    std::cout << "analytic_per_client   " << fmt(record.analytic_balance) << "\n"
              << "simulated_per_client  " << fmt(record.simulated_balance) << "\n"
              << "std_error             " << fmt(record.std_error) << "\n"
              << "abs_gap               " << fmt(record.abs_gap) << "\n"
              << "rel_gap               " << fmt(record.rel_gap) << "\n"
              << "verdict               " << (record.pass ? "PASS" : "FAIL")
              << " (|gap| vs 3*std_error)\n";
    return record.pass ? kExitOk : kExitStatFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "escrowsim: analytic expectations and Monte Carlo simulation of a "
        "deposit/refund escrow monetization scheme"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::optional<double> target;
    std::string out_path;

    auto add_common = [&](CLI::App* cmd, bool with_sim_overrides) {
        cmd->add_option("--scenario", opts.scenario_path, "scenario file (key = value lines)")
            ->required();
        if (with_sim_overrides) {
            cmd->add_option("--seed", opts.seed_override, "override the scenario seed");
            cmd->add_option("--replications", opts.replications_override,
                            "override the scenario replication count");
        }
    };

    CLI::App* analytic_cmd = app.add_subcommand(
        "analytic", "closed-form deposit probability, daily deposit, standing balance");
    add_common(analytic_cmd, false);
    analytic_cmd->add_option("--target", target,
                             "target float in coins; also prints the required client count");
    analytic_cmd->add_option("--out", out_path, "optional metric,value CSV output path");

    CLI::App* simulate_cmd =
        app.add_subcommand("simulate", "run the Monte Carlo simulation and write a day series CSV");
    add_common(simulate_cmd, true);
    simulate_cmd->add_option("--out", out_path, "day series CSV output path")->required();

    CLI::App* compare_cmd = app.add_subcommand(
        "compare", "cross-validate the simulated per-client float against the analytic value");
    add_common(compare_cmd, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(analytic_cmd)) return run_analytic(opts, target, out_path);
        if (app.got_subcommand(simulate_cmd)) return run_simulate(opts, out_path);
        if (app.got_subcommand(compare_cmd)) return run_compare(opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
