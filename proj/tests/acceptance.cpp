// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria cover the headline analytic values, the dual-route
// summation oracle, Monte Carlo agreement, linearity, ledger conservation
// and CLI determinism.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "escrowsim/analytic.hpp"
#include "escrowsim/ledger.hpp"
#include "escrowsim/simulator.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << detail
              << std::endl;
    if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v, int precision = 6) {
    std::ostringstream os;
    os.precision(precision);
    os << v;
    return os.str();
}

escrowsim::SimConfig desk_scale_config() {
    escrowsim::SimConfig config;
    config.dist_params = {0.1, 0.1, 1000, 100};
    config.n_clients = 10'000;
    config.horizon_days = 1000;
    config.seed = 987654321;
    config.replications = 8;
    return config;
}

void criterion_1_headline_balance() {
    const auto start = Clock::now();
    const escrowsim::DepositDistribution dist({0.1, 0.1, 1'000'000, 1'000});
    const double v = escrowsim::expected_standing_balance(dist);
    const double elapsed = seconds_since(start);
    const bool pass = std::abs(v - 0.87) <= 0.01 && elapsed < 1.0;
    report(1, pass,
           "standing balance " + fmt(v, 10) + ", |v - 0.87| = " + fmt(std::abs(v - 0.87)) +
               " <= 0.01, " + fmt(elapsed, 3) + " s < 1 s");
}

void criterion_2_client_solver() {
    const escrowsim::DepositDistribution dist({0.1, 0.1, 1'000'000, 1'000});
    const std::int64_t n1 = escrowsim::required_clients(dist, 1e6);
    const escrowsim::DepositDistribution tenth({0.1, 0.01, 1'000'000, 1'000});
    const std::int64_t n2 = escrowsim::required_clients(tenth, 1e6);
    const bool pass =
        n1 >= 1'140'000 && n1 <= 1'160'000 && n2 >= 11'400'000 && n2 <= 11'600'000;
    report(2, pass,
           "required clients " + std::to_string(n1) + " in [1.14e6, 1.16e6] and " +
               std::to_string(n2) + " in [11.4e6, 11.6e6]");
}

void criterion_3_harmonic_anchor() {
    const double anchor = escrowsim::harmonic(1'000'001) - 1.0;
    const double gap = std::abs(anchor - 13.393);
    report(3, gap <= 0.001,
           "sum of 1/(x+1) over x = 1..10^6 is " + fmt(anchor, 8) + ", |gap to 13.393| = " +
               fmt(gap) + " <= 0.001");
}

void criterion_4_ordering_oracle() {
    const auto start = Clock::now();
    std::mt19937_64 rng(424242);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        escrowsim::DistributionParams p;
        p.k1 = 0.05 + 0.95 * escrowsim::uniform01(rng);
        p.k2 = 0.05 + 0.95 * escrowsim::uniform01(rng);
        p.max_amount = 1 + static_cast<std::int64_t>(escrowsim::uniform01(rng) * 100.0);
        p.max_duration = 1 + static_cast<std::int64_t>(escrowsim::uniform01(rng) * 100.0);
        const escrowsim::DepositDistribution dist(p);
        const double triple = oracle::standing_balance_triple_sum(dist);
        const double littles = oracle::standing_balance_littles_form(dist);
        const double exact = escrowsim::expected_standing_balance(dist);
        worst = std::max(worst, std::abs(triple - littles) / littles);
        worst = std::max(worst, std::abs(exact - littles) / littles);
    }
    const double elapsed = seconds_since(start);
    const bool pass = worst <= 1e-12 && elapsed < 10.0;
    report(4, pass,
           "50 random grids, worst relative ordering gap " + fmt(worst, 3) + " <= 1e-12, " +
               fmt(elapsed, 3) + " s < 10 s");
}

escrowsim::ComparisonRecord criterion_5_monte_carlo() {
    const auto start = Clock::now();
    const escrowsim::ComparisonRecord record = escrowsim::compare(desk_scale_config());
    const double elapsed = seconds_since(start);
    const bool pass = record.pass && elapsed < 60.0;
    report(5, pass,
           "per-client float " + fmt(record.simulated_balance) + " vs analytic " +
               fmt(record.analytic_balance) + ", |gap| = " + fmt(record.abs_gap) +
               " <= 3*SE = " + fmt(3.0 * record.std_error) + ", " + fmt(elapsed, 3) +
               " s < 60 s");
    return record;
}

void criterion_6_linearity(const escrowsim::ComparisonRecord& full) {
    // analytic side: exact halving
    const escrowsim::DepositDistribution dist({0.1, 0.1, 1000, 100});
    const escrowsim::DepositDistribution half_dist({0.05, 0.1, 1000, 100});
    const double a_full = escrowsim::expected_standing_balance(dist);
    const double a_half = escrowsim::expected_standing_balance(half_dist);
    const bool analytic_ok = a_half == 0.5 * a_full;

    // simulated side: within 3 combined standard errors
    escrowsim::SimConfig config = desk_scale_config();
    config.dist_params.k1 = 0.05;
    const escrowsim::ComparisonRecord half = escrowsim::compare(config);
    const double gap = std::abs(half.simulated_balance - 0.5 * full.simulated_balance);
    const double se = std::sqrt(half.std_error * half.std_error +
                                0.25 * full.std_error * full.std_error);
    const bool sim_ok = gap <= 3.0 * se;

    report(6, analytic_ok && sim_ok,
           "halving k1k2: analytic " + fmt(a_half) + " == " + fmt(0.5 * a_full) +
               " exactly; simulated |gap| = " + fmt(gap) + " <= 3*SE = " + fmt(3.0 * se));
}

void criterion_7_conservation() {
    std::mt19937_64 rng(13579);
    escrowsim::Ledger ledger(0.02);
    bool conserved = true;
    for (int op = 0; op < 10'000 && conserved; ++op) {
        if (escrowsim::uniform01(rng) < 0.7) {
            const escrowsim::Coins principal =
                1 + static_cast<escrowsim::Coins>(escrowsim::uniform01(rng) * 5000.0);
            const escrowsim::Day duration =
                1 + static_cast<escrowsim::Day>(escrowsim::uniform01(rng) * 50.0);
            ledger.open_deposit(op % 100, principal, duration);
        } else {
            ledger.advance_day([&rng](const escrowsim::DepositContract&) {
                return escrowsim::uniform01(rng) < 0.4;
            });
        }
        conserved = ledger.conservation_check() &&
                    ledger.total_deposited == ledger.float_balance + ledger.total_refunded +
                                                  ledger.total_converted_revenue;
    }

    // always-refund run drains to zero
    escrowsim::Ledger refund_only;
    std::mt19937_64 rng2(24680);
    escrowsim::Day last = 0;
    for (int i = 0; i < 2000; ++i) {
        const escrowsim::Day duration =
            1 + static_cast<escrowsim::Day>(escrowsim::uniform01(rng2) * 60.0);
        const auto c = refund_only.open_deposit(i, 1 + i % 997, duration);
        last = std::max(last, c.maturity_day());
    }
    while (refund_only.current_day < last)
        refund_only.advance_day([](const escrowsim::DepositContract&) { return false; });
    const bool drained = refund_only.float_balance == 0 &&
                         refund_only.total_refunded == refund_only.total_deposited &&
                         refund_only.conservation_check();

    report(7, conserved && drained,
           std::string("10^4 random operations conserve exactly") +
               (conserved ? "" : " (violated)") + "; always-refund run drains to float 0" +
               (drained ? "" : " (violated)"));
}

void criterion_8_cli_determinism() {
    const fs::path dir =
        fs::temp_directory_path() / ("escrowsim_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const fs::path scenario = dir / "determinism.scenario";
    {
        std::ofstream out(scenario);
        out << "k1 = 0.1\nk2 = 0.1\nmax_amount = 1000\nmax_duration = 50\n"
               "n_clients = 1000\nhorizon_days = 200\nseed = 31415\nreplications = 2\n";
    }
    const fs::path csv_a = dir / "a.csv";
    const fs::path csv_b = dir / "b.csv";
    const auto run_once = [&](const fs::path& out_csv) {
        const std::string cmd = std::string(ESCROWSIM_CLI_PATH) + " simulate --scenario " +
                                scenario.string() + " --out " + out_csv.string() +
                                " >/dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) && WEXITSTATUS(status) == 0;
    };
    const auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    };
    const bool ran = run_once(csv_a) && run_once(csv_b);
    const std::string a = slurp(csv_a);
    const bool pass = ran && !a.empty() && a == slurp(csv_b);
    report(8, pass, "two CLI runs with the same seed produce byte-identical CSV output");
}

}  // namespace

int main() {
    criterion_1_headline_balance();
    criterion_2_client_solver();
    criterion_3_harmonic_anchor();
    criterion_4_ordering_oracle();
    const escrowsim::ComparisonRecord full = criterion_5_monte_carlo();
    criterion_6_linearity(full);
    criterion_7_conservation();
    criterion_8_cli_determinism();

    std::cout << (g_failures == 0 ? "all acceptance criteria passed"
                                  : std::to_string(g_failures) + " criteria failed")
              << std::endl;
    return g_failures == 0 ? 0 : 1;
}
