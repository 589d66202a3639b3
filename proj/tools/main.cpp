#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "cartelfringe/config.hpp"
#include "cartelfringe/format.hpp"
#include "cartelfringe/fringe.hpp"
#include "cartelfringe/oracle.hpp"
#include "cartelfringe/params.hpp"
#include "cartelfringe/strategy.hpp"
#include "cartelfringe/sweep.hpp"
#include "cartelfringe/trajectory.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

// Exit codes (stable contract): 0 success, 1 validation failure,
// 2 usage/parse error, 3 oracle failure.
constexpr int kOk = 0, kValidationFailure = 1, kUsageError = 2, kOracleFailure = 3;

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

cfm::MarketParams read_params(const std::string& config_path) {
    if (config_path.empty()) return cfm::MarketParams{};  // benchmark defaults
    return cfm::load_config(config_path);
}

json params_json(const cfm::MarketParams& p) {
    return json{{"alpha", p.alpha}, {"beta", p.beta}, {"b", p.b},     {"k_c", p.k_c},
                {"k_f", p.k_f},     {"r", p.r},       {"s0_c", p.s0_c}, {"s0_f", p.s0_f},
                {"m_f", p.m_f},     {"m_c", p.m_c}};
}

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

void write_manifest(const fs::path& out_dir, const std::string& command,
                    const cfm::MarketParams& p, const std::vector<std::string>& outputs,
                    const json& extra = json::object()) {
    json m{{"command", command},
           {"params", params_json(p)},
           {"outputs", outputs},
           {"version", kVersion},
           {"timestamp", timestamp_utc()}};
    m.update(extra);
    std::ofstream f(out_dir / "manifest.json");
    f << m.dump(2) << "\n";
}

void print_condition(const char* name, const char* desc, const cfm::Condition& c) {
    std::cout << "  " << name << "  " << (c.holds ? "pass" : "FAIL") << "  slack "
              << cfm::fmt_g17(c.slack) << "  (" << desc << ")\n";
}

int cmd_validate(const std::string& config_path) {
    const cfm::MarketParams p = read_params(config_path);
    cfm::AssumptionReport rep;
    try {
        rep = cfm::validate(p);
    } catch (const std::invalid_argument& e) {
        std::cout << "hard constraint violated: " << e.what() << "\n";
        return kValidationFailure;
    }
    std::cout << "hard constraints (positivity, k_c < k_f < b < alpha, capacity): pass\n";
    std::cout << "conditions:\n";
    print_condition("a1", "2b - k_c <= alpha", rep.a1_double_cap);
    print_condition("a2", "2k_f - k_c <= alpha", rep.a2_double_kf);
    print_condition("a3", "alpha - beta*m_f - b > 0", rep.a3_share_lb_positive);
    print_condition("a4", "fringe depletes before the cartel", rep.a4_resource_order);
    std::cout << "  a5  pending (needs the share-class horizon; see `solve`)\n";
    return rep.all_hold() ? kOk : kValidationFailure;
}

int cmd_solve(const std::string& config_path, const std::string& out_dir) {
    const cfm::MarketParams p = read_params(config_path);
    cfm::validate(p);
    const cfm::StrategyComparison cmp = cfm::select_strategy(p);

    fs::create_directories(out_dir);
    const fs::path csv_path = fs::path(out_dir) / "comparison.csv";
    std::ofstream csv(csv_path);
    csv << "strategy,has_value,feasible,reason,profit,depletion_cartel,depletion_fringe,"
           "t_c,phases\n";
    for (const cfm::StrategyOutcome& o : cmp.outcomes) {
        std::string phases;
        for (const cfm::PhaseSpan& s : o.schedule) {
            if (!phases.empty()) phases += ';';
            phases += std::string(1, cfm::to_char(s.phase)) + ":" + cfm::fmt_g17(s.start) +
                      ":" + cfm::fmt_g17(s.end);
        }
        csv << cfm::to_string(o.class_id) << ',' << (o.has_value ? 1 : 0) << ','
            << (o.feasible ? 1 : 0) << ',' << csv_quote(o.reason) << ','
            << cfm::fmt_g17(o.profit) << ',' << cfm::fmt_g17(o.depletion_cartel) << ','
            << cfm::fmt_g17(o.depletion_fringe) << ','
            << (o.t_c ? cfm::fmt_g17(*o.t_c) : "") << ',' << csv_quote(phases) << '\n';
    }
    csv.close();
    write_manifest(out_dir, "solve", p, {"comparison.csv"});

    if (cmp.best) {
        std::cout << "best strategy: " << cfm::to_string(*cmp.best)
                  << (cmp.tie ? " (tied)" : "") << "\n";
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (std::isfinite(cmp.margins[i][j]))
                    std::cout << "  " << cfm::to_string(cmp.outcomes[i].class_id) << " - "
                              << cfm::to_string(cmp.outcomes[j].class_id) << " = "
                              << cfm::fmt_g17(cmp.margins[i][j]) << "\n";
    } else {
        std::cout << "no strategy class could be valued\n";
    }
    for (const cfm::StrategyOutcome& o : cmp.outcomes)
        if (!o.reason.empty())
            std::cout << "  note: " << cfm::to_string(o.class_id) << ": " << o.reason << "\n";
    return kOk;
}

int cmd_traj(const std::string& config_path, const std::string& strategy, int n_points,
             const std::string& out_dir) {
    const cfm::MarketParams p = read_params(config_path);
    cfm::validate(p);
    cfm::StrategyOutcome outcome;
    if (strategy == "deter") outcome = cfm::profit_deter(p);
    else if (strategy == "share") outcome = cfm::profit_share(p);
    else if (strategy == "wait") outcome = cfm::profit_wait(p);
    else throw CLI::ValidationError("--strategy must be deter, share, or wait");

    const cfm::Trajectory tr = cfm::render(outcome, p, n_points);
    fs::create_directories(out_dir);
    std::ofstream csv(fs::path(out_dir) / "trajectory.csv");
    csv << "t,phase,q_c,q_f,p,s_c,s_f,cum_profit\n";
    for (size_t i = 0; i < tr.t.size(); ++i)
        csv << cfm::fmt_g17(tr.t[i]) << ',' << cfm::to_char(tr.phase[i]) << ','
            << cfm::fmt_g17(tr.q_c[i]) << ',' << cfm::fmt_g17(tr.q_f_total[i]) << ','
            << cfm::fmt_g17(tr.p[i]) << ',' << cfm::fmt_g17(tr.s_c[i]) << ','
            << cfm::fmt_g17(tr.s_f[i]) << ',' << cfm::fmt_g17(tr.cum_profit[i]) << '\n';
    csv.close();
    write_manifest(out_dir, "traj", p, {"trajectory.csv"},
                   json{{"strategy", strategy}, {"n_points", n_points}});
    for (const cfm::PriceJump& j : tr.jumps)
        std::cout << "price jump at t = " << cfm::fmt_g17(j.t) << ": "
                  << cfm::fmt_g17(j.p_left) << " -> " << cfm::fmt_g17(j.p_right) << "\n";
    return kOk;
}

int cmd_sweep(const std::string& config_path, const std::vector<std::string>& axis_specs,
              const std::string& out_dir) {
    const cfm::MarketParams p = read_params(config_path);
    cfm::validate(p);

    std::vector<cfm::AxisSpec> axes;
    for (const std::string& spec : axis_specs) {
        cfm::AxisSpec a;
        char name[32];
        if (std::sscanf(spec.c_str(), "%31[^:]:%lf:%lf:%d", name, &a.lo, &a.hi, &a.n) != 4)
            throw CLI::ValidationError("--axis expects name:lo:hi:n, got \"" + spec + "\"");
        a.name = name;
        static const char* const kAxisNames[] = {"alpha", "beta", "b",    "k_c", "k_f",
                                                 "r",     "s0_c", "s0_f", "m_f", "m_c"};
        if (std::find(std::begin(kAxisNames), std::end(kAxisNames), a.name) ==
            std::end(kAxisNames))
            throw CLI::ValidationError("unknown axis parameter \"" + a.name + "\"");
        axes.push_back(a);
    }
    if (axes.size() == 2 && axes[0].name == axes[1].name)
        throw CLI::ValidationError("overlapping axis names");

    cfm::SweepGrid grid;
    if (axes.size() == 1) grid = cfm::sweep_1d(axes[0], p);
    else grid = cfm::classify_regions(axes[0], axes[1], p);

    fs::create_directories(out_dir);
    std::ofstream csv(fs::path(out_dir) / "grid.csv");
    for (const cfm::AxisSpec& a : grid.axes) csv << a.name << ',';
    csv << "pi1,pi2,pi3,best,valid,reason\n";
    for (const cfm::SweepCell& c : grid.cells) {
        for (double v : c.coords) csv << cfm::fmt_g17(v) << ',';
        csv << cfm::fmt_g17(c.pi1) << ',' << cfm::fmt_g17(c.pi2) << ','
            << cfm::fmt_g17(c.pi3) << ',' << c.best << ',' << (c.valid ? 1 : 0) << ','
            << csv_quote(c.reason) << '\n';
    }
    csv.close();
    write_manifest(out_dir, "sweep", p, {"grid.csv"});
    std::cout << grid.cells.size() << " cells written\n";
    return kOk;
}

int cmd_oracle(const std::string& config_path, std::uint64_t seed,
               const std::string& out_dir) {
    const cfm::MarketParams p = read_params(config_path);
    cfm::validate(p);
    const std::vector<cfm::OracleReport> reports = cfm::run_all_checks(p, seed);

    fs::create_directories(out_dir);
    std::ofstream csv(fs::path(out_dir) / "oracle_report.csv");
    csv << "check,closed_form,oracle_value,rel_gap,tolerance,pass\n";
    bool all_pass = true;
    for (const cfm::OracleReport& r : reports) {
        csv << r.check << ',' << cfm::fmt_g17(r.closed_form) << ','
            << cfm::fmt_g17(r.oracle_value) << ',' << cfm::fmt_g17(r.rel_gap) << ','
            << cfm::fmt_g17(r.tolerance) << ',' << (r.pass ? 1 : 0) << '\n';
        all_pass = all_pass && r.pass;
        std::cout << (r.pass ? "pass  " : "FAIL  ") << r.check << "  gap "
                  << cfm::fmt_g17(r.rel_gap) << "\n";
    }
    csv.close();
    write_manifest(out_dir, "oracle", p, {"oracle_report.csv"}, json{{"seed", seed}});
    return all_pass ? kOk : kOracleFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cartel-versus-fringe resource market solver"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::string config_path, out_dir = ".", strategy;
    int n_points = 200;
    std::uint64_t seed = 0;
    std::vector<std::string> axis_specs;

    auto* validate_cmd = app.add_subcommand("validate", "check parameter assumptions");
    validate_cmd->add_option("--config", config_path, "parameter file (key = value)");

    auto* solve_cmd = app.add_subcommand("solve", "compare the three strategy classes");
    solve_cmd->add_option("--config", config_path);
    solve_cmd->add_option("--out", out_dir, "output directory");

    auto* traj_cmd = app.add_subcommand("traj", "sample one strategy's trajectory");
    traj_cmd->add_option("--config", config_path);
    traj_cmd->add_option("--out", out_dir);
    traj_cmd->add_option("--strategy", strategy, "deter | share | wait")->required();
    traj_cmd->add_option("--points", n_points, "samples per phase (>= 2)")
        ->check(CLI::Range(2, 10000000));

    auto* sweep_cmd = app.add_subcommand("sweep", "sensitivity grid");
    sweep_cmd->add_option("--config", config_path);
    sweep_cmd->add_option("--out", out_dir);
    sweep_cmd->add_option("--axis", axis_specs, "axis spec name:lo:hi:n (once or twice)")
        ->required()
        ->expected(1, 2);

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force verification battery");
    oracle_cmd->add_option("--config", config_path);
    oracle_cmd->add_option("--out", out_dir);
    oracle_cmd->add_option("--seed", seed, "64-bit seed")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsageError;
    }

    try {
        if (app.got_subcommand(validate_cmd)) return cmd_validate(config_path);
        if (app.got_subcommand(solve_cmd)) return cmd_solve(config_path, out_dir);
        if (app.got_subcommand(traj_cmd))
            return cmd_traj(config_path, strategy, n_points, out_dir);
        if (app.got_subcommand(sweep_cmd)) return cmd_sweep(config_path, axis_specs, out_dir);
        if (app.got_subcommand(oracle_cmd)) return cmd_oracle(config_path, seed, out_dir);
    } catch (const cfm::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kUsageError;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const cfm::InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kValidationFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kValidationFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidationFailure;
    }
    return kUsageError;
}
