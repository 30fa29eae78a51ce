#include <fstream>
#include <iomanip>
#include <iostream>

#include "CLI11.hpp"
#include "atiyah/runner.hpp"
#include "json.hpp"

using namespace atiyah;

namespace {

void apply_config_file(SuiteConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed config file: ") + e.what());
    }
    try {
        if (j.contains("group")) cfg.group = j["group"].get<std::string>();
        if (j.contains("suites")) cfg.suites = j["suites"].get<std::vector<std::string>>();
        if (j.contains("n_points")) cfg.n_points = j["n_points"].get<int>();
        if (j.contains("fd_step")) cfg.fd_step = j["fd_step"].get<double>();
        if (j.contains("t_step")) cfg.t_step = j["t_step"].get<double>();
        if (j.contains("tol_overrides")) cfg.tol_overrides = j["tol_overrides"].get<std::map<std::string, double>>();
        if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("samples_per_check")) cfg.samples_per_check = j["samples_per_check"].get<int>();
        if (j.contains("report_path")) cfg.report_path = j["report_path"].get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad config value: ") + e.what());
    }
}

std::map<std::string, double> parse_tols(const std::vector<std::string>& items) {
    std::map<std::string, double> out;
    for (const auto& it : items) {
        const auto eq = it.find('=');
        if (eq == std::string::npos) throw ConfigError("--tol expects key=value, got " + it);
        try {
            out[it.substr(0, eq)] = std::stod(it.substr(eq + 1));
        } catch (const std::exception&) {
            throw ConfigError("bad tolerance value in " + it);
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Residual checks for the path-fibration Atiyah algebroid"};
    app.require_subcommand(0, 1);

    std::string config_path, group, report;
    std::vector<std::string> suites, tols;
    int grid_t = 0, samples = 0, workers = 0;
    double fd_step = 0, t_step = 0;
    std::uint64_t seed = 0;
    bool quiet = false;
    auto* o_config = app.add_option("--config", config_path, "JSON config file; flags override it");
    auto* o_group = app.add_option("--group", group, "su2, so3, heisenberg3 or torus2");
    auto* o_suite = app.add_option("--suite", suites, "comma-separated suites")->delimiter(',');
    auto* o_grid = app.add_option("--grid-t", grid_t, "odd number of t-grid points");
    auto* o_fd = app.add_option("--fd-step", fd_step, "group finite-difference step");
    auto* o_tfd = app.add_option("--t-step", t_step, "time finite-difference step");
    auto* o_tol = app.add_option("--tol", tols, "suite.check=value tolerance override");
    auto* o_seed = app.add_option("--seed", seed, "base seed");
    auto* o_samples = app.add_option("--samples", samples, "samples per check");
    auto* o_report = app.add_option("--report", report, "write the JSON report here");
    app.add_option("--workers", workers, "worker threads (0: hardware)");
    app.add_flag("--quiet", quiet, "only print the summary");

    auto* list = app.add_subcommand("list-checks", "print check names and their identities");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (list->parsed()) {
        for (const auto& c : check_registry())
            std::cout << std::left << std::setw(36) << c.key() << c.anchor << "\n";
        return 0;
    }

    SuiteConfig cfg;
    try {
        if (*o_config) apply_config_file(cfg, config_path);
        if (*o_group) cfg.group = group;
        if (*o_suite) cfg.suites = suites;
        if (*o_grid) cfg.n_points = grid_t;
        if (*o_fd) cfg.fd_step = fd_step;
        if (*o_tfd) cfg.t_step = t_step;
        if (*o_tol)
            for (const auto& [k, v] : parse_tols(tols)) cfg.tol_overrides[k] = v;
        if (*o_seed) cfg.seed = seed;
        if (*o_samples) cfg.samples_per_check = samples;
        if (*o_report) cfg.report_path = report;
        validate(cfg);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    const RunResult result = run(cfg, workers);
    int passed = 0;
    for (const auto& r : result.checks) {
        passed += r.pass ? 1 : 0;
        if (quiet && r.pass) continue;
        std::cout << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(36) << r.check_name << std::scientific
                  << std::setprecision(3) << r.residual << " <= " << r.tolerance << std::defaultfloat;
        if (!r.error.empty()) std::cout << "  (" << r.error << ")";
        std::cout << "\n";
    }
    std::cout << passed << "/" << result.checks.size() << " checks passed on " << cfg.group << "\n";
    if (!result.abort_reason.empty()) std::cerr << "aborted: " << result.abort_reason << "\n";

    if (!cfg.report_path.empty()) {
        std::ofstream out(cfg.report_path);
        if (!out) {
            std::cerr << "cannot write report: " << cfg.report_path << "\n";
            return 2;
        }
        out << report_json(cfg, result) << "\n";
    }
    return result.exit_status;
}
