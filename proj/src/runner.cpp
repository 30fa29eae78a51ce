#include "atiyah/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <limits>
#include <set>
#include <thread>

#include "atiyah/bott.hpp"
#include "json.hpp"

namespace atiyah {

Mat CheckContext::point(double scale) {
    const Mat g = rng.point(group, scale);
    for (Eigen::Index k = 0; k < g.size(); ++k) {
        std::uint64_t bits;
        const double x = g.data()[k];
        std::memcpy(&bits, &x, sizeof bits);
        digest_ = (digest_ ^ bits) * 1099511628211ULL;
    }
    return g;
}

void validate(const SuiteConfig& config) {
    const auto groups = catalog_names();
    if (std::find(groups.begin(), groups.end(), config.group) == groups.end())
        throw ConfigError("unknown group: " + config.group);
    if (config.suites.empty()) throw ConfigError("no suites selected");
    for (const auto& s : config.suites)
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
            throw ConfigError("unknown suite: " + s);
    if (config.n_points < 3 || config.n_points % 2 == 0) throw ConfigError("n_points must be odd and >= 3");
    if (!(config.fd_step > 0 && config.fd_step < 1e-2)) throw ConfigError("fd_step must lie in (0, 1e-2)");
    if (!(config.t_step > 0 && config.t_step < 1e-2)) throw ConfigError("t_step must lie in (0, 1e-2)");
    if (config.samples_per_check < 1) throw ConfigError("samples_per_check must be >= 1");
    for (const auto& [key, value] : config.tol_overrides) {
        const auto& reg = check_registry();
        if (std::none_of(reg.begin(), reg.end(), [&](const CheckSpec& c) { return c.key() == key; }))
            throw ConfigError("tolerance for unknown check: " + key);
        if (!(value >= 0)) throw ConfigError("tolerance must be non-negative: " + key);
    }
}

namespace {

std::string hex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

CheckReport run_one(const CheckSpec& spec, const Group& G, const SuiteConfig& config, std::string& abort) {
    const auto start = std::chrono::steady_clock::now();
    CheckReport r;
    r.suite = spec.suite;
    r.check_name = spec.key();
    r.anchor = spec.anchor;
    r.tolerance = spec.tolerance;
    if (auto it = config.tol_overrides.find(spec.key()); it != config.tol_overrides.end()) r.tolerance = it->second;

    const std::uint64_t seed = derive_seed(config.seed, spec.key());
    const Numerics num{TimeGrid(config.n_points), FdConfig{config.fd_step, config.t_step}};
    CheckContext ctx(G, seed, num);
    const int samples = std::min(config.samples_per_check, spec.max_samples);
    double worst = 0;
    try {
        for (int k = 0; k < samples; ++k) {
            const double res = spec.sample(ctx);
            worst = std::isfinite(res) ? std::max(worst, res) : std::numeric_limits<double>::infinity();
        }
    } catch (const OracleAbort& e) {
        abort = spec.key() + ": " + e.what();
        r.error = e.what();
        worst = std::numeric_limits<double>::infinity();
    } catch (const std::exception& e) {
        r.error = e.what();
        worst = std::numeric_limits<double>::infinity();
    }
    r.params = {G.name(), seed, samples, hex(ctx.digest())};
    r.residual = worst;
    r.pass = worst <= r.tolerance;
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace

RunResult run(const SuiteConfig& config, int workers) {
    validate(config);
    const Group G = make_group(config.group);
    const std::set<std::string> selected(config.suites.begin(), config.suites.end());
    std::vector<const CheckSpec*> tasks;
    for (const auto& spec : check_registry())
        if (selected.count(spec.suite) && spec.applies(G)) tasks.push_back(&spec);

    std::vector<CheckReport> reports(tasks.size());
    std::vector<std::string> aborts(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) reports[i] = run_one(*tasks[i], G, config, aborts[i]);
    };
    if (workers <= 0) workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    workers = std::min<int>(workers, static_cast<int>(std::max<std::size_t>(1, tasks.size())));
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    RunResult out;
    out.checks = std::move(reports);
    for (const auto& a : aborts)
        if (!a.empty() && out.abort_reason.empty()) out.abort_reason = a;
    if (!out.abort_reason.empty())
        out.exit_status = 3;
    else if (std::any_of(out.checks.begin(), out.checks.end(), [](const CheckReport& r) { return !r.pass; }))
        out.exit_status = 1;
    return out;
}

std::string report_json(const SuiteConfig& config, const RunResult& result, bool with_runtime) {
    using nlohmann::ordered_json;
    ordered_json cfg;
    cfg["group"] = config.group;
    cfg["suites"] = config.suites;
    cfg["n_points"] = config.n_points;
    cfg["fd_step"] = config.fd_step;
    cfg["t_step"] = config.t_step;
    cfg["tol_overrides"] = config.tol_overrides;
    cfg["seed"] = config.seed;
    cfg["samples_per_check"] = config.samples_per_check;
    cfg["report_path"] = config.report_path;

    ordered_json conv = ordered_json::object();
    for (const auto& [name, sign] : convention_table()) conv[name] = sign;

    ordered_json checks = ordered_json::array();
    int passed = 0;
    for (const auto& r : result.checks) {
        ordered_json c;
        c["suite"] = r.suite;
        c["check_name"] = r.check_name;
        c["anchor"] = r.anchor;
        c["params"] = {{"group", r.params.group},
                       {"seed", r.params.seed},
                       {"samples", r.params.samples},
                       {"point_digest", r.params.point_digest}};
        if (std::isfinite(r.residual))
            c["residual"] = r.residual;
        else
            c["residual"] = "inf";
        c["tolerance"] = r.tolerance;
        c["pass"] = r.pass;
        if (with_runtime) c["runtime_ms"] = r.runtime_ms;
        if (!r.error.empty()) c["error"] = r.error;
        checks.push_back(c);
        passed += r.pass ? 1 : 0;
    }
    ordered_json doc;
    doc["version"] = "1.0";
    doc["config_echo"] = cfg;
    doc["convention_table"] = conv;
    doc["checks"] = checks;
    const int total = static_cast<int>(result.checks.size());
    doc["summary"] = {{"total", total}, {"passed", passed}, {"failed", total - passed}, {"exit_status", result.exit_status}};
    if (!result.abort_reason.empty()) doc["summary"]["abort"] = result.abort_reason;
    return doc.dump(2);
}

}  // namespace atiyah
