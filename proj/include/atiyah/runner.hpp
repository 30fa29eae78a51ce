#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "atiyah/lifting.hpp"

namespace atiyah {

const std::vector<std::string>& suite_names();

struct SuiteConfig {
    std::string group = "su2";
    std::vector<std::string> suites = suite_names();
    int n_points = 201;
    double fd_step = 1e-3;
    double t_step = 1e-5;
    std::map<std::string, double> tol_overrides;
    std::uint64_t seed = 42;
    int samples_per_check = 4;
    std::string report_path;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Convention mismatch detected by an oracle; the run stops.
struct OracleAbort : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Throws ConfigError.
void validate(const SuiteConfig& config);

struct CheckParams {
    std::string group;
    std::uint64_t seed = 0;
    int samples = 0;
    std::string point_digest;
};

struct CheckReport {
    std::string suite;
    std::string check_name;  // "suite.name", also the tolerance key
    std::string anchor;
    CheckParams params;
    double residual = 0;
    double tolerance = 0;
    bool pass = false;
    double runtime_ms = 0;
    std::string error;  // exception text when a sample threw
};

// Per-sample state handed to a check.
class CheckContext {
public:
    CheckContext(const Group& G, std::uint64_t seed, Numerics num) : group(G), rng(seed), num(num) {}

    const Group& group;
    Sampler rng;
    Numerics num;

    // Sampled base point, folded into the report digest.
    Mat point(double scale = 1.0);
    std::uint64_t digest() const { return digest_; }

private:
    std::uint64_t digest_ = 1469598103934665603ULL;
};

struct CheckSpec {
    std::string suite;
    std::string name;
    std::string anchor;
    double tolerance = 1e-6;
    // upper bound on samples for expensive or deterministic checks
    int max_samples = 1 << 20;
    std::function<bool(const Group&)> applies;
    std::function<double(CheckContext&)> sample;

    std::string key() const { return suite + "." + name; }
};

const std::vector<CheckSpec>& check_registry();

struct RunResult {
    std::vector<CheckReport> checks;
    int exit_status = 0;
    std::string abort_reason;
};

// Runs the selected suites on a worker pool. Deterministic given the seed.
RunResult run(const SuiteConfig& config, int workers = 0);

// JSON report text; runtime fields are dropped when with_runtime is false.
std::string report_json(const SuiteConfig& config, const RunResult& result, bool with_runtime = true);

}  // namespace atiyah
