// One PASS/FAIL line per acceptance criterion, tolerances pinned here.

#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

#include "atiyah/runner.hpp"

using namespace atiyah;

namespace {

struct Timed {
    RunResult result;
    double seconds = 0;
};

Timed timed_run(const std::string& group, std::vector<std::string> suites, int samples, std::uint64_t seed = 42) {
    SuiteConfig cfg;
    cfg.group = group;
    cfg.suites = std::move(suites);
    cfg.samples_per_check = samples;
    cfg.seed = seed;
    const auto t0 = std::chrono::steady_clock::now();
    Timed out{run(cfg), 0};
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

const CheckReport* find(const RunResult& r, const std::string& key) {
    for (const auto& c : r.checks)
        if (c.check_name == key) return &c;
    return nullptr;
}

struct Requirement {
    const RunResult* run;
    std::string key;
    double tol;
    int min_samples = 1;
};

int failures = 0;

void criterion(int n, const std::string& title, const std::vector<Requirement>& reqs, bool extra = true,
               const std::string& note = "") {
    bool ok = extra;
    std::ostringstream detail;
    for (const auto& q : reqs) {
        const CheckReport* c = find(*q.run, q.key);
        char buf[160];
        if (!c) {
            ok = false;
            std::snprintf(buf, sizeof buf, " %s=missing", q.key.c_str());
        } else {
            const bool good = c->residual < q.tol && c->params.samples >= q.min_samples;
            ok = ok && good;
            std::snprintf(buf, sizeof buf, " %s=%.2e(<%.0e,n=%d)", q.key.c_str(), c->residual, q.tol, c->params.samples);
        }
        detail << buf;
    }
    if (!ok) ++failures;
    std::printf("%s criterion %2d: %s;%s%s%s\n", ok ? "PASS" : "FAIL", n, title.c_str(), detail.str().c_str(),
                note.empty() ? "" : " ", note.c_str());
    std::fflush(stdout);
}

}  // namespace

int main() {
    const Timed alg_su2 = timed_run("su2", {"algebroid"}, 8);
    const Timed alg_heis = timed_run("heisenberg3", {"algebroid"}, 8);
    const double t1 = alg_su2.seconds + alg_heis.seconds;
    char note[64];
    std::snprintf(note, sizeof note, "runtime %.1f s", t1);
    criterion(1, "algebroid axioms on su2 and heisenberg3",
              {{&alg_su2.result, "algebroid.jacobi", 1e-5, 8},
               {&alg_su2.result, "algebroid.leibniz", 1e-5, 8},
               {&alg_heis.result, "algebroid.jacobi", 1e-5, 8},
               {&alg_heis.result, "algebroid.leibniz", 1e-5, 8}},
              t1 < 30, note);

    const Timed su2 = timed_run("su2", {"lifting", "bott", "fusion", "courant"}, 8);
    criterion(2, "d_G varpi = a^* eta_G on su2",
              {{&su2.result, "lifting.d3form", 1e-4, 5}, {&su2.result, "lifting.d1form", 1e-5, 5}});

    const Timed so3 = timed_run("so3", {"lifting"}, 20);
    criterion(3, "varpi closed form on so3",
              {{&so3.result, "lifting.varpi_generators", 1e-8, 20}, {&so3.result, "lifting.varpi_spot", 1e-8}});

    const Timed heis = timed_run("heisenberg3", {"lifting"}, 4);
    criterion(4, "lifting mechanism on heisenberg3",
              {{&heis.result, "lifting.poincare_primitive", 1e-6},
               {&heis.result, "lifting.lifted_jacobi", 1e-4},
               {&heis.result, "lifting.obstruction", 1e-4}});

    criterion(5, "cocycle suite at n_points = 201",
              {{&su2.result, "lifting.sigma_value", 1e-7}, {&su2.result, "lifting.dj_identities", 1e-5}});

    criterion(6, "fusion on su2",
              {{&su2.result, "fusion.mult", 1e-4, 8}, {&su2.result, "fusion.lambda", 1e-4}});

    criterion(7, "Courant isotropy, action bracket and eta twist",
              {{&su2.result, "courant.isotropy", 1e-4},
               {&su2.result, "courant.action_bracket", 1e-4},
               {&su2.result, "courant.eta_twist", 1e-4}});

    criterion(8, "Bott / Chern-Simons suite under one convention table",
              {{&su2.result, "bott.stokes_k1", 1e-4},
               {&su2.result, "bott.stokes_k2", 1e-4},
               {&su2.result, "bott.cs_gauge", 1e-4},
               {&su2.result, "bott.transgression", 1e-4},
               {&su2.result, "bott.csform", 1e-4},
               {&su2.result, "bott.csform_equivariant", 1e-4},
               {&su2.result, "bott.q_reparametrization", 1e-6},
               {&su2.result, "bott.q_inversion", 1e-6},
               {&su2.result, "bott.q_concatenation", 1e-4},
               {&su2.result, "bott.upsilon_cs", 1e-6},
               {&su2.result, "bott.gauge_invariance", 1e-6}});

    criterion(9, "equivariant varpi^p and Pressley-Segal forms",
              {{&su2.result, "bott.dG_varpi_p", 1e-3},
               {&su2.result, "bott.varpi_p_quadratic", 1e-5},
               {&su2.result, "bott.pressley_segal", 1e-6},
               {&su2.result, "bott.ce_closed", 1e-4}});

    const Timed qham = timed_run("su2", {"qham"}, 4);
    std::snprintf(note, sizeof note, "runtime %.1f s", qham.seconds);
    criterion(10, "kernel on su2 conjugacy classes",
              {{&qham.result, "qham.ghjw_oracle", 1e-4},
               {&qham.result, "qham.kernel_dimension", 0.5},
               {&qham.result, "qham.generator_rows", 1e-5},
               {&qham.result, "qham.kernel_constant", 1e-4}},
              qham.result.exit_status == 0 && qham.seconds < 120, note);

    const Timed torus = timed_run("torus2", suite_names(), 4);
    int torus_failed = 0;
    for (const auto& c : torus.result.checks) torus_failed += c.pass ? 0 : 1;
    std::snprintf(note, sizeof note, "%zu checks, %d failed", torus.result.checks.size(), torus_failed);
    criterion(11, "abelian degeneration on torus2",
              {{&torus.result, "algebroid.flat_curvature", 1e-10, 4},
               {&torus.result, "forms.eta_vanishes", 1e-10, 4},
               {&torus.result, "courant.twist_vanishes", 1e-10, 4}},
              torus.result.exit_status == 0, note);

    SuiteConfig cfg;
    cfg.seed = 42;
    const std::string a = report_json(cfg, run(cfg), false);
    const std::string b = report_json(cfg, run(cfg, 1), false);
    criterion(12, "seed 42 runs are identical", {}, a == b && !a.empty(),
              a == b ? "reports byte-identical" : "reports differ");

    return failures == 0 ? 0 : 1;
}
