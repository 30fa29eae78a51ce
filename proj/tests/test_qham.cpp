#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "atiyah/qham.hpp"

using namespace atiyah;

namespace {

double maxabs(const Vec& v) { return v.cwiseAbs().maxCoeff(); }

// a pull-back section along the inclusion read as a section of A
Section as_section(const PullbackSection& s) {
    Section out;
    out.xi = s.xi;
    out.dxi = s.dxi;
    out.v = s.X;
    out.smooth = true;
    return out;
}

Mat on_class(const Group& G, const Vec& a, Sampler& s) { return class_point(G, a, s.point(G)).m; }

const Vec quarter = (M_PI / 2) * Vec::Unit(3, 2);
const Vec equatorial = M_PI * Vec::Unit(3, 2);

}  // namespace

TEST_CASE("equivariant maps and pull-back sections") {
    const Group G = make_su2();
    Sampler s(71);
    for (const auto& phi : {inclusion_map(G), square_map(G)}) {
        const Mat k = s.point(G), m = on_class(G, quarter, s);
        CHECK(phi.equivariance_residual(k, m) < 1e-12);
        const PullbackSection a = sample_pullback_section(phi, s), b = sample_pullback_section(phi, s);
        CHECK(pullback_seam_residual(phi, a, m) < 1e-9);
        const PullbackSection gen = pullback_generator(G, s.vector(3));
        CHECK(pullback_seam_residual(phi, gen, m) < 1e-9);
        // the anchor of a sampled section is tangent to the class
        const Vec X = a.X(m);
        CHECK(maxabs(G.ad(m, fundamental_label(G, m, X)) - fundamental_label(G, m, X) - X) < 1e-10);
        const EquivariantMap fine{&G, phi.phi, FdConfig{1e-3, 1e-5}};
        const PullbackSection c = pullback_bracket(fine, a, b);
        CHECK(pullback_seam_residual(fine, c, m) < 1e-6);
    }
}

TEST_CASE("pull-back bracket: generators and Jacobi") {
    const Group G = make_su2();
    Sampler s(72);
    const EquivariantMap phi = square_map(G, FdConfig{1e-3, 1e-5});
    const Mat m = on_class(G, quarter, s);
    const Vec x = s.vector(3), y = s.vector(3);
    const PullbackSection b = pullback_bracket(phi, pullback_generator(G, x), pullback_generator(G, y));
    const PullbackSection e = pullback_generator(G, G.bracket(x, y));
    CHECK(maxabs(b.xi(m, 0.4) - e.xi(m, 0.4)) < 1e-8);
    CHECK(maxabs(b.X(m) - e.X(m)) < 1e-7);

    const PullbackSection p = sample_pullback_section(phi, s), q = sample_pullback_section(phi, s),
                          r = sample_pullback_section(phi, s);
    const PullbackSection j1 = pullback_bracket(phi, p, pullback_bracket(phi, q, r));
    const PullbackSection j2 = pullback_bracket(phi, q, pullback_bracket(phi, r, p));
    const PullbackSection j3 = pullback_bracket(phi, r, pullback_bracket(phi, p, q));
    for (double t : {0.2, 0.7}) CHECK(maxabs(j1.xi(m, t) + j2.xi(m, t) + j3.xi(m, t)) < 1e-4);
    CHECK(maxabs(j1.X(m) + j2.X(m) + j3.X(m)) < 1e-4);
}

TEST_CASE("pull-back of forms") {
    const Group G = make_su2();
    Sampler s(73);
    const EquivariantMap id = inclusion_map(G, FdConfig{1e-3, 1e-5});
    const Mat m = on_class(G, quarter, s);
    const PullbackSection a = sample_pullback_section(id, s), b = sample_pullback_section(id, s),
                          c = sample_pullback_section(id, s);
    const AlgebroidForm w = varpi_form(G);
    const PullbackForm wm = pullback_phi(id, w);
    CHECK(std::abs(wm.eval(m, {a, b}) - w.eval(m, {as_section(a), as_section(b)})) < 1e-12);

    // Phi^! d = d Phi^!
    const PullbackCalc mcalc{id};
    const AlgebroidCalc gcalc(G, id.fd);
    const double lhs = exterior_derivative(mcalc, wm).eval(m, {a, b, c});
    const double rhs = exterior_derivative(gcalc, w).eval(m, {as_section(a), as_section(b), as_section(c)});
    CHECK(std::abs(lhs - rhs) < 1e-4);

    // pulled-back d_G varpi = a_M^* Phi^* eta_G
    const Vec x = s.vector(3);
    MixedForm<PullbackCalc, double> wmix;
    wmix.add(wm);
    const auto dG = equivariant_differential(mcalc, wmix, x);
    const Vec X = a.X(m);
    const double eta1 = -0.5 * G.dot(G.ad_inv(m, X) + X, x);
    CHECK(std::abs(eta1) > 1e-2);
    CHECK(std::abs(dG.at(1).eval(m, {a}) - eta1) < 1e-5);
    // anchors span the 2-dimensional class, so a^* eta vanishes
    CHECK(std::abs(dG.at(3).eval(m, {a, b, c})) < 1e-4);
}

TEST_CASE("GHJW form and its sign oracle") {
    const Group G = make_su2();
    Sampler s(74);
    const MForm w = ghjw_omega(G);
    CHECK(std::abs(w.eval(G.identity(), {s.vector(3), s.vector(3)})) < 1e-15);
    const Mat g = G.exp(quarter);
    CHECK(std::abs(std::abs(w.eval(g, {Vec::Unit(3, 0), Vec::Unit(3, 1)})) - 1.0) < 1e-12);
    CHECK(std::abs(w.eval(g, {Vec::Unit(3, 0), Vec::Unit(3, 1)}) + varpi_generators(G, Vec::Unit(3, 0), Vec::Unit(3, 1), g)) <
          1e-12);
    // Ad of the equatorial class is an involution, so omega vanishes there
    CHECK(std::abs(w.eval(G.exp(equatorial), {Vec::Unit(3, 0), Vec::Unit(3, 1)})) < 1e-12);

    const EquivariantMap id = inclusion_map(G, FdConfig{1e-3, 1e-5});
    std::vector<Mat> points;
    std::vector<Vec> xs;
    for (int k = 0; k < 3; ++k) points.push_back(on_class(G, quarter, s));
    for (int k = 0; k < 3; ++k) xs.push_back(s.vector(3));
    Sampler s1(1), s2(1);
    CHECK(ghjw_oracle_residual(G, id, ghjw_omega(G, 1), points, xs, s1) < 1e-4);
    CHECK(ghjw_oracle_residual(G, id, ghjw_omega(G, -1), points, xs, s2) > 1e-2);
    CHECK(ghjw_sign(G, id, points, xs, s) == 1);
}

TEST_CASE("kernel theorem on su2 conjugacy classes") {
    const Group G = make_su2();
    Sampler s(75);
    const MForm w = ghjw_omega(G, 1);
    for (const Vec& a : {quarter, equatorial}) {
        const ClassPoint p = class_point(G, a, s.point(G));
        for (int n_max : {4, 6, 8}) {
            const auto basis = truncated_basis(G, p, n_max);
            CHECK(basis.size() == static_cast<std::size_t>(2 + 3 * (2 * n_max + 1)));
            for (const auto& b : basis) CHECK(basis_seam_residual(G, b, p.m) < 1e-10);
            for (double thr : {1e-7, 1e-8, 1e-9}) CHECK(gram_kernel(G, w, basis, p.m, thr).dimension == 3);
            const KernelReport r = gram_kernel(G, w, basis, p.m);
            CHECK(maxabs(r.gram + r.gram.transpose()) < 1e-10);
            for (int c = 0; c < r.dimension; ++c) CHECK(max_loop_derivative(basis, r.kernel.col(c), p.m) < 1e-4);
            for (int j = 0; j < 3; ++j) CHECK(maxabs(generator_row(G, w, basis, p.m, Vec::Unit(3, j))) < 1e-5);
        }
    }
}

TEST_CASE("Gram entries agree with the quadrature form") {
    const Group G = make_su2();
    Sampler s(76);
    const ClassPoint p = class_point(G, quarter, s.point(G));
    const auto basis = truncated_basis(G, p, 3);
    const Mat gram = kernel_gram(G, ghjw_omega(G), basis, p.m);
    const Numerics num{TimeGrid(2001), FdConfig{}};
    for (std::size_t i : {0UL, 3UL, 7UL})
        for (std::size_t j : {1UL, 4UL, 9UL}) {
            const double direct = varpi(G, basis[i].xi, basis[j].xi, p.m, num) +
                                  ghjw_omega(G).eval(p.m, {basis[i].label, basis[j].label});
            CHECK(std::abs(gram(i, j) - direct) < 1e-8);
        }
}

TEST_CASE("kernel on the torus and the degenerate Heisenberg form") {
    const Group T = make_torus2();
    Sampler s(77);
    const ClassPoint p = class_point(T, s.vector(2), T.identity());
    const auto basis = truncated_basis(T, p, 4);
    CHECK(basis.size() == static_cast<std::size_t>(2 * 9));
    CHECK(gram_kernel(T, ghjw_omega(T), basis, p.m).dimension == 2);

    const Group H = make_heisenberg3();
    const ClassPoint h = class_point(H, s.vector(3, 0.3), H.identity());
    CHECK_THROWS_AS(kernel_gram(H, ghjw_omega(H), truncated_basis(H, h, 2), h.m), std::domain_error);
}

TEST_CASE("projection onto A'") {
    const Group G = make_su2();
    Sampler s(78);
    const Mat g = s.point(G);
    const Section xi = s.section(G);
    const Section q = project_Aprime(G, xi);
    CHECK(maxabs(q.xi(g, 0.0)) == 0.0);
    CHECK(seam_residual(G, q, g) < 1e-12);
    const Vec x0 = xi.xi(g, 0.0);
    CHECK(maxabs(q.v(g) - xi.v(g) - (G.ad(g, x0) - x0)) < 1e-14);
    CHECK(maxabs(project_Aprime(G, generator(G, s.vector(3))).xi(g, 0.6)) == 0.0);
    const Section l = project_Aprime(G, s.l_section(G));
    CHECK(maxabs(project_Aprime(G, l).xi(g, 0.3) - l.xi(g, 0.3)) < 1e-15);

    // A' is closed under the bracket
    const Section b = bracket_A(G, q, project_Aprime(G, s.section(G)), FdConfig{1e-3, 1e-5});
    CHECK(maxabs(b.xi(g, 0.0)) < 1e-8);

    const EquivariantMap phi = square_map(G);
    const Mat m = on_class(G, quarter, s);
    const PullbackSection qm = project_Aprime(G, sample_pullback_section(phi, s));
    CHECK(maxabs(qm.xi(m, 0.0)) == 0.0);
    CHECK(pullback_seam_residual(phi, qm, m) < 1e-9);
}
