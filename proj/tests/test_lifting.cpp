#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "atiyah/lifting.hpp"

using namespace atiyah;

namespace {

double maxabs(const Vec& v) { return v.cwiseAbs().maxCoeff(); }

Section loop(int n, std::function<double(double)> f, std::function<double(double)> df, int axis) {
    Section s;
    s.xi = [n, f, axis](const Mat&, double t) -> Vec { return f(t) * Vec::Unit(n, axis); };
    s.dxi = [n, df, axis](const Mat&, double t) -> Vec { return df(t) * Vec::Unit(n, axis); };
    s.v = [n](const Mat&) -> Vec { return Vec::Zero(n); };
    return s;
}

const double two_pi = 2 * M_PI;

Section sin_loop(int n, int axis) {
    return loop(n, [](double t) { return std::sin(two_pi * t); }, [](double t) { return two_pi * std::cos(two_pi * t); },
                axis);
}
Section cos_loop(int n, int axis) {
    return loop(n, [](double t) { return std::cos(two_pi * t); }, [](double t) { return -two_pi * std::sin(two_pi * t); },
                axis);
}

GroupFn random_field(const Group& G, Sampler& s) {
    const Vec c = s.vector(G.dim()), d = s.vector(G.dim());
    const double k = s.normal();
    const Group* gp = &G;
    return [gp, c, d, k](const Mat& g) -> Vec { return c + k * gp->ad(g, d); };
}

}  // namespace

TEST_CASE("cocycle sigma oracles") {
    const Group G = make_su2();
    const Mat e = G.identity();
    CHECK(std::abs(sigma(G, sin_loop(3, 0), cos_loop(3, 0), e) + M_PI) < 1e-7);
    CHECK(std::abs(sigma(G, constant_loop(G, Vec::Unit(3, 1)), sin_loop(3, 0), e)) < 1e-14);
    Sampler s(21);
    const Mat g = s.point(G);
    const Section a = s.l_section(G), b = s.l_section(G);
    CHECK(std::abs(sigma(G, a, b, g) + sigma(G, b, a, g)) < 1e-8);
    const ExtendedLSection br = bracket_Lhat(G, split(G, sin_loop(3, 0)), split(G, cos_loop(3, 1)));
    CHECK(std::abs(br.scalar(e)) < 1e-12);
    CHECK(std::abs(br.scalar(e) + sigma(G, sin_loop(3, 0), cos_loop(3, 1), e)) < 1e-14);
}

TEST_CASE("dj identities") {
    const Group G = make_su2();
    Sampler s(22);
    const Numerics num{TimeGrid(201), FdConfig{1e-3, 1e-5}};
    const ConnectionFamily alpha = build_alpha(G);
    for (int k = 0; k < 3; ++k) {
        const Mat g = s.point(G);
        const Section xi = s.section(G), zeta = s.l_section(G);
        CHECK(std::abs(dtheta_j(alpha, xi, zeta, g) - dtheta_j_definitional(alpha, xi, zeta, g)) < 1e-5);

        const Section x1 = s.l_section(G), x2 = s.l_section(G), z = s.section(G);
        const double lhs = sigma_derivative(G, z, x1, x2, g, num);
        const double rhs = dj(G, z, bracket_A(G, x1, x2, num.fd), g, num);
        CHECK(std::abs(lhs - rhs) < 1e-5);
    }
}

TEST_CASE("varpi generators and so3 value") {
    const Group G = make_so3();
    const Mat g = G.exp(0.5 * M_PI * Vec::Unit(3, 2));
    CHECK(std::abs(varpi_generators(G, Vec::Unit(3, 0), Vec::Unit(3, 1), g) + 1.0) < 1e-13);
    CHECK(std::abs(varpi(G, generator(G, Vec::Unit(3, 0)), generator(G, Vec::Unit(3, 1)), g) + 1.0) < 1e-12);
    Sampler s(23);
    for (int k = 0; k < 5; ++k) {
        const Mat h = s.point(G);
        const Vec x = s.vector(3), y = s.vector(3);
        CHECK(std::abs(varpi(G, generator(G, x), generator(G, y), h) - varpi_generators(G, x, y, h)) < 1e-8);
    }
}

TEST_CASE("varpi antisymmetry, L-contraction and closed-form routes") {
    const Group G = make_su2();
    Sampler s(24);
    const Mat g = s.point(G);
    const Section a = s.section(G), b = s.section(G), l = s.l_section(G);
    CHECK(std::abs(varpi(G, a, b, g) + varpi(G, b, a, g)) < 1e-6);
    CHECK(std::abs(varpi(G, l, a, g) + dj(G, a, l, g)) < 1e-8);

    auto alpha0 = [&G](const Mat& q, const Vec& v) -> Vec { return 0.3 * G.ad(q, v) - 0.2 * v; };
    const ConnectionFamily alpha = build_alpha(G, alpha0);
    const DeRham q1 = q_alpha(alpha), q2 = q_alpha_closed(alpha);
    const Vec v = s.vector(3), w = s.vector(3);
    CHECK(std::abs(q1.eval({g}, {v, w}) - q2.eval({g}, {v, w})) < 1e-8);
    CHECK(std::abs(q_alpha_closed(build_alpha(G)).eval({g}, {v, w})) == 0.0);

    const AlgebroidForm bry = brylinski_form(alpha);
    const double lhs = bry.eval(g, {a, b});
    const double rhs = varpi(G, a, b, g) + q2.eval({g}, {a.v(g), b.v(g)});
    CHECK(std::abs(lhs - rhs) < 1e-6);
}

TEST_CASE("eta from connection data") {
    const Group G = make_su2();
    Sampler s(25);
    const Mat g = s.point(G);
    const std::vector<Vec> vs{s.vector(3), s.vector(3), s.vector(3)};
    const DeRham eta = cartan_eta(G);
    const double ref = cartan_eta_value(G, G.ad_inv(g, vs[0]), G.ad_inv(g, vs[1]), G.ad_inv(g, vs[2]));
    CHECK(std::abs(eta.eval({g}, vs) - ref) < 1e-12);
    CHECK(std::abs(eta.eval({G.identity()}, {Vec::Unit(3, 0), Vec::Unit(3, 1), Vec::Unit(3, 2)}) - 0.5) < 1e-14);
    CHECK(std::abs(eta_from_data(build_alpha(G)).eval({g}, vs) - ref) < 1e-5);

    auto alpha0 = [&G](const Mat& q, const Vec& v) -> Vec { return 0.4 * G.ad(q, v) + 0.1 * G.bracket(v, Vec::Unit(3, 0)); };
    const ConnectionFamily alpha = build_alpha(G, alpha0, {}, false);
    CHECK(std::abs(eta_from_data(alpha).eval({g}, vs) - eta_alpha(alpha).eval({g}, vs)) < 1e-5);
}

TEST_CASE("d varpi = a* eta and its equivariant extension") {
    const Group G = make_su2();
    Sampler s(26);
    const Numerics num{TimeGrid(201), FdConfig{1e-3, 1e-5}};
    const AlgebroidCalc calc(G, num.fd);
    const AlgebroidForm w = varpi_form(G, num);
    const AlgebroidForm dw = exterior_derivative(calc, w);
    const AlgebroidForm ae = pullback_a(cartan_eta(G));
    const Mat g = s.point(G);
    const Section a = s.section(G), b = s.section(G), c = s.section(G);
    CHECK(std::abs(dw.eval(g, {a, b, c}) - ae.eval(g, {a, b, c})) < 1e-4);

    const Vec x = s.vector(3);
    const double lhs = w.eval(g, {generator(G, x), a});
    const Vec v = a.v(g);
    CHECK(std::abs(lhs - 0.5 * G.dot(G.ad_inv(g, v) + v, x)) < 1e-6);
}

TEST_CASE("Heisenberg chart") {
    const Group H = make_heisenberg3();
    const HeisenbergChart chart{&H};
    Sampler s(27);
    const Vec y = s.vector(3);
    CHECK(maxabs(chart.coords(chart.point(y)) - y) < 1e-13);
    const Vec u = s.vector(3);
    const Mat g = chart.point(y);
    const Mat num = richardson([&](double h) -> Mat { return chart.point(y + h * u); }, 1e-4);
    CHECK(maxabs(H.algebra().vee(num * g.inverse()) - chart.tangent(y) * u) < 1e-9);
}

TEST_CASE("lifted bracket on the Heisenberg group") {
    const Group H = make_heisenberg3();
    Sampler s(28);
    const double k = 0.7;
    auto alpha0 = [k](const Mat& q, const Vec& v) -> Vec {
        return k * (q(0, 2) * v(0) * Vec::Unit(3, 1) + q(0, 1) * q(1, 2) * v(2) * Vec::Unit(3, 0));
    };
    const ConnectionFamily alpha = build_alpha(H, alpha0, {}, false);
    const FdConfig fd{1e-3, 1e-5};
    const DeRham mu = form_scale(eta_alpha(alpha, fd), -1.0);
    const DeRham omega = poincare_primitive(H, mu);

    const Mat g = s.point(H, 0.6);
    const std::vector<Vec> vs{s.vector(3), s.vector(3), s.vector(3)};
    const DeRham domega = exterior_derivative(GroupFrames(H, 1, fd), omega);
    CHECK(std::abs(domega.eval({g}, vs) - mu.eval({g}, vs)) < 1e-6);
    CHECK(std::abs(mu.eval({g}, vs)) > 1e-3);

    LiftContext ctx{&H, alpha, omega, Numerics{TimeGrid(201), fd}};
    const LiftedSection a = lift_field(H, random_field(H, s)), b = lift_field(H, random_field(H, s)),
                        c = lift_field(H, random_field(H, s));
    const Jacobiator J = lifted_jacobiator(ctx, a, b, c, g, 0.37);
    CHECK(std::abs(J.scalar) < 1e-4);
    CHECK(maxabs(J.body) < 1e-5);
    CHECK(maxabs(J.field) < 1e-6);

    LiftContext bad = ctx;
    bad.omega = scalar_zero<GroupFrames>(2);
    const Jacobiator J0 = lifted_jacobiator(bad, a, b, c, g, 0.37);
    const double pairing = obstruction_pairing(bad, a.field(g), b.field(g), c.field(g), g);
    MESSAGE("jacobiator with omega = 0: " << J0.scalar << " pairing " << pairing);
    CHECK(std::abs(pairing) > 1e-3);
    CHECK(std::abs(J0.scalar - pairing) < 1e-4);
}

TEST_CASE("equivariant generator condition") {
    const Group H = make_heisenberg3();
    Sampler s(29);
    const ConnectionFamily alpha = build_alpha(H);
    const DeRham zero = scalar_zero<GroupFrames>(2);
    auto phi = [](const Vec& x, const Mat& g) { return -(x(0) * g(0, 1) + x(1) * g(1, 2)); };
    for (int k = 0; k < 3; ++k) {
        const Mat g = s.point(H);
        const Vec x = s.vector(3), v = s.vector(3);
        CHECK(std::abs(equivariant_generator_residual(alpha, zero, phi, x, g, v)) < 1e-8);
    }
}

TEST_CASE("change of splitting data") {
    const Group G = make_su2();
    Sampler s(30);
    SplittingChange ch;
    ch.alpha = build_alpha(G);
    const Vec b0 = 0.3 * s.vector(3), bd = 0.3 * s.vector(3);
    const Group* gp = &G;
    ch.b = [gp, b0, bd](const Mat& g, double t) -> Vec { return std::cos(two_pi * t) * b0 + gp->ad(g, bd); };
    for (int i = 0; i < 3; ++i) ch.lambda.push_back(scaled(s.l_section(G), 0.3));

    const Numerics num{TimeGrid(101), FdConfig{1e-3, 1e-5}};
    const Mat g = s.point(G);
    const std::vector<Vec> vs{s.vector(3), s.vector(3), s.vector(3)};
    const double lhs = eta_changed(ch, num).eval({g}, vs) - eta_from_data(ch.alpha, num).eval({g}, vs);
    const double rhs = exterior_derivative(GroupFrames(G, 1, num.fd), gamma_precursor(ch, num)).eval({g}, vs);
    MESSAGE("eta' - eta = " << lhs << ", d gamma = " << rhs);
    CHECK(std::abs(lhs) > 1e-3);
    CHECK(std::abs(lhs - rhs) < 1e-4);

    SplittingChange none = ch;
    none.b = [](const Mat&, double) -> Vec { return Vec::Zero(3); };
    none.lambda = {zero_section(G), zero_section(G), zero_section(G)};
    CHECK(std::abs(gamma_precursor(none, num).eval({g}, {vs[0], vs[1]})) < 1e-14);
}
