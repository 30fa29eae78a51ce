#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "atiyah/lifting.hpp"

using namespace atiyah;

namespace {

DeRham random_one_form(const Group& G, Sampler& s) {
    const Vec c = s.vector(G.dim()), d = s.vector(G.dim());
    const Group* gp = &G;
    return {1, [gp, c, d](const GroupFrames::Point& p, const std::vector<Vec>& xs) {
                return c.dot(xs[0]) + d.dot(gp->ad_inv(p[0], xs[0]));
            }};
}

// mixes theta^L, theta^R with a point-dependent coefficient
DeRham random_two_form(const Group& G, Sampler& s) {
    const Vec c = s.vector(G.dim());
    const Group* gp = &G;
    const DeRham base = dot_wedge(G, maurer_cartan_form(G, Side::left), maurer_cartan_form(G, Side::right));
    return {2, [gp, c, base](const GroupFrames::Point& p, const std::vector<Vec>& xs) {
                return (1.0 + 0.3 * c.dot(gp->ad(p[0], c))) * base.eval(p, xs);
            }};
}

}  // namespace

TEST_CASE("Cartan 3-form oracles") {
    const Group G = make_su2();
    const Mat e = G.identity();
    CHECK(std::abs(cartan_eta_value(G, Vec::Unit(3, 0), Vec::Unit(3, 1), Vec::Unit(3, 2)) - 0.5) < 1e-14);
    CHECK(std::abs(cartan_eta(G).eval({e}, {Vec::Unit(3, 0), Vec::Unit(3, 1), Vec::Unit(3, 2)}) - 0.5) < 1e-14);
    Sampler s(81);
    const Vec x = s.vector(3), v = s.vector(3);
    const auto etaG = cartan_eta_equivariant(G, x);
    CHECK(std::abs(etaG.at(1).eval({e}, {v}) + v.dot(x)) < 1e-14);

    // a^* eta on generators
    const Mat g = s.point(G);
    const Vec x1 = s.vector(3), x2 = s.vector(3), x3 = s.vector(3);
    const AlgebroidForm aeta = pullback_a(cartan_eta(G));
    const Vec v1 = G.ad(g, x1) - x1, v2 = G.ad(g, x2) - x2, v3 = G.ad(g, x3) - x3;
    CHECK(std::abs(aeta.eval(g, {generator(G, x1), generator(G, x2), generator(G, x3)}) - 0.5 * v1.dot(G.bracket(v2, v3))) <
          1e-12);

    const Group T = make_torus2();
    CHECK(std::abs(cartan_eta(T).eval({s.point(T)}, {s.vector(2), s.vector(2), s.vector(2)})) == 0.0);
}

TEST_CASE("d_G eta_G = 0") {
    const Group G = make_su2();
    const GroupFrames calc(G, 1, FdConfig{1e-3, 1e-5});
    Sampler s(82);
    for (int k = 0; k < 3; ++k) {
        const Vec x = s.vector(3);
        const auto d = equivariant_differential(calc, cartan_eta_equivariant(G, x), x);
        const GroupFrames::Point p{s.point(G)};
        CHECK(std::abs(d.at(2).eval(p, {s.vector(3), s.vector(3)})) < 1e-6);
        CHECK(std::abs(d.at(0).eval(p, {})) < 1e-12);
    }
    // on G x G the 4-form dη is not vacuous
    const GroupFrames calc2(G, 2, FdConfig{1e-3, 1e-5});
    const DeRham eta_m = pullback(cartan_eta(G), multiplication_map(G));
    const GroupFrames::Point p{s.point(G), s.point(G)};
    CHECK(std::abs(exterior_derivative(calc2, eta_m).eval(p, {s.vector(6), s.vector(6), s.vector(6), s.vector(6)})) <
          1e-5);
}

TEST_CASE("d squared vanishes") {
    const Group G = make_su2();
    Sampler s(83);
    const FdConfig fd{1e-3, 1e-5};
    const AlgebroidCalc calc(G, fd);
    const Mat g = s.point(G);
    const AlgebroidForm w = varpi_form(G);
    const Section a = s.section(G), b = s.section(G), c = s.section(G);
    const AlgebroidForm one = contract(w, s.section(G));
    CHECK(std::abs(exterior_derivative(calc, exterior_derivative(calc, one)).eval(g, {a, b, c})) < 1e-4);

    const GroupFrames frames(G, 2, fd);
    const DeRham f = pullback(random_one_form(G, s), multiplication_map(G));
    const GroupFrames::Point p{s.point(G), s.point(G)};
    CHECK(std::abs(exterior_derivative(frames, exterior_derivative(frames, f)).eval(p, {s.vector(6), s.vector(6), s.vector(6)})) <
          1e-5);
}

TEST_CASE("Cartan formula and basic forms") {
    const Group G = make_su2();
    Sampler s(84);
    const AlgebroidCalc calc(G, FdConfig{1e-3, 1e-5});
    const Mat g = s.point(G);
    const AlgebroidForm w = varpi_form(G);
    const Section X = s.section(G), a = s.section(G), b = s.section(G);
    const double magic = lie_derivative(calc, w, X).eval(g, {a, b});
    const double direct = lie_derivative_direct(calc, w, X).eval(g, {a, b});
    CHECK(std::abs(direct) > 1e-2);
    CHECK(std::abs(magic - direct) < 1e-5);

    const AlgebroidForm basic = pullback_a(random_two_form(G, s));
    const Section l = s.l_section(G);
    CHECK(std::abs(basic.eval(g, {l, a})) < 1e-14);
    CHECK(std::abs(lie_derivative_direct(calc, basic, l).eval(g, {a, b})) < 1e-5);

    const auto tr = pullback_a(maurer_cartan_form(G, Side::right));
    const auto tl = pullback_a(maurer_cartan_form(G, Side::left));
    CHECK((tr.eval(g, {a}) - a.v(g)).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((tl.eval(g, {a}) - G.ad_inv(g, a.v(g))).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("a^* is a cochain map") {
    const Group G = make_su2();
    Sampler s(85);
    const FdConfig fd{1e-3, 1e-5};
    const AlgebroidCalc calc(G, fd);
    const GroupFrames frames(G, 1, fd);
    const Mat g = s.point(G);
    const Section a = s.section(G), b = s.section(G), c = s.section(G);
    const DeRham one = random_one_form(G, s);
    const double l1 = exterior_derivative(calc, pullback_a(one)).eval(g, {a, b});
    const double r1 = pullback_a(exterior_derivative(frames, one)).eval(g, {a, b});
    CHECK(std::abs(l1 - r1) < 1e-5);
    const DeRham two = random_two_form(G, s);
    const double l2 = exterior_derivative(calc, pullback_a(two)).eval(g, {a, b, c});
    const double r2 = pullback_a(exterior_derivative(frames, two)).eval(g, {a, b, c});
    CHECK(std::abs(l2) > 1e-3);
    CHECK(std::abs(l2 - r2) < 1e-5);
}

TEST_CASE("square of the equivariant differential") {
    const Group G = make_su2();
    Sampler s(86);
    const AlgebroidCalc calc(G, FdConfig{1e-3, 1e-5});
    const Mat g = s.point(G);
    const Vec x = s.vector(3);
    const Section a = s.section(G), b = s.section(G);
    MixedForm<AlgebroidCalc, double> phi;
    phi.add(pullback_a(random_one_form(G, s)));
    const auto dd = equivariant_differential(calc, equivariant_differential(calc, phi, x), x);
    const Section xa = generator(G, x);
    const double l1 = lie_derivative_direct(calc, phi.at(1), xa).eval(g, {a});
    CHECK(std::abs(l1) > 1e-2);
    CHECK(std::abs(dd.at(1).eval(g, {a}) + l1) < 1e-5);

    // x = 0 gives plain d
    MixedForm<AlgebroidCalc, double> w;
    w.add(varpi_form(G));
    const auto d0 = equivariant_differential(calc, w, Vec::Zero(3));
    CHECK(std::abs(d0.at(1).eval(g, {a})) == 0.0);

    // abelian: d_G varpi = a^* eta_G has only the linear part
    const Group T = make_torus2();
    const AlgebroidCalc tcalc(T);
    MixedForm<AlgebroidCalc, double> wt;
    wt.add(varpi_form(T));
    Sampler st(87);
    const Mat h = st.point(T);
    const Section u = st.section(T), v = st.section(T), z = st.section(T);
    const Vec xt = st.vector(2);
    const auto dt = equivariant_differential(tcalc, wt, xt);
    CHECK(std::abs(dt.at(3).eval(h, {u, v, z})) < 1e-8);
    CHECK(std::abs(dt.at(1).eval(h, {u}) + u.v(h).dot(xt)) < 1e-10);
}
