#include "atiyah/lifting.hpp"

#include "atiyah/quadrature.hpp"

namespace atiyah {

namespace {

double pairing_dot_first(const Group& G, const Section& a, const Section& b, const Mat& g, const Numerics& num) {
    return integrate_01(
        [&](double t) { return G.dot(extend_derivative(G, a, g, t, num.fd), b.xi(g, t)); }, num.grid);
}

GroupFn constant_field(const Vec& v) {
    return [v](const Mat&) { return v; };
}

Section l_section_from(int n, Profile xi) {
    Section s;
    s.xi = std::move(xi);
    s.v = [n](const Mat&) -> Vec { return Vec::Zero(n); };
    return s;
}

double wedge11(double a_vw, double a_wv) { return a_vw - a_wv; }

}  // namespace

double sigma(const Group& G, const Section& a, const Section& b, const Mat& g, const Numerics& num) {
    return -pairing_dot_first(G, a, b, g, num);
}

double dj(const Group& G, const Section& xi, const Section& zeta, const Mat& g, const Numerics& num) {
    return pairing_dot_first(G, xi, zeta, g, num);
}

double sigma_derivative(const Group& G, const Section& zeta, const Section& xi1, const Section& xi2, const Mat& g,
                        const Numerics& num) {
    double r = directional_derivative(G, [&](const Mat& q) { return sigma(G, xi1, xi2, q, num); }, g, zeta.v(g),
                                      num.fd.h);
    r -= sigma(G, bracket_A(G, zeta, xi1, num.fd), xi2, g, num);
    r -= sigma(G, xi1, bracket_A(G, zeta, xi2, num.fd), g, num);
    return r;
}

ExtendedLSection split(const Group&, const Section& zeta) {
    return {zeta, [](const Mat&) { return 0.0; }};
}

ExtendedLSection central(const Group& G, ScalarFn s) { return {zero_section(G), std::move(s)}; }

ExtendedLSection bracket_Lhat(const Group& G, const ExtendedLSection& a, const ExtendedLSection& b,
                              const Numerics& num) {
    const Group* gp = &G;
    ExtendedLSection out;
    out.body = bracket_A(G, a.body, b.body, num.fd);
    out.scalar = [gp, a, b, num](const Mat& g) { return pairing_dot_first(*gp, a.body, b.body, g, num); };
    return out;
}

ExtendedLSection nabla_hat(const Group& G, const Section& xi, const ExtendedLSection& b, const Numerics& num) {
    const Group* gp = &G;
    ExtendedLSection out;
    out.body = bracket_A(G, xi, b.body, num.fd);
    out.scalar = [gp, xi, b, num](const Mat& g) {
        return directional_derivative(*gp, b.scalar, g, xi.v(g), num.fd.h) + pairing_dot_first(*gp, xi, b.body, g, num);
    };
    return out;
}

double dtheta_j(const ConnectionFamily& alpha, const Section& xi, const Section& zeta, const Mat& g,
                const Numerics& num) {
    const Group& G = *alpha.group;
    const Vec v = xi.v(g);
    return -integrate_01([&](double t) { return G.dot(alpha.alpha_dot(t, g, v), zeta.xi(g, t)); }, num.grid);
}

double dtheta_j_definitional(const ConnectionFamily& alpha, const Section& xi, const Section& zeta, const Mat& g,
                             const Numerics& num) {
    const Group& G = *alpha.group;
    return dj(G, xi, zeta, g, num) + sigma(G, connection_apply(alpha, xi), zeta, g, num);
}

double varpi(const Group& G, const Section& xi, const Section& zeta, const Mat& g, const Numerics& num) {
    const Vec vx = xi.v(g), vz = zeta.v(g);
    return pairing_dot_first(G, xi, zeta, g, num) - 0.5 * G.dot(vx, vz) - G.dot(G.ad(g, xi.xi(g, 0.0)), vz);
}

AlgebroidForm varpi_form(const Group& G, const Numerics& num) {
    const Group* gp = &G;
    return {2, [gp, num](const Mat& g, const std::vector<Section>& xs) { return varpi(*gp, xs[0], xs[1], g, num); }};
}

double varpi_generators(const Group& G, const Vec& x, const Vec& y, const Mat& g) {
    return 0.5 * G.dot(x, G.ad(g, y) - G.ad_inv(g, y));
}

AlgebroidForm brylinski_form(const ConnectionFamily& alpha, const Numerics& num) {
    return {2, [alpha, num](const Mat& g, const std::vector<Section>& xs) {
                const Group& G = *alpha.group;
                const Section tx = connection_apply(alpha, xs[0]);
                const Section tz = connection_apply(alpha, xs[1]);
                return dj(G, xs[0], tz, g, num) - dj(G, xs[1], tx, g, num) + sigma(G, tx, tz, g, num);
            }};
}

DeRham q_alpha(const ConnectionFamily& alpha, const Numerics& num) {
    return {2, [alpha, num](const GroupFrames::Point& p, const std::vector<Vec>& xs) {
                const Group& G = *alpha.group;
                const Mat& g = p[0];
                const Vec &v = xs[0], &w = xs[1];
                const Vec a0v = alpha.at_integer(0, g, v), a0w = alpha.at_integer(0, g, w);
                double q = 0.5 * wedge11(G.dot(G.ad_inv(g, v), a0w), G.dot(G.ad_inv(g, w), a0v));
                q += 0.5 * integrate_01(
                               [&](double t) {
                                   return wedge11(G.dot(alpha.alpha(t, g, v), alpha.alpha_dot(t, g, w)),
                                                  G.dot(alpha.alpha(t, g, w), alpha.alpha_dot(t, g, v)));
                               },
                               num.grid);
                return q;
            }};
}

DeRham q_alpha_closed(const ConnectionFamily& alpha) {
    return {2, [alpha](const GroupFrames::Point& p, const std::vector<Vec>& xs) {
                const Group& G = *alpha.group;
                const Mat& g = p[0];
                const Vec &v = xs[0], &w = xs[1];
                const Vec a0v = alpha.at_integer(0, g, v), a0w = alpha.at_integer(0, g, w);
                const Vec sv = G.ad_inv(g, v) + v, sw = G.ad_inv(g, w) + w;
                return 0.5 * wedge11(G.dot(sv, a0w), G.dot(sw, a0v)) +
                       0.5 * wedge11(G.dot(a0v, G.ad(g, a0w)), G.dot(a0w, G.ad(g, a0v)));
            }};
}

DeRham eta_from_data(const ConnectionFamily& alpha, const Numerics& num) {
    return {3, [alpha, num](const GroupFrames::Point& p, const std::vector<Vec>& xs) {
                const Group& G = *alpha.group;
                const Mat& g = p[0];
                double total = 0;
                for (int c = 0; c < 3; ++c) {
                    const Vec& a = xs[c];
                    const Vec& b = xs[(c + 1) % 3];
                    const Vec& d = xs[(c + 2) % 3];
                    total += integrate_01(
                        [&](double t) {
                            const Vec ad = alpha.alpha_dot(t, g, a);
                            if (ad.cwiseAbs().maxCoeff() == 0.0) return 0.0;
                            return G.dot(ad, curvature_F(alpha, g, t, b, d, num.fd));
                        },
                        num.grid);
                }
                return total;
            }};
}

DeRham eta_alpha(const ConnectionFamily& alpha, const FdConfig& fd) {
    const Group& G = *alpha.group;
    return form_sum(cartan_eta(G), exterior_derivative(GroupFrames(G, 1, fd), q_alpha_closed(alpha)));
}

Section horizontal(const ConnectionFamily& alpha, GroupFn X) {
    Section s;
    s.xi = [alpha, X](const Mat& g, double t) -> Vec { return -alpha.alpha(t, g, X(g)); };
    s.dxi = [alpha, X](const Mat& g, double t) -> Vec { return -alpha.alpha_dot(t, g, X(g)); };
    s.v = X;
    return s;
}

GroupFn field_bracket(const Group& G, GroupFn X, GroupFn Y, const FdConfig& fd) {
    const Group* gp = &G;
    return [gp, X, Y, fd](const Mat& g) -> Vec {
        const Vec x = X(g), y = Y(g);
        return -gp->bracket(x, y) + directional_derivative(*gp, Y, g, x, fd.h) -
               directional_derivative(*gp, X, g, y, fd.h);
    };
}

LiftedSection lift_field(const Group&, GroupFn X) { return {Section{}, ScalarFn{}, std::move(X)}; }

LiftedSection lift_body(const Group& G, const Section& zeta, ScalarFn s) {
    return {zeta, std::move(s), constant_field(Vec::Zero(G.dim()))};
}

LiftedSection lifted_bracket(const LiftContext& ctx, const LiftedSection& a, const LiftedSection& b) {
    const Group& G = *ctx.group;
    const Group* gp = &G;
    const Numerics num = ctx.num;
    const ConnectionFamily alpha = ctx.alpha;
    const bool ba = static_cast<bool>(a.body.xi), bb = static_cast<bool>(b.body.xi);

    const Section Ha = horizontal(alpha, a.field), Hb = horizontal(alpha, b.field);
    Section hz, zh, zz;
    if (bb) hz = bracket_A(G, Ha, b.body, num.fd);
    if (ba) zh = bracket_A(G, Hb, a.body, num.fd);
    if (ba && bb) zz = bracket_A(G, a.body, b.body, num.fd);

    LiftedSection out;
    out.field = field_bracket(G, a.field, b.field, num.fd);
    const GroupFn Xa = a.field, Xb = b.field;
    out.body = l_section_from(G.dim(), [alpha, Xa, Xb, num, hz, zh, zz, ba, bb](const Mat& g, double t) -> Vec {
        Vec r = -curvature_F(alpha, g, t, Xa(g), Xb(g), num.fd);
        if (bb) r += hz.xi(g, t);
        if (ba) r -= zh.xi(g, t);
        if (ba && bb) r += zz.xi(g, t);
        return r;
    });
    const DeRham omega = ctx.omega;
    const ScalarFn sa = a.scalar, sb = b.scalar;
    const Section za = a.body, zb = b.body;
    out.scalar = [gp, omega, num, Xa, Xb, sa, sb, za, zb, Ha, Hb, ba, bb](const Mat& g) {
        const Vec xa = Xa(g), xb = Xb(g);
        double s = omega.eval({g}, {xa, xb});
        if (sb) s += directional_derivative(*gp, sb, g, xa, num.fd.h);
        if (sa) s -= directional_derivative(*gp, sa, g, xb, num.fd.h);
        if (bb) s += dj(*gp, Ha, zb, g, num);
        if (ba) s -= dj(*gp, Hb, za, g, num);
        if (ba && bb) s += dj(*gp, za, zb, g, num);
        return s;
    };
    return out;
}

Jacobiator lifted_jacobiator(const LiftContext& ctx, const LiftedSection& a, const LiftedSection& b,
                             const LiftedSection& c, const Mat& g, double t) {
    auto br = [&](const LiftedSection& x, const LiftedSection& y) { return lifted_bracket(ctx, x, y); };
    const LiftedSection j1 = br(br(a, b), c), j2 = br(br(b, c), a), j3 = br(br(c, a), b);
    Jacobiator J;
    J.scalar = j1.scalar(g) + j2.scalar(g) + j3.scalar(g);
    J.body = j1.body.xi(g, t) + j2.body.xi(g, t) + j3.body.xi(g, t);
    J.field = j1.field(g) + j2.field(g) + j3.field(g);
    return J;
}

double obstruction_pairing(const LiftContext& ctx, const Vec& X1, const Vec& X2, const Vec& X3, const Mat& g) {
    const GroupFrames calc(*ctx.group, 1, ctx.num.fd);
    const DeRham domega = exterior_derivative(calc, ctx.omega);
    const DeRham eta = eta_from_data(ctx.alpha, ctx.num);
    const std::vector<Vec> xs{X1, X2, X3};
    return -(domega.eval({g}, xs) + eta.eval({g}, xs));
}

Vec HeisenbergChart::coords(const Mat& g) const {
    Vec y(3);
    y << g(0, 1), g(1, 2), g(0, 2) - 0.5 * g(0, 1) * g(1, 2);
    return y;
}

Mat HeisenbergChart::point(const Vec& y) const { return group->exp(y); }

Mat HeisenbergChart::tangent(const Vec& y) const {
    const auto& alg = group->algebra();
    const Mat Y = alg.hat(y);
    const Mat I = Mat::Identity(3, 3);
    const Mat exp_minus = I - Y + 0.5 * Y * Y;
    Mat J(3, 3);
    for (int k = 0; k < 3; ++k) {
        const Mat U = alg.hat(Vec::Unit(3, k));
        J.col(k) = alg.vee((U + 0.5 * (U * Y + Y * U)) * exp_minus);
    }
    return J;
}

DeRham poincare_primitive(const Group& H, const DeRham& mu, int radial_points) {
    if (mu.degree != 3) throw std::invalid_argument("poincare_primitive expects a 3-form");
    const HeisenbergChart chart{&H};
    const QuadRule rule = gauss_legendre(radial_points);
    return {2, [chart, mu, rule](const GroupFrames::Point& p, const std::vector<Vec>& xs) {
                const Vec y = chart.coords(p[0]);
                const Eigen::PartialPivLU<Mat> lu(chart.tangent(y));
                const Vec a = lu.solve(xs[0]), b = lu.solve(xs[1]);
                double acc = 0;
                for (std::size_t k = 0; k < rule.size(); ++k) {
                    const double s = rule.nodes[k](0);
                    const Vec ys = s * y;
                    const Mat J = chart.tangent(ys);
                    acc += rule.weights[k] * s * s * mu.eval({chart.point(ys)}, {J * y, J * a, J * b});
                }
                return acc;
            }};
}

double equivariant_generator_residual(const ConnectionFamily& alpha, const DeRham& omega,
                                      std::function<double(const Vec&, const Mat&)> phi, const Vec& x, const Mat& g,
                                      const Vec& v, const Numerics& num) {
    const Group& G = *alpha.group;
    const Vec xg = G.ad(g, x) - x;
    double lhs = omega.eval({g}, {xg, v});
    lhs += directional_derivative(G, [&](const Mat& q) { return phi(x, q); }, g, v, num.fd.h);
    const double rhs = -integrate_01(
        [&](double t) { return G.dot(alpha.alpha_dot(t, g, v), psi(alpha, x, g, t)); }, num.grid);
    return lhs - rhs;
}

Section lambda_of(const SplittingChange& s, const Vec& w) {
    const int n = s.alpha.group->dim();
    const auto ls = s.lambda;
    Section out = l_section_from(n, [ls, w](const Mat& g, double t) -> Vec {
        Vec r = Vec::Zero(ls.front().xi(g, t).size());
        for (std::size_t i = 0; i < ls.size(); ++i)
            if (w(i) != 0.0) r += w(i) * ls[i].xi(g, t);
        return r;
    });
    bool analytic = true;
    for (const auto& l : ls) analytic = analytic && static_cast<bool>(l.dxi);
    if (analytic)
        out.dxi = [ls, w](const Mat& g, double t) -> Vec {
            Vec r = Vec::Zero(ls.front().dxi(g, t).size());
            for (std::size_t i = 0; i < ls.size(); ++i)
                if (w(i) != 0.0) r += w(i) * ls[i].dxi(g, t);
            return r;
        };
    return out;
}

Section horizontal_changed(const SplittingChange& s, const Vec& w) {
    return add(horizontal(s.alpha, constant_field(w)), scaled(lambda_of(s, w), -1.0));
}

namespace {

double beta_apply(const SplittingChange& s, const Section& zeta, const Mat& g, const Numerics& num) {
    const Group& G = *s.alpha.group;
    return integrate_01([&](double t) { return G.dot(s.b(g, t), zeta.xi(g, t)); }, num.grid);
}

// theta'(xi) = xi + alpha(a xi) + lambda(a xi)
Vec theta_changed(const SplittingChange& s, const Section& xi, const Mat& g, double t) {
    const Vec v = xi.v(g);
    return xi.xi(g, t) + s.alpha.alpha(t, g, v) + lambda_of(s, v).xi(g, t);
}

// dj'(xi)(zeta) = int xi' . zeta + a(xi) beta(zeta) - beta([xi, zeta]_A)
double dj_changed(const SplittingChange& s, const Section& xi, const Section& zeta, const Mat& g,
                  const Numerics& num) {
    const Group& G = *s.alpha.group;
    double r = dj(G, xi, zeta, g, num);
    r += directional_derivative(G, [&](const Mat& q) { return beta_apply(s, zeta, q, num); }, g, xi.v(g), num.fd.h);
    r -= beta_apply(s, bracket_A(G, xi, zeta, num.fd), g, num);
    return r;
}

Section curvature_changed(const SplittingChange& s, const Vec& v, const Vec& w, const Numerics& num) {
    const Group& G = *s.alpha.group;
    const Section br = bracket_A(G, horizontal_changed(s, v), horizontal_changed(s, w), num.fd);
    return l_section_from(G.dim(), [s, br](const Mat& g, double t) -> Vec { return -theta_changed(s, br, g, t); });
}

Section curvature_section(const ConnectionFamily& alpha, const Vec& v, const Vec& w, const Numerics& num) {
    return l_section_from(alpha.group->dim(), [alpha, v, w, num](const Mat& g, double t) -> Vec {
        return curvature_F(alpha, g, t, v, w, num.fd);
    });
}

}  // namespace

DeRham eta_changed(const SplittingChange& s, const Numerics& num) {
    return {3, [s, num](const GroupFrames::Point& p, const std::vector<Vec>& xs) {
                const Mat& g = p[0];
                double total = 0;
                for (int c = 0; c < 3; ++c) {
                    const Section F = curvature_changed(s, xs[(c + 1) % 3], xs[(c + 2) % 3], num);
                    total -= dj_changed(s, horizontal_changed(s, xs[c]), F, g, num);
                }
                return total;
            }};
}

DeRham gamma_precursor(const SplittingChange& s, const Numerics& num) {
    return {2, [s, num](const GroupFrames::Point& p, const std::vector<Vec>& xs) {
                const Group& G = *s.alpha.group;
                const Mat& g = p[0];
                const Vec &v = xs[0], &w = xs[1];
                const Section Hv = horizontal(s.alpha, constant_field(v)), Hw = horizontal(s.alpha, constant_field(w));
                const Section lv = lambda_of(s, v), lw = lambda_of(s, w);
                double r = dj(G, Hv, lw, g, num) - dj(G, Hw, lv, g, num);
                r += sigma(G, lv, lw, g, num);
                // F + d^theta lambda, with the frame bracket -[v, w]
                const Section dl = add(add(bracket_A(G, Hv, lw, num.fd), scaled(bracket_A(G, Hw, lv, num.fd), -1.0)),
                                       scaled(lambda_of(s, -G.bracket(v, w)), -1.0));
                r -= beta_apply(s, add(curvature_section(s.alpha, v, w, num), dl), g, num);
                r += beta_apply(s, bracket_A(G, lv, lw, num.fd), g, num);
                return r;
            }};
}

}  // namespace atiyah
