#include "atiyah/bott.hpp"
#include "atiyah/fusion.hpp"
#include "atiyah/qham.hpp"
#include "atiyah/runner.hpp"

namespace atiyah {

namespace {

using C = CheckContext;

double maxabs(const Vec& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

const double two_pi = 2 * M_PI;

bool any_group(const Group&) { return true; }
bool abelian(const Group& G) { return G.abelian(); }
bool heisenberg(const Group& G) { return G.name() == "heisenberg3"; }
bool compact_simple(const Group& G) { return G.name() == "su2" || G.name() == "so3"; }
bool nondegenerate(const Group& G) { return G.algebra().nondegenerate(); }

DeRham random_one_form(const Group& G, Sampler& s) {
    const Vec c = s.vector(G.dim()), d = s.vector(G.dim());
    const Group* gp = &G;
    return {1, [gp, c, d](const GroupFrames::Point& p, const std::vector<Vec>& xs) {
                return c.dot(xs[0]) + d.dot(gp->ad_inv(p[0], xs[0]));
            }};
}

DeRham random_two_form(const Group& G, Sampler& s) {
    const Vec c = s.vector(G.dim());
    const Group* gp = &G;
    const DeRham base = dot_wedge(G, maurer_cartan_form(G, Side::left), maurer_cartan_form(G, Side::right));
    return {2, [gp, c, base](const GroupFrames::Point& p, const std::vector<Vec>& xs) {
                return (1.0 + 0.3 * c.dot(gp->ad(p[0], c))) * base.eval(p, xs);
            }};
}

// beta(p)(v) = sum_i C_i v_i + Ad_{p_i} D_i v_i
DeRhamG random_connection(const GroupFrames& calc, Sampler& s, double scale = 0.6) {
    const int n = calc.group->dim(), r = calc.factors;
    std::vector<Mat> Cs, Ds;
    for (int i = 0; i < r; ++i) {
        Cs.push_back(scale * Mat::NullaryExpr(n, n, [&]() { return s.normal(); }));
        Ds.push_back(scale * Mat::NullaryExpr(n, n, [&]() { return s.normal(); }));
    }
    const Group* gp = calc.group;
    return {1, [gp, Cs, Ds, n, r](const GroupFrames::Point& p, const std::vector<Vec>& xs) -> Vec {
                Vec out = Vec::Zero(n);
                for (int i = 0; i < r; ++i) {
                    const Vec vi = xs[0].segment(i * n, n);
                    out += Cs[i] * vi + gp->ad(p[i], Ds[i] * vi);
                }
                return out;
            }};
}

GroupFrames::Point frames_point(const GroupFrames& calc, C& c) {
    GroupFrames::Point p;
    for (int i = 0; i < calc.factors; ++i) p.push_back(c.point());
    return p;
}

std::vector<Vec> frames_vectors(const GroupFrames& calc, C& c, int k) {
    std::vector<Vec> xs;
    for (int i = 0; i < k; ++i) xs.push_back(c.rng.vector(calc.dim()));
    return xs;
}

template <class Calc>
double part(const MixedForm<Calc, double>& f, int k, const typename Calc::Point& p,
            const std::vector<typename Calc::Tangent>& xs) {
    return f.has(k) ? f.at(k).eval(p, xs) : 0.0;
}

Section axis_loop(int n, int axis, bool cosine) {
    Section s;
    s.xi = [n, axis, cosine](const Mat&, double t) -> Vec {
        return (cosine ? std::cos(two_pi * t) : std::sin(two_pi * t)) * Vec::Unit(n, axis);
    };
    s.dxi = [n, axis, cosine](const Mat&, double t) -> Vec {
        return two_pi * (cosine ? -std::sin(two_pi * t) : std::cos(two_pi * t)) * Vec::Unit(n, axis);
    };
    s.v = [n](const Mat&) -> Vec { return Vec::Zero(n); };
    return s;
}

Section fourier_loop(Sampler& s, int n) {
    const Vec a = s.vector(n), b = s.vector(n), c = s.vector(n);
    Section out;
    out.xi = [a, b, c](const Mat&, double t) -> Vec {
        return a * std::sin(two_pi * t) + b * std::cos(two_pi * t) + c * std::sin(2 * two_pi * t);
    };
    out.dxi = [a, b, c](const Mat&, double t) -> Vec {
        return two_pi * (a * std::cos(two_pi * t) - b * std::sin(two_pi * t) + 2 * c * std::cos(2 * two_pi * t));
    };
    out.v = [n](const Mat&) -> Vec { return Vec::Zero(n); };
    return out;
}

Section pointwise_bracket(const Group& G, const Section& a, const Section& b) {
    const Group* gp = &G;
    const int n = G.dim();
    Section out;
    out.xi = [gp, a, b](const Mat& g, double t) -> Vec { return gp->bracket(a.xi(g, t), b.xi(g, t)); };
    out.dxi = [gp, a, b](const Mat& g, double t) -> Vec {
        return gp->bracket(a.dxi(g, t), b.xi(g, t)) + gp->bracket(a.xi(g, t), b.dxi(g, t));
    };
    out.v = [n](const Mat&) -> Vec { return Vec::Zero(n); };
    return out;
}

GroupFn random_field(const Group& G, Sampler& s) {
    const Vec c = s.vector(G.dim()), d = s.vector(G.dim());
    const double k = s.normal();
    const Group* gp = &G;
    return [gp, c, d, k](const Mat& g) -> Vec { return c + k * gp->ad(g, d); };
}

double jacobi_A(const Group& G, const Section& a, const Section& b, const Section& c, const Mat& g, double t,
                const FdConfig& fd) {
    auto br = [&](const Section& x, const Section& y) { return bracket_A(G, x, y, fd); };
    return maxabs(br(a, br(b, c)).xi(g, t) + br(b, br(c, a)).xi(g, t) + br(c, br(a, b)).xi(g, t));
}

// Heisenberg lifting data: non-invariant alpha_0 and its Poincare primitive.
struct LiftData {
    LiftContext ctx;
    DeRham mu;
};

LiftData heisenberg_lift(const Group& H, const Numerics& num) {
    const double k = 0.7;
    auto alpha0 = [k](const Mat& q, const Vec& v) -> Vec {
        return k * (q(0, 2) * v(0) * Vec::Unit(3, 1) + q(0, 1) * q(1, 2) * v(2) * Vec::Unit(3, 0));
    };
    const ConnectionFamily alpha = build_alpha(H, alpha0, {}, false);
    const DeRham mu = form_scale(eta_alpha(alpha, num.fd), -1.0);
    return {LiftContext{&H, alpha, poincare_primitive(H, mu), num}, mu};
}

Vec class_log(const Group& G, C& c) {
    if (G.abelian()) return c.rng.vector(G.dim());
    return M_PI * Vec::Unit(G.dim(), G.dim() - 1);
}

std::vector<Vec> class_logs(const Group& G, C& c) {
    if (G.abelian()) return {c.rng.vector(G.dim())};
    const Vec e3 = Vec::Unit(G.dim(), G.dim() - 1);
    return {M_PI * e3, 0.5 * M_PI * e3};
}

std::vector<CheckSpec> algebroid_checks() {
    std::vector<CheckSpec> out;
    out.push_back({"algebroid", "jacobi", "[xi,[zeta,chi]]_A + cyclic = 0", 1e-5, 1 << 20, any_group, [](C& c) {
                       const Group& G = c.group;
                       const Section a = c.rng.section(G), b = c.rng.section(G), d = c.rng.section(G);
                       const Mat g = c.point();
                       return jacobi_A(G, a, b, d, g, c.rng.uniform(0, 1), c.num.fd);
                   }});
    out.push_back({"algebroid", "leibniz", "[xi, h zeta]_A = h [xi, zeta]_A + (a(xi) h) zeta", 1e-5, 1 << 20, any_group,
                   [](C& c) {
                       const Group& G = c.group;
                       const Section a = c.rng.section(G), b = c.rng.section(G);
                       const Mat g = c.point();
                       const double t = c.rng.uniform(0, 1);
                       const Vec d = c.rng.vector(G.dim());
                       auto h = [&G, d](const Mat& q) { return std::sin(G.ad(q, d).sum()); };
                       const Vec lhs = bracket_A(G, a, scale(b, h), c.num.fd).xi(g, t);
                       const double dh = directional_derivative(G, h, g, a.v(g), c.num.fd.h);
                       return maxabs(lhs - h(g) * bracket_A(G, a, b, c.num.fd).xi(g, t) - dh * b.xi(g, t));
                   }});
    out.push_back({"algebroid", "anchor", "a([xi,zeta]_A) = -[v_xi,v_zeta] + D_{v_xi} v_zeta - D_{v_zeta} v_xi", 1e-6,
                   1 << 20, any_group, [](C& c) {
                       const Group& G = c.group;
                       const Section a = c.rng.section(G), b = c.rng.section(G);
                       const Mat g = c.point();
                       const Vec va = a.v(g), vb = b.v(g);
                       const Vec rhs = -G.bracket(va, vb) + directional_derivative(G, b.v, g, va, c.num.fd.h) -
                                       directional_derivative(G, a.v, g, vb, c.num.fd.h);
                       return maxabs(bracket_A(G, a, b, c.num.fd).v(g) - rhs);
                   }});
    out.push_back({"algebroid", "generators", "[x_A, y_A]_A = ([x, y])_A", 1e-8, 1 << 20, any_group, [](C& c) {
                       const Group& G = c.group;
                       const Vec x = c.rng.vector(G.dim()), y = c.rng.vector(G.dim());
                       const Mat g = c.point();
                       const Section b = bracket_A(G, generator(G, x), generator(G, y), c.num.fd);
                       const Section r = generator(G, G.bracket(x, y));
                       return std::max(maxabs(b.xi(g, 0.4) - r.xi(g, 0.4)), maxabs(b.v(g) - r.v(g)));
                   }});
    out.push_back({"algebroid", "seam", "xi_{t+1} = Ad_g xi_t + v_xi for [xi, zeta]_A", 1e-8, 1 << 20, any_group,
                   [](C& c) {
                       const Group& G = c.group;
                       const Section a = c.rng.section(G), b = c.rng.section(G);
                       return seam_residual(G, bracket_A(G, a, b, c.num.fd), c.point());
                   }});
    out.push_back({"algebroid", "connection_family", "alpha_{t+1} = g . alpha_t", 1e-10, 1 << 20, any_group, [](C& c) {
                       const Group& G = c.group;
                       const ConnectionFamily a = build_alpha(G);
                       const Mat g = c.point();
                       const Vec v = c.rng.vector(G.dim());
                       const double t = c.rng.uniform(-1, 1);
                       return maxabs(a.alpha(t + 1, g, v) - (G.ad(g, a.alpha(t, g, v)) - v));
                   }});
    out.push_back({"algebroid", "curvature_covariance", "F^{alpha_{t+1}} = Ad_g F^{alpha_t}", 1e-6, 1 << 20, any_group,
                   [](C& c) {
                       const Group& G = c.group;
                       const ConnectionFamily a = build_alpha(G, {}, BumpFunction{0.1});
                       const Mat g = c.point();
                       const Vec v = c.rng.vector(G.dim()), w = c.rng.vector(G.dim());
                       const Vec F0 = curvature_F(a, g, 0.95, v, w, c.num.fd);
                       return maxabs(curvature_F(a, g, 1.95, v, w, c.num.fd) - G.ad(g, F0));
                   }});
    out.push_back({"algebroid", "kappa", "kappa_{t+1} = Ad_g kappa_t - v_xi", 1e-10, 1 << 20, any_group, [](C& c) {
                       const Group& G = c.group;
                       const Mat g = c.point();
                       const Section xi = c.rng.section(G);
                       const double t = c.rng.uniform(0, 1);
                       return maxabs(kappa_apply(G, t + 1, xi, g) - (G.ad(g, kappa_apply(G, t, xi, g)) - xi.v(g)));
                   }});
    out.push_back({"algebroid", "flat_curvature", "F^{alpha_t} = 0 on an abelian group", 1e-10, 1 << 20, abelian,
                   [](C& c) {
                       const Group& G = c.group;
                       const ConnectionFamily a = build_alpha(G);
                       const Mat g = c.point();
                       return maxabs(curvature_F(a, g, c.rng.uniform(0, 1), c.rng.vector(G.dim()), c.rng.vector(G.dim()),
                                                 c.num.fd));
                   }});
    return out;
}

std::vector<CheckSpec> forms_checks() {
    std::vector<CheckSpec> out;
    out.push_back({"forms", "d_squared", "d d = 0 on algebroid forms", 1e-4, 1 << 20, any_group, [](C& c) {
                       const Group& G = c.group;
                       const AlgebroidCalc calc(G, c.num.fd);
                       const Mat g = c.point();
                       const Section a = c.rng.section(G), b = c.rng.section(G), d = c.rng.section(G);
                       const AlgebroidForm one = contract(varpi_form(G, c.num), c.rng.section(G));
                       return std::abs(exterior_derivative(calc, exterior_derivative(calc, one)).eval(g, {a, b, d}));
                   }});
    out.push_back({"forms", "cartan_formula", "L_X = iota_X d + d iota_X", 1e-5, 1 << 20, any_group, [](C& c) {
                       const Group& G = c.group;
                       const AlgebroidCalc calc(G, c.num.fd);
                       const Mat g = c.point();
                       const AlgebroidForm w = varpi_form(G, c.num);
                       const Section X = c.rng.section(G), a = c.rng.section(G), b = c.rng.section(G);
                       return std::abs(lie_derivative(calc, w, X).eval(g, {a, b}) -
                                       lie_derivative_direct(calc, w, X).eval(g, {a, b}));
                   }});
    out.push_back({"forms", "basic_invariance", "iota_zeta a^* mu = 0, L_zeta a^* mu = 0 for zeta in L", 1e-5, 1 << 20,
                   any_group, [](C& c) {
                       const Group& G = c.group;
                       const AlgebroidCalc calc(G, c.num.fd);
                       const Mat g = c.point();
                       const AlgebroidForm basic = pullback_a(random_two_form(G, c.rng));
                       const Section l = c.rng.l_section(G), a = c.rng.section(G), b = c.rng.section(G);
                       return std::max(std::abs(basic.eval(g, {l, a})),
                                       std::abs(lie_derivative_direct(calc, basic, l).eval(g, {a, b})));
                   }});
    out.push_back({"forms", "cochain_map", "d a^* = a^* d", 1e-5, 1 << 20, any_group, [](C& c) {
                       const Group& G = c.group;
                       const AlgebroidCalc calc(G, c.num.fd);
                       const GroupFrames frames(G, 1, c.num.fd);
                       const Mat g = c.point();
                       const Section a = c.rng.section(G), b = c.rng.section(G), d = c.rng.section(G);
                       const DeRham one = random_one_form(G, c.rng), two = random_two_form(G, c.rng);
                       const double r1 = exterior_derivative(calc, pullback_a(one)).eval(g, {a, b}) -
                                         pullback_a(exterior_derivative(frames, one)).eval(g, {a, b});
                       const double r2 = exterior_derivative(calc, pullback_a(two)).eval(g, {a, b, d}) -
                                         pullback_a(exterior_derivative(frames, two)).eval(g, {a, b, d});
                       return std::max(std::abs(r1), std::abs(r2));
                   }});
    out.push_back({"forms", "dG_squared", "d_G d_G = -L_{x_A}", 1e-5, 1 << 20, any_group, [](C& c) {
                       const Group& G = c.group;
                       const AlgebroidCalc calc(G, c.num.fd);
                       const Mat g = c.point();
                       const Vec x = c.rng.vector(G.dim());
                       const Section a = c.rng.section(G);
                       MixedForm<AlgebroidCalc, double> phi;
                       phi.add(pullback_a(random_one_form(G, c.rng)));
                       const auto dd = equivariant_differential(calc, equivariant_differential(calc, phi, x), x);
                       const double l1 = lie_derivative_direct(calc, phi.at(1), generator(G, x)).eval(g, {a});
                       return std::abs(part(dd, 1, g, {a}) + l1);
                   }});
    out.push_back({"forms", "eta_value", "eta(e1, e2, e3) = 1/2", 1e-14, 1, [](const Group& G) { return G.name() == "su2"; },
                   [](C& c) {
                       const Group& G = c.group;
                       return std::abs(cartan_eta(G).eval({G.identity()}, {Vec::Unit(3, 0), Vec::Unit(3, 1), Vec::Unit(3, 2)}) -
                                       0.5);
                   }});
    out.push_back({"forms", "eta_equivariant", "d_G eta_G = 0", 1e-6, 1 << 20, any_group, [](C& c) {
                       const Group& G = c.group;
                       const GroupFrames calc(G, 1, c.num.fd);
                       const Vec x = c.rng.vector(G.dim());
                       const auto d = equivariant_differential(calc, cartan_eta_equivariant(G, x), x);
                       const GroupFrames::Point p{c.point()};
                       const auto vs = frames_vectors(calc, c, 2);
                       return std::max(std::abs(part(d, 2, p, vs)), std::abs(part(d, 0, p, {})));
                   }});
    out.push_back({"forms", "eta_vanishes", "eta = 0 and eta_G = -theta.x on an abelian group", 1e-10, 1 << 20, abelian,
                   [](C& c) {
                       const Group& G = c.group;
                       const GroupFrames::Point p{c.point()};
                       const Vec x = c.rng.vector(G.dim()), v = c.rng.vector(G.dim());
                       const auto etaG = cartan_eta_equivariant(G, x);
                       const double e3 = cartan_eta(G).eval(p, {c.rng.vector(G.dim()), c.rng.vector(G.dim()), c.rng.vector(G.dim())});
                       return std::max(std::abs(e3), std::abs(part(etaG, 1, p, {v}) + v.dot(x)));
                   }});
    return out;
}

std::vector<CheckSpec> lifting_checks() {
    std::vector<CheckSpec> out;
    out.push_back({"lifting", "sigma_value", "sigma(sin e1, cos e1) = -pi", 1e-7, 1, any_group, [](C& c) {
                       const Group& G = c.group;
                       return std::abs(sigma(G, axis_loop(G.dim(), 0, false), axis_loop(G.dim(), 0, true), G.identity(), c.num) +
                                       M_PI);
                   }});
    out.push_back({"lifting", "dj_identities",
                   "<d^theta j, zeta>(xi) = dj(xi)(zeta) + sigma(theta xi, zeta); iota_zeta d sigma = <dj, [.,.]_L>", 1e-5,
                   1 << 20, any_group, [](C& c) {
                       const Group& G = c.group;
                       const ConnectionFamily alpha = build_alpha(G);
                       const Mat g = c.point();
                       const Section xi = c.rng.section(G), zeta = c.rng.l_section(G);
                       const double r1 = dtheta_j(alpha, xi, zeta, g, c.num) - dtheta_j_definitional(alpha, xi, zeta, g, c.num);
                       const Section x1 = c.rng.l_section(G), x2 = c.rng.l_section(G), z = c.rng.section(G);
                       const double r2 = sigma_derivative(G, z, x1, x2, g, c.num) -
                                         dj(G, z, bracket_A(G, x1, x2, c.num.fd), g, c.num);
                       return std::max(std::abs(r1), std::abs(r2));
                   }});
    out.push_back({"lifting", "varpi_generators", "varpi(x_A, y_A) = 1/2 x.(Ad_g - Ad_{g^-1}) y", 1e-8, 1 << 20,
                   any_group, [](C& c) {
                       const Group& G = c.group;
                       const Mat g = c.point();
                       const Vec x = c.rng.vector(G.dim()), y = c.rng.vector(G.dim());
                       return std::abs(varpi(G, generator(G, x), generator(G, y), g, c.num) - varpi_generators(G, x, y, g));
                   }});
    out.push_back({"lifting", "varpi_spot", "varpi(e1_A, e2_A)(exp(pi e3 / 2)) = -1", 1e-8, 1, compact_simple, [](C& c) {
                       const Group& G = c.group;
                       const Mat g = G.exp(0.5 * M_PI * Vec::Unit(3, 2));
                       return std::abs(varpi(G, generator(G, Vec::Unit(3, 0)), generator(G, Vec::Unit(3, 1)), g, c.num) + 1.0);
                   }});
    out.push_back({"lifting", "d3form", "d_G varpi = a^* eta_G (3-form part)", 1e-4, 1 << 20, any_group, [](C& c) {
                       const Group& G = c.group;
                       const AlgebroidCalc calc(G, c.num.fd);
                       MixedForm<AlgebroidCalc, double> w;
                       w.add(varpi_form(G, c.num));
                       const Vec x = c.rng.vector(G.dim());
                       const auto dG = equivariant_differential(calc, w, x);
                       const auto eta = pullback_a(cartan_eta_equivariant(G, x));
                       const Mat g = c.point();
                       const Section a = c.rng.section(G), b = c.rng.section(G), d = c.rng.section(G);
                       return std::abs(part(dG, 3, g, {a, b, d}) - part(eta, 3, g, {a, b, d}));
                   }});
    out.push_back({"lifting", "d1form", "iota_{x_A} varpi = 1/2 a^*((theta^L + theta^R) . x)", 1e-5, 1 << 20, any_group,
                   [](C& c) {
                       const Group& G = c.group;
                       const Mat g = c.point();
                       const Vec x = c.rng.vector(G.dim());
                       const Section a = c.rng.section(G);
                       const Vec v = a.v(g);
                       return std::abs(varpi(G, generator(G, x), a, g, c.num) - 0.5 * G.dot(G.ad_inv(g, v) + v, x));
                   }});
    out.push_back({"lifting", "brylinski", "<dj, theta> + 1/2 sigma(theta, theta) = varpi + a^* Q^alpha", 1e-6, 1 << 20,
                   any_group, [](C& c) {
                       const Group& G = c.group;
                       const Group* gp = &G;
                       const double k1 = 0.3 * c.rng.normal(), k2 = 0.3 * c.rng.normal();
                       auto alpha0 = [gp, k1, k2](const Mat& q, const Vec& v) -> Vec { return k1 * gp->ad(q, v) + k2 * v; };
                       const ConnectionFamily alpha = build_alpha(G, alpha0);
                       const Mat g = c.point();
                       const Section a = c.rng.section(G), b = c.rng.section(G);
                       const double rhs = varpi(G, a, b, g, c.num) + q_alpha_closed(alpha).eval({g}, {a.v(g), b.v(g)});
                       return std::abs(brylinski_form(alpha, c.num).eval(g, {a, b}) - rhs);
                   }});
    out.push_back({"lifting", "eta_from_data", "eta = int alpha_t' . F^{alpha_t} dt", 1e-5, 1 << 20, any_group, [](C& c) {
                       const Group& G = c.group;
                       const GroupFrames frames(G);
                       const GroupFrames::Point p{c.point()};
                       const auto vs = frames_vectors(frames, c, 3);
                       return std::abs(eta_from_data(build_alpha(G), c.num).eval(p, vs) - cartan_eta(G).eval(p, vs));
                   }});
    out.push_back({"lifting", "poincare_primitive", "d omega = -eta^alpha", 1e-6, 1 << 20, heisenberg, [](C& c) {
                       const Group& H = c.group;
                       const LiftData data = heisenberg_lift(H, c.num);
                       const GroupFrames frames(H, 1, c.num.fd);
                       const GroupFrames::Point p{c.point(0.6)};
                       const auto vs = frames_vectors(frames, c, 3);
                       return std::abs(exterior_derivative(frames, data.ctx.omega).eval(p, vs) - data.mu.eval(p, vs));
                   }});
    out.push_back({"lifting", "lifted_jacobi", "Jacobi for the lifted bracket on A^", 1e-4, 4, heisenberg, [](C& c) {
                       const Group& H = c.group;
                       const LiftData data = heisenberg_lift(H, c.num);
                       const Mat g = c.point(0.6);
                       const LiftedSection a = lift_field(H, random_field(H, c.rng)), b = lift_field(H, random_field(H, c.rng)),
                                           d = lift_field(H, random_field(H, c.rng));
                       const Jacobiator J = lifted_jacobiator(data.ctx, a, b, d, g, c.rng.uniform(0, 1));
                       return std::max({std::abs(J.scalar), maxabs(J.body), maxabs(J.field)});
                   }});
    out.push_back({"lifting", "obstruction", "Jacobiator(omega = 0) = -(d omega + eta^alpha)(X1, X2, X3)", 1e-4, 4,
                   heisenberg, [](C& c) {
                       const Group& H = c.group;
                       LiftData data = heisenberg_lift(H, c.num);
                       data.ctx.omega = scalar_zero<GroupFrames>(2);
                       const Mat g = c.point(0.6);
                       const LiftedSection a = lift_field(H, random_field(H, c.rng)), b = lift_field(H, random_field(H, c.rng)),
                                           d = lift_field(H, random_field(H, c.rng));
                       const Jacobiator J = lifted_jacobiator(data.ctx, a, b, d, g, c.rng.uniform(0, 1));
                       return std::abs(J.scalar - obstruction_pairing(data.ctx, a.field(g), b.field(g), d.field(g), g));
                   }});
    out.push_back({"lifting", "equivariant_generator", "omega(x_G, .) + d Phi(x) = <d^theta j, Psi(x)>", 1e-8, 1 << 20,
                   heisenberg, [](C& c) {
                       const Group& H = c.group;
                       auto phi = [](const Vec& x, const Mat& g) { return -(x(0) * g(0, 1) + x(1) * g(1, 2)); };
                       const Mat g = c.point();
                       const Vec x = c.rng.vector(3), v = c.rng.vector(3);
                       return std::abs(equivariant_generator_residual(build_alpha(H), scalar_zero<GroupFrames>(2), phi, x, g, v,
                                                                      c.num));
                   }});
    out.push_back({"lifting", "splitting_change", "eta' - eta = d gamma", 1e-4, 2, compact_simple, [](C& c) {
                       const Group& G = c.group;
                       SplittingChange ch;
                       ch.alpha = build_alpha(G);
                       const Vec b0 = 0.3 * c.rng.vector(3), bd = 0.3 * c.rng.vector(3);
                       const Group* gp = &G;
                       ch.b = [gp, b0, bd](const Mat& g, double t) -> Vec { return std::cos(two_pi * t) * b0 + gp->ad(g, bd); };
                       for (int i = 0; i < 3; ++i) ch.lambda.push_back(scaled(c.rng.l_section(G), 0.3));
                       const Numerics num{TimeGrid(101), c.num.fd};
                       const GroupFrames::Point p{c.point()};
                       const std::vector<Vec> vs{c.rng.vector(3), c.rng.vector(3), c.rng.vector(3)};
                       const double lhs = eta_changed(ch, num).eval(p, vs) - eta_from_data(ch.alpha, num).eval(p, vs);
                       const double rhs = exterior_derivative(GroupFrames(G, 1, num.fd), gamma_precursor(ch, num)).eval(p, vs);
                       return std::abs(lhs - rhs);
                   }});
    return out;
}

std::vector<CheckSpec> bott_checks() {
    std::vector<CheckSpec> out;
    out.push_back({"bott", "upsilon_cs", "Upsilon(0, beta) = CS(beta)", 1e-6, 1 << 20, any_group, [](C& c) {
                       const Group& G = c.group;
                       const GroupFrames calc(G, 1, c.num.fd);
                       const auto p = quadratic_polynomial(G);
                       const DeRhamG beta = random_connection(calc, c.rng);
                       const auto pt = frames_point(calc, c);
                       const auto xs = frames_vectors(calc, c, 3);
                       const double u = bott(calc, G, p, {zero_connection<GroupFrames>(G.dim()), beta}).at(3).eval(pt, xs);
                       return std::abs(u - cs(calc, G, beta).eval(pt, xs));
                   }});
    out.push_back({"bott", "eta_p", "eta^p = -eta for p = 1/2 x.x", 1e-6, 1 << 20, any_group, [](C& c) {
                       const Group& G = c.group;
                       const GroupFrames calc(G, 1, c.num.fd);
                       const auto pt = frames_point(calc, c);
                       const auto xs = frames_vectors(calc, c, 3);
                       return std::abs(eta_p(calc, quadratic_polynomial(G)).at(3).eval(pt, xs) -
                                       bott_conventions().eta_sign * cartan_eta(G).eval(pt, xs));
                   }});
    out.push_back({"bott", "stokes_k1", "d Upsilon(b0, b1) = Upsilon(b1) - Upsilon(b0)", 1e-4, 1 << 20, any_group,
                   [](C& c) {
                       const Group& G = c.group;
                       const GroupFrames calc(G, 2, c.num.fd);
                       const auto p = quadratic_polynomial(G);
                       const DeRhamG b0 = random_connection(calc, c.rng), b1 = random_connection(calc, c.rng);
                       const DeRham du = exterior_derivative(calc, bott(calc, G, p, {b0, b1}).at(3));
                       const auto pt = frames_point(calc, c);
                       const auto xs = frames_vectors(calc, c, 4);
                       const double rhs = bott(calc, G, p, {b1}).at(4).eval(pt, xs) - bott(calc, G, p, {b0}).at(4).eval(pt, xs);
                       return std::abs(du.eval(pt, xs) - rhs);
                   }});
    out.push_back({"bott", "stokes_k2", "d Upsilon(b0, b1, b2) = sum_i (-1)^i Upsilon(..b_i-hat..)", 1e-4, 1 << 20,
                   any_group, [](C& c) {
                       const Group& G = c.group;
                       const GroupFrames calc(G, 1, c.num.fd);
                       const auto p = quadratic_polynomial(G);
                       const DeRhamG b0 = random_connection(calc, c.rng), b1 = random_connection(calc, c.rng),
                                     b2 = random_connection(calc, c.rng);
                       const DeRham du = exterior_derivative(calc, bott(calc, G, p, {b0, b1, b2}).at(2));
                       const auto pt = frames_point(calc, c);
                       const auto xs = frames_vectors(calc, c, 3);
                       const double rhs = bott(calc, G, p, {b1, b2}).at(3).eval(pt, xs) -
                                          bott(calc, G, p, {b0, b2}).at(3).eval(pt, xs) +
                                          bott(calc, G, p, {b0, b1}).at(3).eval(pt, xs);
                       return std::abs(du.eval(pt, xs) - rhs);
                   }});
    out.push_back({"bott", "stokes_cubic", "d Upsilon(b0, b1, b2) = sum_i (-1)^i Upsilon(..b_i-hat..), cubic p", 1e-4, 1,
                   [](const Group& G) { return has_cubic_polynomial(G); }, [](C& c) {
                       const Group& G = c.group;
                       const auto p = cubic_polynomial(G);
                       const GroupFrames calc(G, 2, c.num.fd);
                       const DeRhamG b0 = random_connection(calc, c.rng), b1 = random_connection(calc, c.rng),
                                     b2 = random_connection(calc, c.rng);
                       const DeRham du = exterior_derivative(calc, bott(calc, G, p, {b0, b1, b2}, std::nullopt, 4).at(4));
                       const auto pt = frames_point(calc, c);
                       const auto xs = frames_vectors(calc, c, 5);
                       const double rhs = bott(calc, G, p, {b1, b2}, std::nullopt, 4).at(5).eval(pt, xs) -
                                          bott(calc, G, p, {b0, b2}, std::nullopt, 4).at(5).eval(pt, xs) +
                                          bott(calc, G, p, {b0, b1}, std::nullopt, 4).at(5).eval(pt, xs);
                       return std::abs(du.eval(pt, xs) - rhs);
                   }});
    out.push_back({"bott", "gauge_invariance", "Upsilon(Phi.b0, Phi.b1) = Upsilon(b0, b1)", 1e-6, 1 << 20, any_group,
                   [](C& c) {
                       const Group& G = c.group;
                       const GroupFrames calc(G, 1, c.num.fd);
                       const auto p = quadratic_polynomial(G);
                       const Mat h = c.point(), k = c.point();
                       const PointMap<GroupFrames> phi = [h, k](const GroupFrames::Point& q) -> Mat { return h * q[0] * k; };
                       const DeRhamG b0 = random_connection(calc, c.rng), b1 = random_connection(calc, c.rng);
                       const auto pt = frames_point(calc, c);
                       const auto xs = frames_vectors(calc, c, 3);
                       const double a = bott(calc, G, p, {b0, b1}).at(3).eval(pt, xs);
                       const double b = bott(calc, G, p, {gauge_transform(calc, G, phi, b0), gauge_transform(calc, G, phi, b1)})
                                            .at(3)
                                            .eval(pt, xs);
                       return std::abs(a - b);
                   }});
    out.push_back({"bott", "cs_derivative", "d CS(beta) = 1/2 F.F", 1e-4, 1 << 20, any_group, [](C& c) {
                       const Group& G = c.group;
                       const GroupFrames calc(G, 2, c.num.fd);
                       const DeRhamG beta = random_connection(calc, c.rng);
                       const DeRhamG F = curvature(calc, G, beta);
                       const auto pt = frames_point(calc, c);
                       const auto xs = frames_vectors(calc, c, 4);
                       return std::abs(exterior_derivative(calc, cs(calc, G, beta)).eval(pt, xs) -
                                       0.5 * dot_wedge(G, F, F).eval(pt, xs));
                   }});
    out.push_back({"bott", "cs_gauge", "CS(Phi.beta) = CS(beta) + Phi^* eta - 1/2 d(beta . Phi^* theta^L)", 1e-4, 1 << 20,
                   any_group, [](C& c) {
                       const Group& G = c.group;
                       const GroupFrames calc(G, 1, c.num.fd);
                       const Mat h = c.point();
                       const PointMap<GroupFrames> phi = [h](const GroupFrames::Point& q) -> Mat { return q[0] * h * q[0]; };
                       const DeRhamG beta = random_connection(calc, c.rng);
                       const DeRham lhs = cs(calc, G, gauge_transform(calc, G, phi, beta));
                       const DeRham eta_phi = pullback(cartan_eta(G), numeric_map(G, 1, phi));
                       const DeRham exact =
                           exterior_derivative(calc, dot_wedge(G, beta, pullback_theta(calc, G, phi, Side::left)));
                       const DeRham rhs = form_sum(form_sum(cs(calc, G, beta), eta_phi), exact, -0.5);
                       const auto pt = frames_point(calc, c);
                       const auto xs = frames_vectors(calc, c, 3);
                       return std::abs(lhs.eval(pt, xs) - rhs.eval(pt, xs));
                   }});
    out.push_back({"bott", "transgression", "d/dt CS(beta_t) = beta_t' . F^{beta_t} - 1/2 d(beta_t . beta_t')", 1e-4,
                   1 << 20, any_group, [](C& c) {
                       const Group& G = c.group;
                       const GroupFrames calc(G, 1, c.num.fd);
                       const DeRhamG beta = random_connection(calc, c.rng);
                       const auto fam =
                           standard_family(calc, G, beta, PointMap<GroupFrames>([](const GroupFrames::Point& q) { return q[0]; }));
                       const double t = c.rng.uniform(0.1, 0.9);
                       const auto pt = frames_point(calc, c);
                       const auto xs = frames_vectors(calc, c, 3);
                       const double dcs =
                           richardson_scalar([&](double e) { return cs(calc, G, fam.at(t + e)).eval(pt, xs); }, 1e-3);
                       const DeRham tr = form_sum(dot_wedge(G, fam.dot(t), curvature(calc, G, fam.at(t))),
                                                  exterior_derivative(calc, dot_wedge(G, fam.at(t), fam.dot(t))), -0.5);
                       return std::abs(dcs - tr.eval(pt, xs));
                   }});
    out.push_back({"bott", "csform", "int beta' . F^beta dt = Phi^* eta + d Q", 1e-4, 1 << 20, any_group, [](C& c) {
                       const Group& G = c.group;
                       const GroupFrames calc(G, 1, c.num.fd);
                       const Mat h = c.point();
                       const PointMap<GroupFrames> phi = [h](const GroupFrames::Point& q) -> Mat { return h * q[0]; };
                       const auto fam = standard_family(calc, G, random_connection(calc, c.rng, 0.4), phi);
                       std::function<DeRham(double)> integrand = [&](double t) {
                           return dot_wedge(G, fam.dot(t), curvature(calc, G, fam.at(t)));
                       };
                       const DeRham lhs = integrate_family<GroupFrames, double>(integrand, 3, c.num.grid);
                       const DeRham Q = q_functional(calc, G, fam, c.num.grid);
                       const DeRham rhs = form_sum(pullback(cartan_eta(G), numeric_map(G, 1, phi)), exterior_derivative(calc, Q));
                       const auto pt = frames_point(calc, c);
                       const auto xs = frames_vectors(calc, c, 3);
                       return std::abs(lhs.eval(pt, xs) - rhs.eval(pt, xs));
                   }});
    out.push_back({"bott", "csform_equivariant", "int beta' . (F_G + x) dt = Phi^* eta_G + d_G Q (1-form part)", 1e-4,
                   1 << 20, any_group, [](C& c) {
                       const Group& G = c.group;
                       const GroupFrames calc(G, 1, c.num.fd);
                       const auto afam = alpha_family(build_alpha(G));
                       const Vec x = c.rng.vector(G.dim());
                       const auto gen = calc.generator(x);
                       std::function<DeRham(double)> one = [&](double t) -> DeRham {
                           const DeRhamG b = afam.at(t), bd = afam.dot(t);
                           return {1, [&G, b, bd, gen, x](const GroupFrames::Point& q, const std::vector<Vec>& v) {
                                       return G.dot(bd.eval(q, v), x - b.eval(q, {gen(q)}));
                                   }};
                       };
                       const DeRham lhs = integrate_family<GroupFrames, double>(one, 1, c.num.grid);
                       MixedForm<GroupFrames, double> qm;
                       qm.add(q_functional(calc, G, afam, c.num.grid));
                       const auto dGQ = equivariant_differential(calc, qm, x);
                       const auto etaG = cartan_eta_equivariant(G, x);
                       const GroupFrames::Point pt{c.point()};
                       const std::vector<Vec> v{c.rng.vector(G.dim())};
                       return std::abs(lhs.eval(pt, v) - part(etaG, 1, pt, v) - part(dGQ, 1, pt, v));
                   }});
    out.push_back({"bott", "q_reparametrization", "Q(beta . r) = Q(beta)", 1e-6, 1 << 20, any_group, [](C& c) {
                       const Group& G = c.group;
                       const GroupFrames calc(G, 1, c.num.fd);
                       const Mat h = c.point();
                       const PointMap<GroupFrames> phi = [h](const GroupFrames::Point& q) -> Mat { return q[0] * h; };
                       const auto fam = standard_family(calc, G, random_connection(calc, c.rng, 0.4), phi);
                       const double shift = c.rng.uniform(0, 1);
                       const auto rep = reparametrize<GroupFrames>(
                           fam, [shift](double t) { return t + shift + 0.05 * std::sin(two_pi * t); },
                           [](double t) { return 1 + 0.05 * two_pi * std::cos(two_pi * t); });
                       const auto pt = frames_point(calc, c);
                       const auto xs = frames_vectors(calc, c, 2);
                       return std::abs(q_functional(calc, G, rep, c.num.grid).eval(pt, xs) -
                                       q_functional(calc, G, fam, c.num.grid).eval(pt, xs));
                   }});
    out.push_back({"bott", "q_inversion", "Q(beta^-1) = -Q(beta)", 1e-6, 1 << 20, any_group, [](C& c) {
                       const Group& G = c.group;
                       const GroupFrames calc(G, 1, c.num.fd);
                       const Mat h = c.point();
                       const PointMap<GroupFrames> phi = [h](const GroupFrames::Point& q) -> Mat { return q[0] * h; };
                       const auto fam = standard_family(calc, G, random_connection(calc, c.rng, 0.4), phi);
                       const auto pt = frames_point(calc, c);
                       const auto xs = frames_vectors(calc, c, 2);
                       return std::abs(q_functional(calc, G, invert(fam), c.num.grid).eval(pt, xs) +
                                       q_functional(calc, G, fam, c.num.grid).eval(pt, xs));
                   }});
    out.push_back({"bott", "q_concatenation", "Q(beta'' * beta') = Q(beta'') + Q(beta') + 1/2 Phi''^* theta^L . Phi'^* theta^R",
                   1e-4, 1 << 20, any_group, [](C& c) {
                       const Group& G = c.group;
                       const GroupFrames calc(G, 2, c.num.fd);
                       const PointMap<GroupFrames> p1 = [](const GroupFrames::Point& q) -> Mat { return q[0]; };
                       const PointMap<GroupFrames> p2 = [](const GroupFrames::Point& q) -> Mat { return q[1]; };
                       const BumpFunction f{0.1};
                       const DeRhamG b0 = random_connection(calc, c.rng, 0.4);
                       const auto first = standard_family(calc, G, b0, p2, f);
                       const auto second = standard_family(calc, G, gauge_transform(calc, G, p2, b0), p1, f);
                       const TimeGrid& grid = c.num.grid;
                       const DeRham defect = form_sum(form_sum(q_functional(calc, G, concatenate(second, first), grid),
                                                               q_functional(calc, G, first, grid), -1.0),
                                                      q_functional(calc, G, second, grid), -1.0);
                       const DeRham lambda = form_scale(
                           dot_wedge(G, pullback_theta(calc, G, p1, Side::left), pullback_theta(calc, G, p2, Side::right)), 0.5);
                       const auto pt = frames_point(calc, c);
                       const auto xs = frames_vectors(calc, c, 2);
                       return std::abs(defect.eval(pt, xs) - lambda.eval(pt, xs));
                   }});
    out.push_back({"bott", "varpi_p_quadratic", "varpi^p = varpi for p = 1/2 x.x", 1e-5, 1 << 20, any_group, [](C& c) {
                       const Group& G = c.group;
                       const AlgebroidCalc calc(G, c.num.fd);
                       const Vec x = c.rng.vector(G.dim());
                       const auto vp = varpi_p(calc, quadratic_polynomial(G), x);
                       const Mat g = c.point();
                       const Section a = c.rng.section(G), b = c.rng.section(G);
                       return std::abs(vp.at(2).eval(g, {a, b}) - varpi(G, a, b, g, c.num));
                   }});
    out.push_back({"bott", "dG_varpi_p", "d_G varpi^p_G = a^* eta^p_G", 1e-3, 2, any_group, [](C& c) {
                       const Group& G = c.group;
                       const AlgebroidCalc calc(G, c.num.fd);
                       const auto p = quadratic_polynomial(G);
                       const Vec x = c.rng.vector(G.dim());
                       const auto dG = equivariant_differential(calc, varpi_p(calc, p, x), x);
                       const auto eta = pullback_a(eta_p(GroupFrames(G, 1, c.num.fd), p, x));
                       const double sgn = bott_conventions().theorem;
                       const Mat g = c.point();
                       const Section a = c.rng.section(G), b = c.rng.section(G), d = c.rng.section(G);
                       const double r3 = part(dG, 3, g, {a, b, d}) - sgn * part(eta, 3, g, {a, b, d});
                       const double r1 = part(dG, 1, g, {a}) - sgn * part(eta, 1, g, {a});
                       return std::max(std::abs(r3), std::abs(r1));
                   }});
    out.push_back({"bott", "upsilon_lemma", "d_G I(kappa) = Upsilon_G(0, kappa_1) - Upsilon_G(0, kappa_0)", 1e-3, 2,
                   any_group, [](C& c) {
                       const Group& G = c.group;
                       const AlgebroidCalc calc(G, c.num.fd);
                       const auto p = quadratic_polynomial(G);
                       const Vec x = c.rng.vector(G.dim());
                       const auto kappa = kappa_family(G, calc.fd);
                       const AlgebroidFormG zero = zero_connection<AlgebroidCalc>(G.dim());
                       const auto u1 = bott(calc, G, p, {zero, kappa.at(1.0)}, x);
                       const auto u0 = bott(calc, G, p, {zero, kappa.at(0.0)}, x);
                       const auto dI = equivariant_differential(calc, family_integral(calc, G, p, kappa, x), x);
                       const Mat g = c.point();
                       const Section a = c.rng.section(G), b = c.rng.section(G), d = c.rng.section(G);
                       const double r3 = part(u1, 3, g, {a, b, d}) - part(u0, 3, g, {a, b, d});
                       const double r1 = part(u1, 1, g, {a}) - part(u0, 1, g, {a});
                       return std::max(std::abs(part(dI, 3, g, {a, b, d}) - r3), std::abs(part(dI, 1, g, {a}) - r1));
                   }});
    out.push_back({"bott", "eta_p_closed", "d_G eta^p_G = 0", 1e-6, 1 << 20, any_group, [](C& c) {
                       const Group& G = c.group;
                       const GroupFrames calc(G, 1, c.num.fd);
                       const Vec x = c.rng.vector(G.dim());
                       const auto d = equivariant_differential(calc, eta_p(calc, quadratic_polynomial(G), x), x);
                       const auto pt = frames_point(calc, c);
                       return std::max(std::abs(part(d, 2, pt, frames_vectors(calc, c, 2))), std::abs(part(d, 0, pt, {})));
                   }});
    out.push_back({"bott", "pressley_segal", "sigma^p(xi1, xi2) = int xi1' . xi2 on loops", 1e-6, 1 << 20, any_group,
                   [](C& c) {
                       const Group& G = c.group;
                       const AlgebroidCalc calc(G, c.num.fd);
                       const auto vp = varpi_p(calc, quadratic_polynomial(G));
                       const Mat e = G.identity();
                       const Section l1 = fourier_loop(c.rng, G.dim()), l2 = fourier_loop(c.rng, G.dim());
                       return std::abs(vp.at(2).eval(e, {l1, l2}) + sigma(G, l1, l2, e, c.num));
                   }});
    out.push_back({"bott", "ce_closed", "sigma^p([xi1, xi2], xi3) + cyclic = 0", 1e-4, 1 << 20, any_group, [](C& c) {
                       const Group& G = c.group;
                       const AlgebroidCalc calc(G, c.num.fd);
                       const auto vp = varpi_p(calc, quadratic_polynomial(G));
                       const Mat e = G.identity();
                       const Section l1 = fourier_loop(c.rng, G.dim()), l2 = fourier_loop(c.rng, G.dim()),
                                     l3 = fourier_loop(c.rng, G.dim());
                       auto sp = [&](const Section& u, const Section& v) { return vp.at(2).eval(e, {u, v}); };
                       return std::abs(sp(pointwise_bracket(G, l1, l2), l3) + sp(pointwise_bracket(G, l2, l3), l1) +
                                       sp(pointwise_bracket(G, l3, l1), l2));
                   }});
    return out;
}

std::vector<CheckSpec> fusion_checks() {
    std::vector<CheckSpec> out;
    out.push_back({"fusion", "mult", "mult^! varpi = pr_1^! varpi + pr_2^! varpi - lambda", 1e-4, 1 << 20, any_group,
                   [](C& c) {
                       const Group& G = c.group;
                       const PairSection a = sample_composable(G, c.rng), b = sample_composable(G, c.rng);
                       const Mat g2 = c.point(), g1 = c.point();
                       return std::abs(fusion_residual(G, a, b, g2, g1, c.num));
                   }});
    out.push_back({"fusion", "lambda", "mult^* eta = pr_1^* eta + pr_2^* eta - d lambda", 1e-4, 1 << 20, any_group,
                   [](C& c) {
                       const Group& G = c.group;
                       const GroupFrames calc(G, 2, c.num.fd);
                       const DeRham lhs = pullback(cartan_eta(G), multiplication_map(G));
                       const DeRham rhs = form_sum(form_sum(cartan_eta(G, 0), cartan_eta(G, 1)),
                                                   exterior_derivative(calc, fusion_lambda(G)), -1.0);
                       const auto pt = frames_point(calc, c);
                       const auto xs = frames_vectors(calc, c, 3);
                       return std::abs(lhs.eval(pt, xs) - rhs.eval(pt, xs));
                   }});
    out.push_back({"fusion", "anchor_additivity", "a(xi'' * xi') = Ad_{g''} v' + v''", 1e-10, 1 << 20, any_group,
                   [](C& c) {
                       const Group& G = c.group;
                       const PairSection p = sample_composable(G, c.rng);
                       const Mat g2 = c.point(), g1 = c.point();
                       const Section s = concat(G, p, g2, g1);
                       return std::max(maxabs(s.v(g2 * g1) - G.ad(g2, p.v1(g2, g1)) - p.v2(g2, g1)),
                                       seam_residual(G, s, g2 * g1));
                   }});
    out.push_back({"fusion", "composable_closure", "composable pairs are closed under [.,.]_{A x A}", 1e-6, 1 << 20,
                   any_group, [](C& c) {
                       const Group& G = c.group;
                       const PairSection a = sample_composable(G, c.rng), b = sample_composable(G, c.rng);
                       const PairSection br = bracket_pair(G, a, b, c.num.fd);
                       const Mat g2 = c.point(), g1 = c.point();
                       return std::max(composability_residual(br, g2, g1), pair_seam_residual(G, br, g2, g1));
                   }});
    out.push_back({"fusion", "associativity", "(xi3 * xi2) * xi1 = xi3 * (xi2 * xi1) up to reparametrization", 1e-8,
                   1 << 20, any_group, [](C& c) {
                       const Group& G = c.group;
                       const int n = G.dim();
                       const Mat g1 = c.point(), g2 = c.point(), g3 = c.point();
                       const Section s1 = c.rng.section(G, BumpFunction{0.1});
                       const Section s2 = continue_from(G, s1.xi(g1, 1.0), g2, c.rng.vector(n), c.rng.vector(n));
                       const Section s3 = continue_from(G, s2.xi(g2, 1.0), g3, c.rng.vector(n), c.rng.vector(n));
                       const Section left = concat(G, concat(G, s3, s2, g3, g2), s1, g3 * g2, g1);
                       const Section right = concat(G, s3, concat(G, s2, s1, g2, g1), g3, g2 * g1);
                       auto rho = [](double t) { return t <= 0.5 ? t / 2 : (t <= 0.75 ? t - 0.25 : 2 * t - 1); };
                       double worst = maxabs(left.v(g1) - right.v(g1));
                       for (int k = 0; k <= 100; ++k) {
                           const double t = k / 100.0;
                           worst = std::max(worst, maxabs(left.xi(g1, t) - right.xi(g1, rho(t))));
                       }
                       return worst;
                   }});
    return out;
}

std::vector<CheckSpec> courant_checks() {
    std::vector<CheckSpec> out;
    out.push_back({"courant", "pairing_compatibility",
                   "a(e1) <e2, e3> = <[[e1, e2]], e3> + <e2, [[e1, e3]]>", 1e-4, 1 << 20, any_group, [](C& c) {
                       const Group& G = c.group;
                       const AlgebroidCalc calc(G, c.num.fd);
                       const Mat g = c.point();
                       const Section x1 = c.rng.section(G), x2 = c.rng.section(G), x3 = c.rng.section(G);
                       const CourantElement e1{x1, pullback_a(random_one_form(G, c.rng))};
                       const CourantElement e2{x2, pullback_a(random_one_form(G, c.rng))};
                       const CourantElement e3{x3, form_sum(pullback_a(random_one_form(G, c.rng)),
                                                            contract(varpi_form(G, c.num), x1))};
                       const double lhs =
                           calc.derivative(g, x1, [&](const Mat& q) { return courant_pairing(e2, e3, q); });
                       const double rhs = courant_pairing(courant_bracket(calc, e1, e2), e3, g) +
                                          courant_pairing(e2, courant_bracket(calc, e1, e3), g);
                       return std::abs(lhs - rhs);
                   }});
    out.push_back({"courant", "isotropy", "<f(xi), f(zeta)> = 0 for xi, zeta in L", 1e-10, 1 << 20, any_group, [](C& c) {
                       const Group& G = c.group;
                       const AlgebroidForm w = varpi_form(G, c.num);
                       const Mat g = c.point();
                       const CourantElement f1 = isotropic_action(w, c.rng.l_section(G)),
                                            f2 = isotropic_action(w, c.rng.l_section(G));
                       return std::max(std::abs(courant_pairing(f1, f1, g)), std::abs(courant_pairing(f1, f2, g)));
                   }});
    out.push_back({"courant", "action_bracket", "[[f(xi), f(zeta)]] = f([xi, zeta]_L)", 1e-4, 1 << 20, any_group,
                   [](C& c) {
                       const Group& G = c.group;
                       const AlgebroidCalc calc(G, c.num.fd);
                       const AlgebroidForm w = varpi_form(G, c.num);
                       const Mat g = c.point();
                       const Section l1 = c.rng.l_section(G), l2 = c.rng.l_section(G), z = c.rng.section(G);
                       const CourantElement b = courant_bracket(calc, isotropic_action(w, l1), isotropic_action(w, l2));
                       const CourantElement f12 = isotropic_action(w, calc.bracket(l1, l2));
                       return std::max(std::abs(b.coform.eval(g, {z}) - f12.coform.eval(g, {z})),
                                       maxabs(b.section.xi(g, 0.3) - f12.section.xi(g, 0.3)));
                   }});
    out.push_back({"courant", "eta_twist",
                   "[[f(v1) + a1, f(v2) + a2]] = f([v1, v2]) + iota_{v2} iota_{v1} a^* eta + L_{v1} a2 - iota_{v2} d a1", 1e-4,
                   1 << 20, any_group, [](C& c) {
                       const Group& G = c.group;
                       const AlgebroidCalc calc(G, c.num.fd);
                       const Mat g = c.point();
                       const Section v1 = c.rng.section(G), v2 = c.rng.section(G), z = c.rng.section(G);
                       const AlgebroidForm a1 = pullback_a(random_one_form(G, c.rng)), a2 = pullback_a(random_one_form(G, c.rng));
                       return std::abs(reduced_bracket_residual(calc, varpi_form(G, c.num), pullback_a(cartan_eta(G)), v1, v2,
                                                                a1, a2, z, g));
                   }});
    out.push_back({"courant", "twist_vanishes", "eta twist = 0 on an abelian group", 1e-10, 1 << 20, abelian, [](C& c) {
                       const Group& G = c.group;
                       const AlgebroidCalc calc(G, c.num.fd);
                       const AlgebroidForm w = varpi_form(G, c.num);
                       const Mat g = c.point();
                       const Section x = c.rng.section(G), y = c.rng.section(G), z = c.rng.section(G);
                       const CourantElement fx{x, contract(w, x)}, fy{y, contract(w, y)};
                       const double twist =
                           courant_bracket(calc, fx, fy).coform.eval(g, {z}) - w.eval(g, {calc.bracket(x, y), z});
                       return std::max(std::abs(twist), std::abs(pullback_a(cartan_eta(G)).eval(g, {x, y, z})));
                   }});
    return out;
}

EquivariantMap phi_for(const Group& G, const Numerics& num) { return inclusion_map(G, num.fd); }

std::vector<CheckSpec> qham_checks() {
    std::vector<CheckSpec> out;
    out.push_back({"qham", "ghjw_oracle", "d_G omega = -Phi^* eta_G", 1e-4, 1, nondegenerate, [](C& c) {
                       const Group& G = c.group;
                       const EquivariantMap id = phi_for(G, c.num);
                       std::vector<Mat> points;
                       std::vector<Vec> xs;
                       for (int k = 0; k < 3; ++k) points.push_back(class_point(G, class_log(G, c), c.point()).m);
                       for (int k = 0; k < 3; ++k) xs.push_back(c.rng.vector(G.dim()));
                       int sign = 0;
                       try {
                           Sampler s(c.rng.engine()());
                           sign = ghjw_sign(G, id, points, xs, s);
                       } catch (const std::runtime_error& e) {
                           throw OracleAbort(e.what());
                       }
                       Sampler s(c.rng.engine()());
                       return ghjw_oracle_residual(G, id, ghjw_omega(G, sign), points, xs, s);
                   }});
    out.push_back({"qham", "kernel_dimension", "dim ker(a_M^* omega + varpi_M) = dim G", 0.0, 1, nondegenerate, [](C& c) {
                       const Group& G = c.group;
                       const MForm w = ghjw_omega(G);
                       double worst = 0;
                       for (const Vec& a : class_logs(G, c)) {
                           const ClassPoint p = class_point(G, a, c.point());
                           for (int n_max : {4, 6, 8}) {
                               const auto basis = truncated_basis(G, p, n_max);
                               for (double thr : {1e-7, 1e-8, 1e-9})
                                   worst = std::max(worst, std::abs(double(gram_kernel(G, w, basis, p.m, thr).dimension - G.dim())));
                           }
                       }
                       return worst;
                   }});
    out.push_back({"qham", "generator_rows", "(a_M^* omega + varpi_M)(x_M, x_A; .) = 0", 1e-5, 1, nondegenerate,
                   [](C& c) {
                       const Group& G = c.group;
                       const MForm w = ghjw_omega(G);
                       double worst = 0;
                       for (const Vec& a : class_logs(G, c)) {
                           const ClassPoint p = class_point(G, a, c.point());
                           const auto basis = truncated_basis(G, p, 6);
                           for (int j = 0; j < G.dim(); ++j)
                               worst = std::max(worst, maxabs(generator_row(G, w, basis, p.m, Vec::Unit(G.dim(), j))));
                       }
                       return worst;
                   }});
    out.push_back({"qham", "kernel_constant", "kernel vectors have constant loop part", 1e-4, 1, nondegenerate, [](C& c) {
                       const Group& G = c.group;
                       const MForm w = ghjw_omega(G);
                       double worst = 0;
                       for (const Vec& a : class_logs(G, c)) {
                           const ClassPoint p = class_point(G, a, c.point());
                           for (int n_max : {4, 8}) {
                               const auto basis = truncated_basis(G, p, n_max);
                               const KernelReport r = gram_kernel(G, w, basis, p.m);
                               for (int k = 0; k < r.dimension; ++k)
                                   worst = std::max(worst, max_loop_derivative(basis, r.kernel.col(k), p.m));
                           }
                       }
                       return worst;
                   }});
    out.push_back({"qham", "gram_quadrature", "Gram entries = varpi_M + a_M^* omega by quadrature", 1e-8, 1 << 20,
                   nondegenerate, [](C& c) {
                       const Group& G = c.group;
                       const ClassPoint p = class_point(G, class_log(G, c), c.point());
                       const auto basis = truncated_basis(G, p, 3);
                       const Mat gram = kernel_gram(G, ghjw_omega(G), basis, p.m);
                       const Numerics num{TimeGrid(2001), c.num.fd};
                       std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
                       const std::size_t i = pick(c.rng.engine()), j = pick(c.rng.engine());
                       const double direct =
                           varpi(G, basis[i].xi, basis[j].xi, p.m, num) + ghjw_omega(G).eval(p.m, {basis[i].label, basis[j].label});
                       return std::abs(gram(i, j) - direct);
                   }});
    out.push_back({"qham", "pullback_bracket", "Jacobi for [.,.] on Phi^! A", 1e-4, 1 << 20, any_group, [](C& c) {
                       const Group& G = c.group;
                       const EquivariantMap phi = square_map(G, c.num.fd);
                       const Mat m = class_point(G, class_log(G, c), c.point()).m;
                       const PullbackSection p = sample_pullback_section(phi, c.rng), q = sample_pullback_section(phi, c.rng),
                                             r = sample_pullback_section(phi, c.rng);
                       const PullbackSection j1 = pullback_bracket(phi, p, pullback_bracket(phi, q, r));
                       const PullbackSection j2 = pullback_bracket(phi, q, pullback_bracket(phi, r, p));
                       const PullbackSection j3 = pullback_bracket(phi, r, pullback_bracket(phi, p, q));
                       const double t = c.rng.uniform(0, 1);
                       return std::max(maxabs(j1.xi(m, t) + j2.xi(m, t) + j3.xi(m, t)), maxabs(j1.X(m) + j2.X(m) + j3.X(m)));
                   }});
    out.push_back({"qham", "pullback_d", "d Phi^! = Phi^! d", 1e-4, 1 << 20, any_group, [](C& c) {
                       const Group& G = c.group;
                       const EquivariantMap id = inclusion_map(G, c.num.fd);
                       const Mat m = class_point(G, class_log(G, c), c.point()).m;
                       const PullbackSection a = sample_pullback_section(id, c.rng), b = sample_pullback_section(id, c.rng),
                                             d = sample_pullback_section(id, c.rng);
                       const AlgebroidForm w = varpi_form(G, c.num);
                       const PullbackCalc mcalc{id};
                       const AlgebroidCalc gcalc(G, id.fd);
                       auto as_section = [](const PullbackSection& s) {
                           Section out;
                           out.xi = s.xi;
                           out.dxi = s.dxi;
                           out.v = s.X;
                           return out;
                       };
                       const double lhs = exterior_derivative(mcalc, pullback_phi(id, w)).eval(m, {a, b, d});
                       const double rhs =
                           exterior_derivative(gcalc, w).eval(m, {as_section(a), as_section(b), as_section(d)});
                       return std::abs(lhs - rhs);
                   }});
    out.push_back({"qham", "aprime_closure", "[q(xi), q(zeta)]_A vanishes at t = 0", 1e-8, 1 << 20, any_group, [](C& c) {
                       const Group& G = c.group;
                       const Mat g = c.point();
                       const Section q1 = project_Aprime(G, c.rng.section(G)), q2 = project_Aprime(G, c.rng.section(G));
                       const Section b = bracket_A(G, q1, q2, c.num.fd);
                       return std::max({maxabs(b.xi(g, 0.0)), seam_residual(G, q1, g), seam_residual(G, b, g)});
                   }});
    return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"algebroid", "forms", "lifting", "bott", "fusion", "courant", "qham"};
    return names;
}

const std::vector<CheckSpec>& check_registry() {
    static const std::vector<CheckSpec> all = [] {
        std::vector<CheckSpec> out;
        for (auto build : {algebroid_checks, forms_checks, lifting_checks, bott_checks, fusion_checks, courant_checks,
                           qham_checks}) {
            auto part = build();
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }();
    return all;
}

}  // namespace atiyah
