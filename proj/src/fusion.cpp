#include "atiyah/fusion.hpp"

namespace atiyah {

namespace {

// derivative of F(g2, g1) along the right-trivialized pair (u2, u1)
template <class F>
Vec pair_derivative(const Group& G, F&& fn, const Mat& g2, const Mat& g1, const Vec& u2, const Vec& u1, double h) {
    if (u2.cwiseAbs().maxCoeff() == 0.0 && u1.cwiseAbs().maxCoeff() == 0.0) return Vec::Zero(fn(g2, g1).size());
    return richardson([&](double s) -> Vec { return fn(G.exp(s * u2) * g2, G.exp(s * u1) * g1); }, h);
}

PairFn bracket_anchor(const Group& G, PairFn av, PairFn bv, const PairSection& a, const PairSection& b, double h) {
    const Group* gp = &G;
    return [gp, av, bv, a, b, h](const Mat& g2, const Mat& g1) -> Vec {
        Vec r = -gp->bracket(av(g2, g1), bv(g2, g1));
        r += pair_derivative(*gp, bv, g2, g1, a.v2(g2, g1), a.v1(g2, g1), h);
        r -= pair_derivative(*gp, av, g2, g1, b.v2(g2, g1), b.v1(g2, g1), h);
        return r;
    };
}

PairProfile bracket_profile(const Group& G, PairProfile ax, PairProfile bx, const PairSection& a, const PairSection& b,
                            double h) {
    const Group* gp = &G;
    return [gp, ax, bx, a, b, h](const Mat& g2, const Mat& g1, double t) -> Vec {
        Vec r = -gp->bracket(ax(g2, g1, t), bx(g2, g1, t));
        r += pair_derivative(*gp, [&](const Mat& q2, const Mat& q1) { return bx(q2, q1, t); }, g2, g1, a.v2(g2, g1),
                             a.v1(g2, g1), h);
        r -= pair_derivative(*gp, [&](const Mat& q2, const Mat& q1) { return ax(q2, q1, t); }, g2, g1, b.v2(g2, g1),
                             b.v1(g2, g1), h);
        return r;
    };
}

PairProfile bracket_dot(const Group& G, PairProfile ax, PairProfile adx, PairProfile bx, PairProfile bdx,
                        const PairSection& a, const PairSection& b, double h) {
    const Group* gp = &G;
    return [gp, ax, adx, bx, bdx, a, b, h](const Mat& g2, const Mat& g1, double t) -> Vec {
        Vec r = -gp->bracket(adx(g2, g1, t), bx(g2, g1, t)) - gp->bracket(ax(g2, g1, t), bdx(g2, g1, t));
        r += pair_derivative(*gp, [&](const Mat& q2, const Mat& q1) { return bdx(q2, q1, t); }, g2, g1, a.v2(g2, g1),
                             a.v1(g2, g1), h);
        r -= pair_derivative(*gp, [&](const Mat& q2, const Mat& q1) { return adx(q2, q1, t); }, g2, g1, b.v2(g2, g1),
                             b.v1(g2, g1), h);
        return r;
    };
}

}  // namespace

Section concat(const Group& G, const Section& second, const Section& first, const Mat& g2, const Mat& g1) {
    const Group* gp = &G;
    Section out;
    out.xi = [second, first, g2, g1](const Mat&, double t) -> Vec {
        return t <= 0.5 ? first.xi(g1, 2 * t) : second.xi(g2, 2 * t - 1);
    };
    out.dxi = [gp, second, first, g2, g1](const Mat&, double t) -> Vec {
        const FdConfig fd{};
        return 2.0 * (t <= 0.5 ? extend_derivative(*gp, first, g1, 2 * t, fd)
                               : extend_derivative(*gp, second, g2, 2 * t - 1, fd));
    };
    const Vec v = G.ad(g2, first.v(g1)) + second.v(g2);
    out.v = [v](const Mat&) -> Vec { return v; };
    out.smooth = first.smooth && second.smooth;
    return out;
}

Section slice(const PairSection& p, int which, const Mat& g2, const Mat& g1) {
    Section s;
    const PairProfile x = which == 2 ? p.xi2 : p.xi1;
    const PairProfile dx = which == 2 ? p.dxi2 : p.dxi1;
    const Vec v = which == 2 ? p.v2(g2, g1) : p.v1(g2, g1);
    s.xi = [x, g2, g1](const Mat&, double t) -> Vec { return x(g2, g1, t); };
    s.dxi = [dx, g2, g1](const Mat&, double t) -> Vec { return dx(g2, g1, t); };
    s.v = [v](const Mat&) -> Vec { return v; };
    s.smooth = true;
    return s;
}

Section concat(const Group& G, const PairSection& p, const Mat& g2, const Mat& g1) {
    return concat(G, slice(p, 2, g2, g1), slice(p, 1, g2, g1), g2, g1);
}

double composability_residual(const PairSection& p, const Mat& g2, const Mat& g1) {
    return (p.xi1(g2, g1, 1.0) - p.xi2(g2, g1, 0.0)).cwiseAbs().maxCoeff();
}

double pair_seam_residual(const Group& G, const PairSection& p, const Mat& g2, const Mat& g1) {
    const double r2 = (p.xi2(g2, g1, 1.0) - G.ad(g2, p.xi2(g2, g1, 0.0)) - p.v2(g2, g1)).cwiseAbs().maxCoeff();
    const double r1 = (p.xi1(g2, g1, 1.0) - G.ad(g1, p.xi1(g2, g1, 0.0)) - p.v1(g2, g1)).cwiseAbs().maxCoeff();
    return std::max(r1, r2);
}

PairSection sample_composable(const Group& G, Sampler& s, BumpFunction f) {
    const Group* gp = &G;
    const Section first = s.section(G, f);
    const int n = G.dim();
    const Vec v0 = s.vector(n), d = s.vector(n), w0 = s.vector(n), e = s.vector(n);
    const double k = s.normal(), l = s.normal();
    PairSection p;
    p.xi1 = [first](const Mat&, const Mat& g1, double t) -> Vec { return first.xi(g1, t); };
    p.dxi1 = [first](const Mat&, const Mat& g1, double t) -> Vec { return first.dxi(g1, t); };
    p.v1 = [first](const Mat&, const Mat& g1) -> Vec { return first.v(g1); };
    p.v2 = [gp, v0, d, k](const Mat& g2, const Mat&) -> Vec { return v0 + k * gp->ad(g2, d); };
    const PairFn w = [gp, w0, e, l](const Mat& g2, const Mat& g1) -> Vec { return w0 + l * gp->ad(g2 * g1, e); };
    const PairFn jump = [gp, first, v2 = p.v2](const Mat& g2, const Mat& g1) -> Vec {
        const Vec c = first.xi(g1, 1.0);
        return gp->ad(g2, c) + v2(g2, g1) - c;
    };
    p.xi2 = [first, jump, w, f](const Mat& g2, const Mat& g1, double t) -> Vec {
        const double ft = f(t);
        return first.xi(g1, 1.0) + ft * jump(g2, g1) + ft * (1 - ft) * w(g2, g1);
    };
    p.dxi2 = [jump, w, f](const Mat& g2, const Mat& g1, double t) -> Vec {
        const double ft = f(t), df = f.derivative(t);
        return df * jump(g2, g1) + df * (1 - 2 * ft) * w(g2, g1);
    };
    return p;
}

Section continue_from(const Group& G, const Vec& start, const Mat& g, const Vec& v, const Vec& w, BumpFunction f) {
    const Vec jump = G.ad(g, start) + v - start;
    Section s;
    s.xi = [start, jump, w, f](const Mat&, double t) -> Vec {
        const double ft = f(t);
        return start + ft * jump + ft * (1 - ft) * w;
    };
    s.dxi = [jump, w, f](const Mat&, double t) -> Vec {
        const double ft = f(t), df = f.derivative(t);
        return df * jump + df * (1 - 2 * ft) * w;
    };
    s.v = [v](const Mat&) -> Vec { return v; };
    s.smooth = true;
    return s;
}

PairSection bracket_pair(const Group& G, const PairSection& a, const PairSection& b, const FdConfig& fd) {
    const double h = fd.h;
    PairSection out;
    out.xi2 = bracket_profile(G, a.xi2, b.xi2, a, b, h);
    out.xi1 = bracket_profile(G, a.xi1, b.xi1, a, b, h);
    out.dxi2 = bracket_dot(G, a.xi2, a.dxi2, b.xi2, b.dxi2, a, b, h);
    out.dxi1 = bracket_dot(G, a.xi1, a.dxi1, b.xi1, b.dxi1, a, b, h);
    out.v2 = bracket_anchor(G, a.v2, b.v2, a, b, h);
    out.v1 = bracket_anchor(G, a.v1, b.v1, a, b, h);
    return out;
}

DeRham fusion_lambda(const Group& G) {
    return form_scale(dot_wedge(G, maurer_cartan_form(G, Side::left, 0), maurer_cartan_form(G, Side::right, 1)), 0.5);
}

double fusion_residual(const Group& G, const PairSection& a, const PairSection& b, const Mat& g2, const Mat& g1,
                       const Numerics& num) {
    const Mat g = g2 * g1;
    const double whole = varpi(G, concat(G, a, g2, g1), concat(G, b, g2, g1), g, num);
    const double parts = varpi(G, slice(a, 2, g2, g1), slice(b, 2, g2, g1), g2, num) +
                         varpi(G, slice(a, 1, g2, g1), slice(b, 1, g2, g1), g1, num);
    const int n = G.dim();
    Vec va(2 * n), vb(2 * n);
    va << a.v2(g2, g1), a.v1(g2, g1);
    vb << b.v2(g2, g1), b.v1(g2, g1);
    const double lam = fusion_lambda(G).eval(GroupFrames::Point{g2, g1}, {va, vb});
    return whole - parts + lam;
}

CourantElement courant_bracket(const AlgebroidCalc& calc, const CourantElement& a, const CourantElement& b) {
    CourantElement out;
    out.section = calc.bracket(a.section, b.section);
    out.coform = form_sum(lie_derivative_direct(calc, b.coform, a.section),
                          contract(exterior_derivative(calc, a.coform), b.section), -1.0);
    return out;
}

double courant_pairing(const CourantElement& a, const CourantElement& b, const Mat& g) {
    return a.coform.eval(g, {b.section}) + b.coform.eval(g, {a.section});
}

CourantElement isotropic_action(const AlgebroidForm& varpi, const Section& xi) { return {xi, contract(varpi, xi)}; }

double reduced_bracket_residual(const AlgebroidCalc& calc, const AlgebroidForm& varpi, const AlgebroidForm& eta,
                                const Section& v1, const Section& v2, const AlgebroidForm& alpha1,
                                const AlgebroidForm& alpha2, const Section& zeta, const Mat& g) {
    const CourantElement e1{v1, form_sum(contract(varpi, v1), alpha1)};
    const CourantElement e2{v2, form_sum(contract(varpi, v2), alpha2)};
    const double lhs = courant_bracket(calc, e1, e2).coform.eval(g, {zeta});
    const Section br = calc.bracket(v1, v2);
    const double rhs = varpi.eval(g, {br, zeta}) + eta.eval(g, {v1, v2, zeta}) +
                       lie_derivative_direct(calc, alpha2, v1).eval(g, {zeta}) -
                       exterior_derivative(calc, alpha1).eval(g, {v2, zeta});
    return lhs - rhs;
}

}  // namespace atiyah
