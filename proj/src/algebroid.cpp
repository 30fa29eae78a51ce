#include "atiyah/algebroid.hpp"

namespace atiyah {

Section bracket_A(const Group& G, const Section& xi, const Section& zeta, const FdConfig& fd) {
    const Group* g_ = &G;
    const double h = fd.h;
    Section out;
    out.xi = [g_, xi, zeta, h](const Mat& g, double t) -> Vec {
        Vec r = -g_->bracket(xi.xi(g, t), zeta.xi(g, t));
        r += directional_derivative(*g_, [&](const Mat& q) -> Vec { return zeta.xi(q, t); }, g, xi.v(g), h);
        r -= directional_derivative(*g_, [&](const Mat& q) -> Vec { return xi.xi(q, t); }, g, zeta.v(g), h);
        return r;
    };
    if (xi.dxi && zeta.dxi) {
        out.dxi = [g_, xi, zeta, h](const Mat& g, double t) -> Vec {
            Vec r = -g_->bracket(xi.dxi(g, t), zeta.xi(g, t)) - g_->bracket(xi.xi(g, t), zeta.dxi(g, t));
            r += directional_derivative(*g_, [&](const Mat& q) -> Vec { return zeta.dxi(q, t); }, g, xi.v(g), h);
            r -= directional_derivative(*g_, [&](const Mat& q) -> Vec { return xi.dxi(q, t); }, g, zeta.v(g), h);
            return r;
        };
    }
    out.v = [g_, xi, zeta, h](const Mat& g) -> Vec {
        const Vec a = xi.v(g), b = zeta.v(g);
        Vec r = -g_->bracket(a, b);
        r += directional_derivative(*g_, zeta.v, g, a, h);
        r -= directional_derivative(*g_, xi.v, g, b, h);
        return r;
    };
    out.smooth = xi.smooth && zeta.smooth;
    return out;
}

Section generator(const Group& G, const Vec& x) {
    const Group* g_ = &G;
    const int n = G.dim();
    Section s;
    s.xi = [x](const Mat&, double) -> Vec { return -x; };
    s.dxi = [n](const Mat&, double) -> Vec { return Vec::Zero(n); };
    s.v = [g_, x](const Mat& g) -> Vec { return g_->ad(g, x) - x; };
    return s;
}

Vec ConnectionFamily::at_integer(int n, const Mat& g, const Vec& v) const {
    Vec a = alpha0 ? alpha0(g, v) : Vec::Zero(group->dim());
    if (n >= 0) {
        for (int k = 0; k < n; ++k) a = group->ad(g, a) - v;
    } else {
        for (int k = 0; k < -n; ++k) a = group->ad_inv(g, a + v);
    }
    return a;
}

Vec ConnectionFamily::alpha(double t, const Mat& g, const Vec& v) const {
    const double n = std::floor(t);
    const double s = t - n;
    const Vec an = at_integer(static_cast<int>(n), g, v);
    const double fs = f(s);
    if (fs == 0.0) return an;
    return an + fs * (group->ad(g, an) - v - an);
}

Vec ConnectionFamily::alpha_dot(double t, const Mat& g, const Vec& v) const {
    const double n = std::floor(t);
    const double s = t - n;
    const double df = f.derivative(s);
    if (df == 0.0) return Vec::Zero(group->dim());
    const Vec an = at_integer(static_cast<int>(n), g, v);
    return df * (group->ad(g, an) - v - an);
}

DeRhamG ConnectionFamily::form(double t) const {
    ConnectionFamily self = *this;
    return {1, [self, t](const GroupFrames::Point& p, const std::vector<Vec>& xs) { return self.alpha(t, p[0], xs[0]); }};
}

DeRhamG ConnectionFamily::dot_form(double t) const {
    ConnectionFamily self = *this;
    return {1, [self, t](const GroupFrames::Point& p, const std::vector<Vec>& xs) {
                return self.alpha_dot(t, p[0], xs[0]);
            }};
}

ConnectionFamily build_alpha(const Group& G, ConnectionFamily::Base alpha0, BumpFunction f, bool invariant) {
    ConnectionFamily out;
    out.group = &G;
    out.alpha0 = std::move(alpha0);
    out.f = f;
    out.invariant = invariant;
    return out;
}

Section connection_apply(const ConnectionFamily& alpha, const Section& xi) {
    const int n = alpha.group->dim();
    Section out;
    out.xi = [alpha, xi](const Mat& g, double t) -> Vec { return xi.xi(g, t) + alpha.alpha(t, g, xi.v(g)); };
    if (xi.dxi)
        out.dxi = [alpha, xi](const Mat& g, double t) -> Vec { return xi.dxi(g, t) + alpha.alpha_dot(t, g, xi.v(g)); };
    out.v = [n](const Mat&) -> Vec { return Vec::Zero(n); };
    out.smooth = xi.smooth;
    return out;
}

Vec curvature_F(const ConnectionFamily& alpha, const Mat& g, double t, const Vec& v, const Vec& w, const FdConfig& fd) {
    const Group& G = *alpha.group;
    Vec r = directional_derivative(G, [&](const Mat& q) -> Vec { return alpha.alpha(t, q, w); }, g, v, fd.h);
    r -= directional_derivative(G, [&](const Mat& q) -> Vec { return alpha.alpha(t, q, v); }, g, w, fd.h);
    r -= alpha.alpha(t, g, -G.bracket(v, w));
    r += G.bracket(alpha.alpha(t, g, v), alpha.alpha(t, g, w));
    return r;
}

Vec psi(const ConnectionFamily& alpha, const Vec& x, const Mat& g, double t) {
    if (!alpha.invariant) throw std::invalid_argument("psi needs an invariant connection family");
    return -x + alpha.alpha(t, g, alpha.group->ad(g, x) - x);
}

Vec kappa_apply(const Group& G, double t, const Section& xi, const Mat& g) { return -extend(G, xi, g, t); }

AlgebroidFormG kappa_form(const Group& G, double t) {
    const Group* g_ = &G;
    return {1, [g_, t](const Mat& g, const std::vector<Section>& xs) -> Vec { return kappa_apply(*g_, t, xs[0], g); }};
}

AlgebroidFormG kappa_dot_form(const Group& G, double t, const FdConfig& fd) {
    const Group* g_ = &G;
    return {1, [g_, t, fd](const Mat& g, const std::vector<Section>& xs) -> Vec {
                return -extend_derivative(*g_, xs[0], g, t, fd);
            }};
}

}  // namespace atiyah
