#pragma once

#include "atiyah/calculus.hpp"
#include "atiyah/sections.hpp"

namespace atiyah {

inline Vec anchor(const Section& xi, const Mat& g) { return xi.v(g); }

// [xi, zeta]_A = -[xi, zeta]_g + X zeta - Y xi
Section bracket_A(const Group& G, const Section& xi, const Section& zeta, const FdConfig& fd = {});

// x_A = -x, anchored at Ad_g x - x.
Section generator(const Group& G, const Vec& x);

// Algebroid exterior calculus: forms are evaluated on sections at a point.
struct AlgebroidCalc {
    using Point = Mat;
    using Tangent = Section;

    const Group* group = nullptr;
    FdConfig fd{};

    AlgebroidCalc() = default;
    explicit AlgebroidCalc(const Group& G, FdConfig f = {}) : group(&G), fd(f) {}

    template <class F>
    auto derivative(const Mat& g, const Section& xi, F&& f) const -> std::decay_t<decltype(f(g))> {
        return directional_derivative(*group, std::forward<F>(f), g, xi.v(g), fd.h);
    }
    Section bracket(const Section& a, const Section& b) const { return bracket_A(*group, a, b, fd); }
    std::function<Section(const Mat&)> generator(const Vec& x) const {
        Section s = atiyah::generator(*group, x);
        return [s](const Mat&) { return s; };
    }
};

using AlgebroidForm = Form<AlgebroidCalc, double>;
using AlgebroidFormG = Form<AlgebroidCalc, Vec>;

// a^*: evaluate a de Rham form on G at the anchors.
template <class V>
Form<AlgebroidCalc, V> pullback_a(const Form<GroupFrames, V>& w) {
    return {w.degree, [w](const Mat& g, const std::vector<Section>& xs) -> V {
                std::vector<Vec> vs;
                vs.reserve(xs.size());
                for (const auto& x : xs) vs.push_back(x.v(g));
                return w.eval(GroupFrames::Point{g}, vs);
            }};
}

template <class V>
MixedForm<AlgebroidCalc, V> pullback_a(const MixedForm<GroupFrames, V>& w) {
    MixedForm<AlgebroidCalc, V> out;
    for (const auto& [k, f] : w.parts) out.add(pullback_a(f));
    return out;
}

// alpha_t with alpha_{t+1} = g . alpha_t := Ad_g alpha_t - theta^R.
struct ConnectionFamily {
    using Base = std::function<Vec(const Mat&, const Vec&)>;

    const Group* group = nullptr;
    Base alpha0;
    BumpFunction f{};
    bool invariant = false;

    // alpha_n = g^n . alpha_0
    Vec at_integer(int n, const Mat& g, const Vec& v) const;
    Vec alpha(double t, const Mat& g, const Vec& v) const;
    Vec alpha_dot(double t, const Mat& g, const Vec& v) const;

    DeRhamG form(double t) const;
    DeRhamG dot_form(double t) const;
};

// alpha_t = alpha_n + f(t - n)(alpha_{n+1} - alpha_n)
ConnectionFamily build_alpha(const Group& G, ConnectionFamily::Base alpha0 = {}, BumpFunction f = {},
                             bool invariant = true);

// theta(xi) = xi + alpha(a(xi)), an L-section.
Section connection_apply(const ConnectionFamily& alpha, const Section& xi);

// F^{alpha_t}(X, Y) = d alpha_t(X, Y) + [alpha_t X, alpha_t Y] in constant frames.
Vec curvature_F(const ConnectionFamily& alpha, const Mat& g, double t, const Vec& v, const Vec& w,
                const FdConfig& fd = {});

// Psi(x)(t) = -x + alpha_t(Ad_g x - x)
Vec psi(const ConnectionFamily& alpha, const Vec& x, const Mat& g, double t);

// kappa_t(xi) = -xi_t
Vec kappa_apply(const Group& G, double t, const Section& xi, const Mat& g);
AlgebroidFormG kappa_form(const Group& G, double t);
AlgebroidFormG kappa_dot_form(const Group& G, double t, const FdConfig& fd = {});

}  // namespace atiyah
