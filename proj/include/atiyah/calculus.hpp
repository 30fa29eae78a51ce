#pragma once

#include "atiyah/forms.hpp"
#include "atiyah/sections.hpp"

namespace atiyah {

// de Rham calculus on G^r. Tangent vectors are stacked right-trivialized
// components, read as constant frames; such frames do not commute:
// [v, w] = -[v, w]_g in each factor.
struct GroupFrames {
    using Point = std::vector<Mat>;
    using Tangent = Vec;

    const Group* group = nullptr;
    int factors = 1;
    FdConfig fd{};

    GroupFrames() = default;
    GroupFrames(const Group& G, int r = 1, FdConfig f = {}) : group(&G), factors(r), fd(f) {}

    int dim() const { return factors * group->dim(); }
    Vec component(const Vec& v, int i) const { return v.segment(i * group->dim(), group->dim()); }
    Vec basis(int k) const { return Vec::Unit(dim(), k); }

    Point move(const Point& p, const Vec& v, double s) const {
        Point q = p;
        for (int i = 0; i < factors; ++i) {
            const Vec vi = component(v, i);
            if (vi.cwiseAbs().maxCoeff() != 0.0) q[i] = group->exp(s * vi) * p[i];
        }
        return q;
    }

    template <class F>
    auto derivative(const Point& p, const Vec& v, F&& f) const -> std::decay_t<decltype(f(p))> {
        using R = std::decay_t<decltype(f(p))>;
        if (v.cwiseAbs().maxCoeff() == 0.0) return zero_like<R>(f(p));
        auto along = [&](double s) -> R { return f(move(p, v, s)); };
        if constexpr (std::is_arithmetic_v<R>)
            return richardson_scalar(along, fd.h);
        else
            return richardson(along, fd.h);
    }

    Vec bracket(const Vec& v, const Vec& w) const {
        Vec out(dim());
        const int n = group->dim();
        for (int i = 0; i < factors; ++i) out.segment(i * n, n) = -group->bracket(component(v, i), component(w, i));
        return out;
    }

    // Conjugation generator: Ad_{g_i} x - x in each factor.
    std::function<Vec(const Point&)> generator(const Vec& x) const {
        const Group* G = group;
        const int r = factors;
        return [G, r, x](const Point& p) -> Vec {
            const int n = G->dim();
            Vec out(n * r);
            for (int i = 0; i < r; ++i) out.segment(i * n, n) = G->ad(p[i], x) - x;
            return out;
        };
    }
};

using DeRham = Form<GroupFrames, double>;
using DeRhamG = Form<GroupFrames, Vec>;

// A smooth map between products of G, with its pushforward in
// right-trivialized components.
struct GroupMap {
    std::function<GroupFrames::Point(const GroupFrames::Point&)> point;
    std::function<Vec(const GroupFrames::Point&, const Vec&)> push;
};

GroupMap identity_map(const Group& G, int factors = 1);
// (g'', g') -> g'' g'
GroupMap multiplication_map(const Group& G);
GroupMap projection_map(const Group& G, int factors, int which);
// Pushforward by finite differences of a point map into a single factor.
GroupMap numeric_map(const Group& G, int source_factors, std::function<Mat(const GroupFrames::Point&)> fn,
                     FdConfig fd = {});

template <class V>
Form<GroupFrames, V> pullback(const Form<GroupFrames, V>& w, const GroupMap& m) {
    return {w.degree, [w, m](const GroupFrames::Point& p, const std::vector<Vec>& xs) -> V {
                std::vector<Vec> ys;
                ys.reserve(xs.size());
                for (const auto& x : xs) ys.push_back(m.push(p, x));
                return w.eval(m.point(p), ys);
            }};
}

template <class V>
MixedForm<GroupFrames, V> pullback(const MixedForm<GroupFrames, V>& w, const GroupMap& m) {
    MixedForm<GroupFrames, V> out;
    for (const auto& [k, f] : w.parts) out.add(pullback(f, m));
    return out;
}

// Algebra-valued wedge helpers over any calculus.
template <class Calc>
Form<Calc, double> dot_wedge(const Group& G, const Form<Calc, Vec>& a, const Form<Calc, Vec>& b) {
    const Group* g = &G;
    return wedge_map<Calc, double>([g](const std::vector<Vec>& v) { return g->dot(v[0], v[1]); }, {a, b});
}

template <class Calc>
Form<Calc, Vec> bracket_wedge(const Group& G, const Form<Calc, Vec>& a, const Form<Calc, Vec>& b) {
    const Group* g = &G;
    return wedge_map<Calc, Vec>([g](const std::vector<Vec>& v) { return g->bracket(v[0], v[1]); }, {a, b});
}

// a . [b, c]
template <class Calc>
Form<Calc, double> triple_wedge(const Group& G, const Form<Calc, Vec>& a, const Form<Calc, Vec>& b,
                                const Form<Calc, Vec>& c) {
    const Group* g = &G;
    return wedge_map<Calc, double>(
        [g](const std::vector<Vec>& v) { return g->dot(v[0], g->bracket(v[1], v[2])); }, {a, b, c});
}

// F = d beta + 1/2 [beta, beta]
template <class Calc>
Form<Calc, Vec> curvature(const Calc& calc, const Group& G, const Form<Calc, Vec>& beta) {
    return form_sum(exterior_derivative(calc, beta), bracket_wedge(G, beta, beta), 0.5);
}

// Constant algebra element as a 0-form.
template <class Calc>
Form<Calc, Vec> constant_form(const Vec& x) {
    return {0, [x](const typename Calc::Point&, const std::vector<typename Calc::Tangent>&) -> Vec { return x; }};
}

template <class Calc>
Form<Calc, double> scalar_zero(int degree) {
    return {degree, [](const typename Calc::Point&, const std::vector<typename Calc::Tangent>&) { return 0.0; }};
}

// Integral over t in [0,1] of a t-family of forms.
template <class Calc, class V>
Form<Calc, V> integrate_family(std::function<Form<Calc, V>(double)> family, int degree, TimeGrid grid) {
    return {degree, [family, grid](const typename Calc::Point& p, const std::vector<typename Calc::Tangent>& xs) -> V {
                return integrate_01([&](double t) -> V { return family(t).eval(p, xs); }, grid);
            }};
}

// Ad_{phi(p)} applied to an algebra-valued form.
template <class Calc>
Form<Calc, Vec> ad_form(const Group& G, std::function<Mat(const typename Calc::Point&)> phi, const Form<Calc, Vec>& b) {
    const Group* g = &G;
    return {b.degree, [g, phi, b](const typename Calc::Point& p, const std::vector<typename Calc::Tangent>& xs) -> Vec {
                return g->ad(phi(p), b.eval(p, xs));
            }};
}

// theta^L or theta^R of one factor.
DeRhamG maurer_cartan_form(const Group& G, Side side, int factor = 0);

// 1/12 theta^L . [theta^L, theta^L], by full antisymmetrization.
DeRham cartan_eta(const Group& G, int factor = 0);
// eta(v1, v2, v3) = 1/2 v1 . [v2, v3], the closed-form value.
double cartan_eta_value(const Group& G, const Vec& v1, const Vec& v2, const Vec& v3);
// eta_G(x) = eta - 1/2 (theta^L + theta^R) . x
MixedForm<GroupFrames, double> cartan_eta_equivariant(const Group& G, const Vec& x);

}  // namespace atiyah
