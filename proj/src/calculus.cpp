#include "atiyah/calculus.hpp"

namespace atiyah {

GroupMap identity_map(const Group&, int) {
    GroupMap m;
    m.point = [](const GroupFrames::Point& p) { return p; };
    m.push = [](const GroupFrames::Point&, const Vec& v) { return v; };
    return m;
}

GroupMap multiplication_map(const Group& G) {
    const Group* g = &G;
    GroupMap m;
    m.point = [](const GroupFrames::Point& p) { return GroupFrames::Point{p[0] * p[1]}; };
    m.push = [g](const GroupFrames::Point& p, const Vec& v) -> Vec {
        const int n = g->dim();
        return v.head(n) + g->ad(p[0], v.segment(n, n));
    };
    return m;
}

GroupMap projection_map(const Group& G, int, int which) {
    const int n = G.dim();
    GroupMap m;
    m.point = [which](const GroupFrames::Point& p) { return GroupFrames::Point{p[which]}; };
    m.push = [which, n](const GroupFrames::Point&, const Vec& v) -> Vec { return v.segment(which * n, n); };
    return m;
}

GroupMap numeric_map(const Group& G, int source_factors, std::function<Mat(const GroupFrames::Point&)> fn, FdConfig fd) {
    const Group* g = &G;
    GroupMap m;
    m.point = [fn](const GroupFrames::Point& p) { return GroupFrames::Point{fn(p)}; };
    m.push = [g, source_factors, fn, fd](const GroupFrames::Point& p, const Vec& v) -> Vec {
        GroupFrames calc(*g, source_factors, fd);
        const Mat base_inv = fn(p).inverse();
        const Mat dm = calc.derivative(p, v, [&](const GroupFrames::Point& q) -> Mat { return fn(q); });
        return g->algebra().vee(dm * base_inv);
    };
    return m;
}

DeRhamG maurer_cartan_form(const Group& G, Side side, int factor) {
    const Group* g = &G;
    return {1, [g, side, factor](const GroupFrames::Point& p, const std::vector<Vec>& xs) -> Vec {
                const int n = g->dim();
                const Vec v = xs[0].segment(factor * n, n);
                return maurer_cartan(*g, p[factor], v, side);
            }};
}

DeRham cartan_eta(const Group& G, int factor) {
    auto th = maurer_cartan_form(G, Side::left, factor);
    return form_scale(triple_wedge<GroupFrames>(G, th, th, th), 1.0 / 12.0);
}

double cartan_eta_value(const Group& G, const Vec& v1, const Vec& v2, const Vec& v3) {
    return 0.5 * G.dot(v1, G.bracket(v2, v3));
}

MixedForm<GroupFrames, double> cartan_eta_equivariant(const Group& G, const Vec& x) {
    MixedForm<GroupFrames, double> out;
    out.add(cartan_eta(G));
    const Group* g = &G;
    out.add(DeRham{1, [g, x](const GroupFrames::Point& p, const std::vector<Vec>& xs) {
                       const Vec& v = xs[0];
                       return -0.5 * g->dot(g->ad_inv(p[0], v) + v, x);
                   }});
    return out;
}

}  // namespace atiyah
