#pragma once

#include "atiyah/algebroid.hpp"
#include "atiyah/quadrature.hpp"

#include <memory>
#include <optional>
#include <utility>

namespace atiyah {

// Orientation signs of the parameter integrals. Simplex and rectangle
// parameters are integrated first, in coordinate order.
struct BottConventions {
    int upsilon[3] = {1, 1, -1};  // by simplex dimension k
    int rectangle = 1;
    // d_G varpi^p_G = theorem * a^* Upsilon^p_G(0, theta^L)
    int theorem = -1;
    // Upsilon^p(0, theta^L) = eta_sign * eta for p = 1/2 x.x
    int eta_sign = -1;
    // Upsilon^p(0, beta) = cs_sign * CS(beta) for p = 1/2 x.x
    int cs_sign = 1;
};

inline const BottConventions& bott_conventions() {
    static const BottConventions c{};
    return c;
}

std::vector<std::pair<std::string, int>> convention_table();

template <class Calc>
using PointMap = std::function<Mat(const typename Calc::Point&)>;

template <class Calc>
Form<Calc, Vec> zero_connection(int n) {
    return {1, [n](const typename Calc::Point&, const std::vector<typename Calc::Tangent>&) -> Vec { return Vec::Zero(n); }};
}

// Phi^* theta^L or Phi^* theta^R.
template <class Calc>
Form<Calc, Vec> pullback_theta(const Calc& calc, const Group& G, PointMap<Calc> phi, Side side) {
    const Group* gp = &G;
    return {1, [calc, gp, phi, side](const typename Calc::Point& p, const std::vector<typename Calc::Tangent>& xs) -> Vec {
                const Mat m = phi(p);
                const Mat dm = calc.derivative(p, xs[0], [&](const typename Calc::Point& q) -> Mat { return phi(q); });
                const Mat mi = m.inverse();
                return gp->algebra().vee(side == Side::right ? Mat(dm * mi) : Mat(mi * dm));
            }};
}

// Phi . beta = Ad_Phi beta - Phi^* theta^R
template <class Calc>
Form<Calc, Vec> gauge_transform(const Calc& calc, const Group& G, PointMap<Calc> phi, const Form<Calc, Vec>& beta) {
    return form_sum(ad_form<Calc>(G, phi, beta), pullback_theta(calc, G, phi, Side::right), -1.0);
}

template <class Calc>
PointMap<Calc> inverse_map(PointMap<Calc> phi) {
    return [phi](const typename Calc::Point& p) -> Mat { return phi(p).inverse(); };
}

template <class Calc>
PointMap<Calc> product_map(PointMap<Calc> a, PointMap<Calc> b) {
    return [a, b](const typename Calc::Point& p) -> Mat { return a(p) * b(p); };
}

// Phi^n . beta
template <class Calc>
Form<Calc, Vec> gauge_power(const Calc& calc, const Group& G, PointMap<Calc> phi, int n, Form<Calc, Vec> beta) {
    const PointMap<Calc> step = n >= 0 ? phi : inverse_map<Calc>(phi);
    for (int k = 0; k < std::abs(n); ++k) beta = gauge_transform(calc, G, step, beta);
    return beta;
}

// A t-family of g-valued 1-forms with beta_{t+1} = Phi . beta_t.
template <class Calc>
struct OneFormFamily {
    std::function<Form<Calc, Vec>(double)> at;
    std::function<Form<Calc, Vec>(double)> dot;
    PointMap<Calc> gauge;
};

// beta_t = beta_n + f(t - n)(beta_{n+1} - beta_n), beta_n = Phi^n . beta_0
template <class Calc>
OneFormFamily<Calc> standard_family(const Calc& calc, const Group& G, Form<Calc, Vec> beta0, PointMap<Calc> phi,
                                    BumpFunction f = {}) {
    const Group* gp = &G;
    auto ends = [calc, gp, beta0, phi](double t) {
        const int n = static_cast<int>(std::floor(t));
        const Form<Calc, Vec> bn = gauge_power(calc, *gp, phi, n, beta0);
        return std::make_pair(bn, gauge_transform(calc, *gp, phi, bn));
    };
    OneFormFamily<Calc> out;
    out.gauge = phi;
    out.at = [ends, f](double t) {
        const auto [a, b] = ends(t);
        const double s = f(t - std::floor(t));
        return form_sum(a, form_sum(b, a, -1.0), s);
    };
    out.dot = [ends, f](double t) {
        const auto [a, b] = ends(t);
        return form_scale(form_sum(b, a, -1.0), f.derivative(t - std::floor(t)));
    };
    return out;
}

template <class Calc>
OneFormFamily<Calc> reparametrize(const OneFormFamily<Calc>& fam, std::function<double(double)> phi,
                                  std::function<double(double)> dphi) {
    OneFormFamily<Calc> out;
    out.gauge = fam.gauge;
    out.at = [fam, phi](double t) { return fam.at(phi(t)); };
    out.dot = [fam, phi, dphi](double t) { return form_scale(fam.dot(phi(t)), dphi(t)); };
    return out;
}

// beta^-_t = beta_{-t}, gauge Phi^{-1}
template <class Calc>
OneFormFamily<Calc> invert(const OneFormFamily<Calc>& fam) {
    OneFormFamily<Calc> out;
    out.gauge = inverse_map<Calc>(fam.gauge);
    out.at = [fam](double t) { return fam.at(-t); };
    out.dot = [fam](double t) { return form_scale(fam.dot(-t), -1.0); };
    return out;
}

// (b2 * b1)_t: b1 at 2t on [0, 1/2], b2 at 2t - 1 on [1/2, 1]; gauge Phi2 Phi1.
template <class Calc>
OneFormFamily<Calc> concatenate(const OneFormFamily<Calc>& b2, const OneFormFamily<Calc>& b1) {
    OneFormFamily<Calc> out;
    out.gauge = product_map<Calc>(b2.gauge, b1.gauge);
    out.at = [b1, b2](double t) { return t <= 0.5 ? b1.at(2 * t) : b2.at(2 * t - 1); };
    out.dot = [b1, b2](double t) {
        return form_scale(t <= 0.5 ? b1.dot(2 * t) : b2.dot(2 * t - 1), 2.0);
    };
    return out;
}

// Q^beta = 1/2 Phi^* theta^L . beta_0 + 1/2 int beta_t . beta_t'
template <class Calc>
Form<Calc, double> q_functional(const Calc& calc, const Group& G, const OneFormFamily<Calc>& fam, TimeGrid grid = TimeGrid{}) {
    const Group* gp = &G;
    auto head = form_scale(dot_wedge(G, pullback_theta(calc, G, fam.gauge, Side::left), fam.at(0.0)), 0.5);
    std::function<Form<Calc, double>(double)> integrand = [gp, fam](double t) {
        return dot_wedge(*gp, fam.at(t), fam.dot(t));
    };
    return form_sum(head, integrate_family<Calc, double>(integrand, 2, grid), 0.5);
}

// CS(beta) = 1/2 d beta . beta + 1/6 beta . [beta, beta]
template <class Calc>
Form<Calc, double> cs(const Calc& calc, const Group& G, const Form<Calc, Vec>& beta) {
    return form_sum(form_scale(dot_wedge(G, exterior_derivative(calc, beta), beta), 0.5), triple_wedge(G, beta, beta, beta),
                    1.0 / 6.0);
}

// CS_G(beta)(x) = 1/2 d_G beta(x) . beta + 1/6 beta . [beta, beta] + beta . x
template <class Calc>
MixedForm<Calc, double> cs_equivariant(const Calc& calc, const Group& G, const Form<Calc, Vec>& beta, const Vec& x) {
    MixedForm<Calc, double> out;
    out.add(cs(calc, G, beta));
    const Group* gp = &G;
    auto field = calc.generator(x);
    out.add(Form<Calc, double>{1, [gp, beta, field, x](const typename Calc::Point& p, const std::vector<typename Calc::Tangent>& xs) {
                                   const Vec ix = beta.eval(p, {field(p)});
                                   const Vec b = beta.eval(p, xs);
                                   return -0.5 * gp->dot(ix, b) + gp->dot(b, x);
                               }});
    return out;
}

// Data at one parameter node: the connection and its parameter derivatives.
template <class Calc>
struct BottNode {
    Form<Calc, Vec> beta;
    std::vector<Form<Calc, Vec>> gammas;
};

namespace detail {

inline double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

}  // namespace detail

// Integral over a parameter domain of p(F + sum dp_i gamma_i + F_0), with
// F_0 = x - iota_x beta present when x is given.
template <class Calc>
MixedForm<Calc, double> parameter_integral(const Calc& calc, const Group& G, const InvariantPolynomial& p,
                                           const QuadRule& rule, std::function<BottNode<Calc>(const Vec&)> node,
                                           const std::optional<Vec>& x, double sign) {
    using F = Form<Calc, double>;
    const int m = p.degree;
    std::map<int, std::vector<std::pair<double, F>>> terms;
    for (std::size_t k = 0; k < rule.size(); ++k) {
        const BottNode<Calc> nd = node(rule.nodes[k]);
        const int q = static_cast<int>(nd.gammas.size());
        if (q > m) throw std::invalid_argument("polynomial degree too small for the parameter dimension");
        std::optional<Form<Calc, Vec>> F2, F0;
        const int jmax = x ? m - q : 0;
        for (int j = 0; j <= jmax; ++j) {
            const int n2 = m - q - j;
            if (n2 > 0 && !F2) F2 = curvature(calc, G, nd.beta);
            if (j > 0 && !F0) {
                const Vec xv = *x;
                const auto field = calc.generator(xv);
                const Form<Calc, Vec> beta = nd.beta;
                F0 = Form<Calc, Vec>{0, [xv, field, beta](const typename Calc::Point& pt, const std::vector<typename Calc::Tangent>&) -> Vec {
                                         return xv - beta.eval(pt, {field(pt)});
                                     }};
            }
            std::vector<Form<Calc, Vec>> args = nd.gammas;
            for (int i = 0; i < j; ++i) args.push_back(*F0);
            for (int i = 0; i < n2; ++i) args.push_back(*F2);
            const double multinomial =
                detail::factorial(m) / (detail::factorial(q) * detail::factorial(j) * detail::factorial(n2));
            const double reorder = detail::factorial(q) * (((q * (q - 1) / 2) % 2 == 0) ? 1.0 : -1.0);
            const double c = sign * rule.weights[k] * multinomial * reorder;
            terms[q + 2 * n2].push_back({c, wedge_map<Calc, double>(p.eval, args)});
        }
    }
    MixedForm<Calc, double> out;
    for (auto& [deg, list] : terms) {
        auto shared = std::make_shared<std::vector<std::pair<double, F>>>(std::move(list));
        out.add(F{deg, [shared](const typename Calc::Point& pt, const std::vector<typename Calc::Tangent>& xs) {
                      double acc = 0;
                      for (const auto& [c, f] : *shared) acc += c * f.eval(pt, xs);
                      return acc;
                  }});
    }
    return out;
}

// Upsilon^p(beta_0, ..., beta_k), equivariant when x is given.
template <class Calc>
MixedForm<Calc, double> bott(const Calc& calc, const Group& G, const InvariantPolynomial& p,
                             const std::vector<Form<Calc, Vec>>& betas, const std::optional<Vec>& x = std::nullopt,
                             int points_per_axis = 8) {
    const int k = static_cast<int>(betas.size()) - 1;
    if (k < 0 || k > 2) throw std::invalid_argument("bott forms are implemented for k <= 2");
    std::vector<Form<Calc, Vec>> gammas;
    for (int i = 1; i <= k; ++i) gammas.push_back(form_sum(betas[i], betas[0], -1.0));
    std::function<BottNode<Calc>(const Vec&)> node = [betas, gammas, k](const Vec& s) {
        Form<Calc, Vec> b = betas[0];
        for (int i = 0; i < k; ++i) b = form_sum(b, gammas[i], s(i));
        return BottNode<Calc>{b, gammas};
    };
    return parameter_integral(calc, G, p, simplex_rule(k, points_per_axis), node, x,
                              bott_conventions().upsilon[k]);
}

// I^p_G({beta_t}) over Delta^1 x [0,1] with beta_{s,t} = s beta_t.
template <class Calc>
MixedForm<Calc, double> family_integral(const Calc& calc, const Group& G, const InvariantPolynomial& p,
                                        const OneFormFamily<Calc>& fam, const std::optional<Vec>& x = std::nullopt,
                                        int s_points = 8, int t_points = 32) {
    std::function<BottNode<Calc>(const Vec&)> node = [fam](const Vec& st) {
        const double s = st(0), t = st(1);
        const Form<Calc, Vec> b = fam.at(t);
        return BottNode<Calc>{form_scale(b, s), {b, form_scale(fam.dot(t), s)}};
    };
    return parameter_integral(calc, G, p, rectangle_rule(s_points, t_points), node, x, bott_conventions().rectangle);
}

// kappa_t as a family of algebroid forms, gauge Phi(g) = g.
OneFormFamily<AlgebroidCalc> kappa_family(const Group& G, const FdConfig& fd = {});
// alpha_t as a family of de Rham forms, gauge Phi(g) = g.
OneFormFamily<GroupFrames> alpha_family(const ConnectionFamily& alpha);

// varpi^p_G = I^p_G({kappa_t}) - Upsilon^p_G(0, a^* theta^L, kappa_0)
MixedForm<AlgebroidCalc, double> varpi_p(const AlgebroidCalc& calc, const InvariantPolynomial& p,
                                         const std::optional<Vec>& x = std::nullopt, int t_points = 32);
// eta^p_G = Upsilon^p_G(0, theta^L)
MixedForm<GroupFrames, double> eta_p(const GroupFrames& calc, const InvariantPolynomial& p,
                                     const std::optional<Vec>& x = std::nullopt);

}  // namespace atiyah
