#include "atiyah/sections.hpp"

namespace atiyah {

namespace {

double flat_exp(double u) { return u > 0 ? std::exp(-1.0 / u) : 0.0; }
double flat_exp_derivative(double u) { return u > 0 ? std::exp(-1.0 / u) / (u * u) : 0.0; }

}  // namespace

double BumpFunction::operator()(double t) const {
    const double u = (t - delta) / (1.0 - 2.0 * delta);
    if (u <= 0) return 0.0;
    if (u >= 1) return 1.0;
    const double a = flat_exp(u), b = flat_exp(1.0 - u);
    return a / (a + b);
}

double BumpFunction::derivative(double t) const {
    const double u = (t - delta) / (1.0 - 2.0 * delta);
    if (u <= 0 || u >= 1) return 0.0;
    const double a = flat_exp(u), b = flat_exp(1.0 - u);
    const double da = flat_exp_derivative(u), db = -flat_exp_derivative(1.0 - u);
    return (da * b - a * db) / ((a + b) * (a + b)) / (1.0 - 2.0 * delta);
}

Vec extend(const Group& G, const Section& s, const Mat& g, double t) {
    if (t >= 0.0 && t <= 1.0) return s.xi(g, t);
    const double n = std::floor(t);
    const double frac = t - n;
    Vec x = s.xi(g, frac);
    const Mat ad = G.ad_matrix(g);
    const Vec v = s.v(g);
    if (n > 0) {
        for (int k = 0; k < static_cast<int>(n); ++k) x = ad * x + v;
    } else {
        const Mat ad_inv = ad.inverse();
        for (int k = 0; k < static_cast<int>(-n); ++k) x = ad_inv * (x - v);
    }
    return x;
}

Vec extend_derivative(const Group& G, const Section& s, const Mat& g, double t, const FdConfig& fd) {
    if (s.dxi) {
        if (t >= 0.0 && t <= 1.0) return s.dxi(g, t);
        const double n = std::floor(t);
        Vec x = s.dxi(g, t - n);
        const Mat ad = G.ad_matrix(g);
        if (n > 0) {
            for (int k = 0; k < static_cast<int>(n); ++k) x = ad * x;
        } else {
            const Mat ad_inv = ad.inverse();
            for (int k = 0; k < static_cast<int>(-n); ++k) x = ad_inv * x;
        }
        return x;
    }
    return richardson([&](double e) { return extend(G, s, g, t + e); }, fd.ht);
}

double seam_residual(const Group& G, const Section& s, const Mat& g) {
    return (s.xi(g, 1.0) - G.ad(g, s.xi(g, 0.0)) - s.v(g)).cwiseAbs().maxCoeff();
}

Section template_section(const Group& G, GroupFn a, GroupFn v, BumpFunction f) {
    // profile(g,t) = a + f(t) (Ad_g a + v - a)
    auto jump = [&G, a, v](const Mat& g) -> Vec {
        const Vec ag = a(g);
        return G.ad(g, ag) + v(g) - ag;
    };
    Section s;
    s.xi = [a, jump, f](const Mat& g, double t) -> Vec {
        const double ft = f(t);
        if (ft == 0.0) return a(g);
        return a(g) + ft * jump(g);
    };
    s.dxi = [jump, f](const Mat& g, double t) -> Vec {
        const double df = f.derivative(t);
        if (df == 0.0) return Vec::Zero(jump(g).size());
        return df * jump(g);
    };
    s.v = std::move(v);
    s.smooth = true;
    return s;
}

Section zero_section(const Group& G) {
    const int n = G.dim();
    Section s;
    s.xi = [n](const Mat&, double) -> Vec { return Vec::Zero(n); };
    s.dxi = s.xi;
    s.v = [n](const Mat&) -> Vec { return Vec::Zero(n); };
    return s;
}

Section constant_loop(const Group& G, const Vec& c) {
    const int n = G.dim();
    Section s;
    s.xi = [c](const Mat&, double) -> Vec { return c; };
    s.dxi = [n](const Mat&, double) -> Vec { return Vec::Zero(n); };
    s.v = [&G, c](const Mat& g) -> Vec { return c - G.ad(g, c); };
    return s;
}

Section scale(const Section& s, std::function<double(const Mat&)> h) {
    Section out;
    out.xi = [s, h](const Mat& g, double t) -> Vec { return h(g) * s.xi(g, t); };
    if (s.dxi) out.dxi = [s, h](const Mat& g, double t) -> Vec { return h(g) * s.dxi(g, t); };
    out.v = [s, h](const Mat& g) -> Vec { return h(g) * s.v(g); };
    out.smooth = s.smooth;
    return out;
}

Section add(const Section& a, const Section& b) {
    Section out;
    out.xi = [a, b](const Mat& g, double t) -> Vec { return a.xi(g, t) + b.xi(g, t); };
    if (a.dxi && b.dxi) out.dxi = [a, b](const Mat& g, double t) -> Vec { return a.dxi(g, t) + b.dxi(g, t); };
    out.v = [a, b](const Mat& g) -> Vec { return a.v(g) + b.v(g); };
    out.smooth = a.smooth && b.smooth;
    return out;
}

Section scaled(const Section& s, double c) {
    return scale(s, [c](const Mat&) { return c; });
}

Vec Sampler::vector(int n, double scale) {
    Vec out(n);
    for (int i = 0; i < n; ++i) out(i) = scale * normal();
    return out;
}

Mat Sampler::point(const Group& G, double scale) { return G.exp(vector(G.dim(), scale)); }

Section Sampler::section(const Group& G, BumpFunction f) {
    const int n = G.dim();
    const Vec a0 = vector(n), d = vector(n), v0 = vector(n), d2 = vector(n);
    const double c = normal(), c2 = normal();
    GroupFn a = [&G, a0, d, c](const Mat& g) -> Vec { return a0 + c * G.ad(g, d); };
    GroupFn v = [&G, v0, d2, c2](const Mat& g) -> Vec { return v0 + c2 * G.ad(g, d2); };
    return template_section(G, a, v, f);
}

Section Sampler::l_section(const Group& G, BumpFunction f) {
    const int n = G.dim();
    const Vec a0 = vector(n), d = vector(n);
    const double c = normal();
    GroupFn a = [&G, a0, d, c](const Mat& g) -> Vec { return a0 + c * G.ad(g, d); };
    GroupFn v = [n](const Mat&) -> Vec { return Vec::Zero(n); };
    return template_section(G, a, v, f);
}

std::uint64_t derive_seed(std::uint64_t seed, const std::string& label) {
    std::uint64_t h = 1469598103934665603ULL ^ seed;
    for (unsigned char ch : label) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace atiyah
