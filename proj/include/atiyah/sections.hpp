#pragma once

#include "atiyah/lie.hpp"

#include <random>

namespace atiyah {

using GroupFn = std::function<Vec(const Mat&)>;
using Profile = std::function<Vec(const Mat&, double)>;

struct TimeGrid {
    int n_points = 201;

    explicit TimeGrid(int n = 201) : n_points(n) {
        if (n < 3 || n % 2 == 0) throw std::invalid_argument("time grid needs an odd number of points >= 3");
    }
    double node(int k) const { return static_cast<double>(k) / (n_points - 1); }
    double spacing() const { return 1.0 / (n_points - 1); }
};

// Composite Simpson on [0,1].
template <typename F>
auto integrate_01(F&& f, const TimeGrid& grid) -> std::decay_t<decltype(f(0.0))> {
    const int n = grid.n_points;
    const double h = grid.spacing();
    auto acc = f(0.0);
    acc = acc + f(1.0);
    for (int k = 1; k < n - 1; ++k) acc = acc + (k % 2 == 1 ? 4.0 : 2.0) * f(grid.node(k));
    return acc * (h / 3.0);
}

// Smooth step f with f = 0 near 0 and f = 1 near 1. With delta > 0 the
// step is exactly constant on [0, delta] and [1 - delta, 1].
struct BumpFunction {
    double delta = 0.0;

    double operator()(double t) const;
    double derivative(double t) const;
};

// A section of A over G: a profile on [0,1] with
// xi(g,1) = Ad_g xi(g,0) + v(g).
struct Section {
    Profile xi;
    Profile dxi;
    GroupFn v;
    bool smooth = true;

    Vec operator()(const Mat& g, double t) const { return xi(g, t); }
};

// Value at any real t through the seam rule.
Vec extend(const Group& G, const Section& s, const Mat& g, double t);
Vec extend_derivative(const Group& G, const Section& s, const Mat& g, double t, const FdConfig& fd);

inline Vec time_derivative(const Group& G, const Section& s, const Mat& g, double t, const FdConfig& fd) {
    return extend_derivative(G, s, g, t, fd);
}

// max over the given points of |xi(g,1) - Ad_g xi(g,0) - v(g)|.
double seam_residual(const Group& G, const Section& s, const Mat& g);

Section template_section(const Group& G, GroupFn a, GroupFn v, BumpFunction f = {});
Section zero_section(const Group& G);
Section constant_loop(const Group& G, const Vec& c);

// Scalar multiple h(g) * xi.
Section scale(const Section& s, std::function<double(const Mat&)> h);
Section add(const Section& a, const Section& b);
Section scaled(const Section& s, double c);

// Random data, seeded.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double normal() { return normal_(rng_); }
    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
    Vec vector(int n, double scale = 1.0);
    Mat point(const Group& G, double scale = 1.0);
    std::mt19937_64& engine() { return rng_; }

    // a(g) = a0 + c Ad_g d, v(g) = v0 + c' Ad_g d'.
    Section section(const Group& G, BumpFunction f = {});
    // Same template with v = 0.
    Section l_section(const Group& G, BumpFunction f = {});

private:
    std::mt19937_64 rng_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

std::uint64_t derive_seed(std::uint64_t seed, const std::string& label);

}  // namespace atiyah
