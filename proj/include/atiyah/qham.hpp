#pragma once

#include "atiyah/lifting.hpp"
#include "atiyah/quadrature.hpp"

namespace atiyah {

// A G-equivariant map Phi: M -> G. M is realized inside G (points are
// group elements, tangent vectors right-trivialized) with the conjugation
// action, x_M(m) = Ad_m x - x.
struct EquivariantMap {
    const Group* group = nullptr;
    std::function<Mat(const Mat&)> phi;
    FdConfig fd{};

    Mat operator()(const Mat& m) const { return phi(m); }
    // right-trivialized d Phi(X) at m
    Vec push(const Mat& m, const Vec& X) const;
    double equivariance_residual(const Mat& k, const Mat& m) const;
};

EquivariantMap inclusion_map(const Group& G, FdConfig fd = {});
// m -> m^2
EquivariantMap square_map(const Group& G, FdConfig fd = {});

// (X, xi) with xi_{t+1} = Ad_{Phi(m)} xi_t + d Phi(X).
struct PullbackSection {
    GroupFn X;
    Profile xi;
    Profile dxi;
};

double pullback_seam_residual(const EquivariantMap& phi, const PullbackSection& s, const Mat& m);
// The A-section at Phi(m) carried by s, frozen at m.
Section pushed_section(const EquivariantMap& phi, const PullbackSection& s, const Mat& m);

// ([X, Y], -[xi, zeta]_g + X zeta - Y xi)
PullbackSection pullback_bracket(const EquivariantMap& phi, const PullbackSection& a, const PullbackSection& b);
// (x_M, x_A) = (Ad_m x - x, -x)
PullbackSection pullback_generator(const Group& G, const Vec& x);

// Random section tangent to conjugacy classes: X = Ad_m y(m) - y(m).
PullbackSection sample_pullback_section(const EquivariantMap& phi, Sampler& s, BumpFunction f = {});

// Calculus on the pull-back algebroid over M.
struct PullbackCalc {
    using Point = Mat;
    using Tangent = PullbackSection;

    EquivariantMap phi;

    template <class F>
    auto derivative(const Mat& m, const PullbackSection& s, F&& f) const -> std::decay_t<decltype(f(m))> {
        return directional_derivative(*phi.group, std::forward<F>(f), m, s.X(m), phi.fd.h);
    }
    PullbackSection bracket(const PullbackSection& a, const PullbackSection& b) const {
        return pullback_bracket(phi, a, b);
    }
    std::function<PullbackSection(const Mat&)> generator(const Vec& x) const {
        PullbackSection s = pullback_generator(*phi.group, x);
        return [s](const Mat&) { return s; };
    }
};

using PullbackForm = Form<PullbackCalc, double>;

// Phi^! on algebroid forms: pointwise transport of (X, xi).
PullbackForm pullback_phi(const EquivariantMap& phi, const AlgebroidForm& f);

// Calculus on M framed by fundamental vector fields: a tangent label x
// stands for x_M, and [x_M, y_M] = [x, y]_M.
struct FundamentalCalc {
    using Point = Mat;
    using Tangent = Vec;

    const Group* group = nullptr;
    FdConfig fd{};

    template <class F>
    auto derivative(const Mat& m, const Vec& x, F&& f) const -> std::decay_t<decltype(f(m))> {
        using R = std::decay_t<decltype(f(m))>;
        auto along = [&](double s) -> R {
            const Mat a = group->exp(-s * x);
            return f(a * m * a.inverse());
        };
        if constexpr (std::is_arithmetic_v<R>)
            return richardson_scalar(along, fd.h);
        else
            return richardson(along, fd.h);
    }
    Vec bracket(const Vec& x, const Vec& y) const { return group->bracket(x, y); }
    std::function<Vec(const Mat&)> generator(const Vec& x) const {
        return [x](const Mat&) { return x; };
    }
};

using MForm = Form<FundamentalCalc, double>;

// A label x with x_M(m) = u, least squares.
Vec fundamental_label(const Group& G, const Mat& m, const Vec& u);

// omega(x_M, y_M) = sign/2 x . (Ad_{m^-1} - Ad_m) y
MForm ghjw_omega(const Group& G, int sign = 1);
// Phi^* eta_G(x) on M for an equivariant Phi.
MixedForm<FundamentalCalc, double> pulled_eta_equivariant(const Group& G, const EquivariantMap& phi, const Vec& x);
// max |d_G omega(x) + Phi^* eta_G(x)| over the sampled points and labels
double ghjw_oracle_residual(const Group& G, const EquivariantMap& phi, const MForm& omega, const std::vector<Mat>& points,
                            const std::vector<Vec>& xs, Sampler& s);
// The sign passing the oracle; throws if neither does.
int ghjw_sign(const Group& G, const EquivariantMap& phi, const std::vector<Mat>& points, const std::vector<Vec>& xs,
              Sampler& s, double tol = 1e-4);

// a_M^* omega on pull-back sections
PullbackForm anchor_pullback(const Group& G, const MForm& omega);

// Points k exp(a) k^-1 of the class through exp(a), with their logarithms.
struct ClassPoint {
    Mat m;
    Vec log;
};
ClassPoint class_point(const Group& G, const Vec& a, const Mat& k);

// Fiber basis at m: tangent directions (u_i, -x_i) with u_i = Ad_m x_i - x_i
// spanning T_m M, and L-modes Ad_{exp(t a)} (cos, sin)(2 pi k t) e_j for k <= n_max.
struct BasisElement {
    Vec label;  // x with X = x_M; zero for loop modes
    Vec X;
    Section xi;  // frozen at m
    std::string name;
};
std::vector<BasisElement> truncated_basis(const Group& G, const ClassPoint& p, int n_max);

// Seam residual of a basis element at m.
double basis_seam_residual(const Group& G, const BasisElement& b, const Mat& m);

struct KernelReport {
    int dimension = 0;
    Mat gram;
    Vec singular_values;
    Mat kernel;  // columns in basis coordinates
    double basis_rank_gap = 0;  // smallest/largest singular value of the basis Gram
};

// Gram matrix of a_M^* omega + varpi_M on the basis, Gauss-Legendre in t.
Mat kernel_gram(const Group& G, const MForm& omega, const std::vector<BasisElement>& basis, const Mat& m,
                int quad_points = 96);
KernelReport gram_kernel(const Group& G, const MForm& omega, const std::vector<BasisElement>& basis, const Mat& m,
                         double threshold = 1e-8, int quad_points = 96);
// Pairings of the generator (x_M, x_A) with every basis element.
Vec generator_row(const Group& G, const MForm& omega, const std::vector<BasisElement>& basis, const Mat& m,
                  const Vec& x, int quad_points = 96);
// max_t |xi'(t)| for the loop part of a basis combination.
double max_loop_derivative(const std::vector<BasisElement>& basis, const Vec& coeffs, const Mat& m, int samples = 201);

// q(xi) = xi - xi(0), anchored at a(xi) + xi(0)_G.
Section project_Aprime(const Group& G, const Section& xi);
// q_M(X, xi) = (X + xi(0)_M, xi - xi(0))
PullbackSection project_Aprime(const Group& G, const PullbackSection& s);

}  // namespace atiyah
