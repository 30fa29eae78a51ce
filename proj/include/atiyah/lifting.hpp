#pragma once

#include "atiyah/algebroid.hpp"

namespace atiyah {

using ScalarFn = std::function<double(const Mat&)>;

// Grid and step sizes shared by the quadrature-based constructions.
struct Numerics {
    TimeGrid grid{201};
    FdConfig fd{};
};

// sigma(xi1, xi2) = -int xi1' . xi2 on L-sections.
double sigma(const Group& G, const Section& a, const Section& b, const Mat& g, const Numerics& num = {});

// <dj, zeta>(xi) = int xi' . zeta
double dj(const Group& G, const Section& xi, const Section& zeta, const Mat& g, const Numerics& num = {});

// (zeta, s) in L^ = L + R.
struct ExtendedLSection {
    Section body;
    ScalarFn scalar;
};

// j(zeta) = (zeta, 0)
ExtendedLSection split(const Group& G, const Section& zeta);
ExtendedLSection central(const Group& G, ScalarFn s);

// (-[xi1, xi2]_g, int xi1' . xi2)
ExtendedLSection bracket_Lhat(const Group& G, const ExtendedLSection& a, const ExtendedLSection& b,
                              const Numerics& num = {});

// nabla^_xi (zeta, s) = ([xi, zeta]_A, a(xi) s + int xi' . zeta)
ExtendedLSection nabla_hat(const Group& G, const Section& xi, const ExtendedLSection& b, const Numerics& num = {});

// iota_zeta d sigma (xi1, xi2) for L-sections xi_i:
// a(zeta) sigma(xi1, xi2) - sigma([zeta, xi1], xi2) - sigma(xi1, [zeta, xi2])
double sigma_derivative(const Group& G, const Section& zeta, const Section& xi1, const Section& xi2, const Mat& g,
                        const Numerics& num = {});

// <d^theta j, zeta>(xi) = -int alpha_t'(a(xi)) . zeta_t
double dtheta_j(const ConnectionFamily& alpha, const Section& xi, const Section& zeta, const Mat& g,
                const Numerics& num = {});
// dj(xi)(zeta) + sigma(theta(xi), zeta)
double dtheta_j_definitional(const ConnectionFamily& alpha, const Section& xi, const Section& zeta, const Mat& g,
                             const Numerics& num = {});

// varpi(xi, zeta) = int xi' . zeta - 1/2 v_xi . v_zeta - Ad_g xi(0) . v_zeta
double varpi(const Group& G, const Section& xi, const Section& zeta, const Mat& g, const Numerics& num = {});
AlgebroidForm varpi_form(const Group& G, const Numerics& num = {});
// 1/2 x . (Ad_g - Ad_{g^-1}) y
double varpi_generators(const Group& G, const Vec& x, const Vec& y, const Mat& g);

// <dj, theta> + 1/2 sigma(theta, theta)
AlgebroidForm brylinski_form(const ConnectionFamily& alpha, const Numerics& num = {});

// Q^alpha = 1/2 theta^L . alpha_0 + 1/2 int alpha_t . alpha_t'
DeRham q_alpha(const ConnectionFamily& alpha, const Numerics& num = {});
// (theta^L + theta^R)/2 . alpha_0 + 1/2 alpha_0 . Ad_g alpha_0
DeRham q_alpha_closed(const ConnectionFamily& alpha);

// int alpha_t' . F^{alpha_t} dt
DeRham eta_from_data(const ConnectionFamily& alpha, const Numerics& num = {});
// eta + dQ^alpha with the closed form of Q^alpha
DeRham eta_alpha(const ConnectionFamily& alpha, const FdConfig& fd = {});

// Sections of A^ = L^ + TG: an L-section body, a central scalar and a
// right-trivialized vector field entering through Hor = -alpha.
struct LiftedSection {
    Section body;
    ScalarFn scalar;
    GroupFn field;
};

struct LiftContext {
    const Group* group = nullptr;
    ConnectionFamily alpha;
    DeRham omega;
    Numerics num{};
};

Section horizontal(const ConnectionFamily& alpha, GroupFn X);
// -[X, Y]_g + X Y - Y X
GroupFn field_bracket(const Group& G, GroupFn X, GroupFn Y, const FdConfig& fd = {});
LiftedSection lift_field(const Group& G, GroupFn X);
LiftedSection lift_body(const Group& G, const Section& zeta, ScalarFn s = {});
LiftedSection lifted_bracket(const LiftContext& ctx, const LiftedSection& a, const LiftedSection& b);

struct Jacobiator {
    double scalar = 0;
    Vec body;
    Vec field;
};
Jacobiator lifted_jacobiator(const LiftContext& ctx, const LiftedSection& a, const LiftedSection& b,
                             const LiftedSection& c, const Mat& g, double t);

// -(d omega + eta^alpha)(X1, X2, X3), eta^alpha from the connection data.
double obstruction_pairing(const LiftContext& ctx, const Vec& X1, const Vec& X2, const Vec& X3, const Mat& g);

// Exponential coordinates y on the Heisenberg group,
// g = exp(y0 E01 + y1 E12 + y2 E02).
struct HeisenbergChart {
    const Group* group = nullptr;

    Vec coords(const Mat& g) const;
    Mat point(const Vec& y) const;
    // columns: right-trivialized images of the coordinate directions at y
    Mat tangent(const Vec& y) const;
};

// Radial homotopy primitive of a closed 3-form on the Heisenberg group,
// Gauss-Legendre in the radial parameter. d omega = mu.
DeRham poincare_primitive(const Group& H, const DeRham& mu, int radial_points = 8);

// omega(x_G, v) + d Phi(x)(v) - <d^theta j(v), Psi(x)>
double equivariant_generator_residual(const ConnectionFamily& alpha, const DeRham& omega,
                                      std::function<double(const Vec&, const Mat&)> phi, const Vec& x, const Mat& g,
                                      const Vec& v, const Numerics& num = {});

// Change of splitting data: j' = j + beta with beta(zeta) = int b . zeta,
// theta' = theta + lambda with lambda(w) = sum_i w_i l_i.
struct SplittingChange {
    ConnectionFamily alpha;
    Profile b;
    std::vector<Section> lambda;
};

Section lambda_of(const SplittingChange& s, const Vec& w);
// horizontal lift of the constant frame w for theta + lambda
Section horizontal_changed(const SplittingChange& s, const Vec& w);
// -<d^theta' j', F^theta'> in constant frames
DeRham eta_changed(const SplittingChange& s, const Numerics& num = {});
// <d^theta j, lambda> + 1/2 sigma(lambda, lambda) - <beta, F^theta + d^theta lambda> + 1/2 beta([lambda, lambda]_L)
DeRham gamma_precursor(const SplittingChange& s, const Numerics& num = {});

}  // namespace atiyah
