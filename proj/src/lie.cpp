#include "atiyah/lie.hpp"

#include <algorithm>
#include <complex>
#include <numeric>

namespace atiyah {

namespace {

// Real 4x4 encoding of a complex 2x2 matrix a + ib.
Mat complex_to_real(const Eigen::Matrix2cd& z) {
    Mat out(4, 4);
    out.topLeftCorner(2, 2) = z.real();
    out.topRightCorner(2, 2) = -z.imag();
    out.bottomLeftCorner(2, 2) = z.imag();
    out.bottomRightCorner(2, 2) = z.real();
    return out;
}

double orthogonality_residual(const Mat& g) {
    return (g.transpose() * g - Mat::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

}  // namespace

Group make_su2() {
    using C = std::complex<double>;
    const C i(0, 1);
    Eigen::Matrix2cd s1, s2, s3;
    s1 << 0, 1, 1, 0;
    s2 << 0, -i, i, 0;
    s3 << 1, 0, 0, -1;
    std::vector<Mat> basis = {complex_to_real(-0.5 * i * s1), complex_to_real(-0.5 * i * s2),
                              complex_to_real(-0.5 * i * s3)};
    LieAlgebra alg(basis, Mat::Identity(3, 3));
    auto member = [](const Mat& g) {
        // Unitary, complex-linear (commutes with the encoding of i), det 1.
        Mat J = Mat::Zero(4, 4);
        J.topRightCorner(2, 2) = -Mat::Identity(2, 2);
        J.bottomLeftCorner(2, 2) = Mat::Identity(2, 2);
        Eigen::Matrix2cd z;
        z.real() = g.topLeftCorner(2, 2);
        z.imag() = g.bottomLeftCorner(2, 2);
        double r = orthogonality_residual(g);
        r = std::max(r, (g * J - J * g).cwiseAbs().maxCoeff());
        r = std::max(r, std::abs(z.determinant() - 1.0));
        return r;
    };
    return Group("su2", alg, member, false);
}

Group make_so3() {
    std::vector<Mat> basis(3, Mat::Zero(3, 3));
    for (int a = 0; a < 3; ++a) {
        const int b = (a + 1) % 3, c = (a + 2) % 3;
        basis[a](c, b) = 1.0;
        basis[a](b, c) = -1.0;
    }
    LieAlgebra alg(basis, Mat::Identity(3, 3));
    auto member = [](const Mat& g) { return std::max(orthogonality_residual(g), std::abs(g.determinant() - 1.0)); };
    return Group("so3", alg, member, false);
}

Group make_heisenberg3() {
    std::vector<Mat> basis(3, Mat::Zero(3, 3));
    basis[0](0, 1) = 1.0;
    basis[1](1, 2) = 1.0;
    basis[2](0, 2) = 1.0;
    // Any invariant symmetric form has the center in its radical.
    Mat form = Mat::Zero(3, 3);
    form(0, 0) = 1.0;
    form(1, 1) = 1.0;
    LieAlgebra alg(basis, form);
    auto member = [](const Mat& g) {
        double r = 0;
        for (int i = 0; i < 3; ++i) {
            r = std::max(r, std::abs(g(i, i) - 1.0));
            for (int j = 0; j < i; ++j) r = std::max(r, std::abs(g(i, j)));
        }
        return r;
    };
    return Group("heisenberg3", alg, member, false);
}

Group make_torus2() {
    std::vector<Mat> basis(2, Mat::Zero(4, 4));
    basis[0](1, 0) = 1.0;
    basis[0](0, 1) = -1.0;
    basis[1](3, 2) = 1.0;
    basis[1](2, 3) = -1.0;
    LieAlgebra alg(basis, Mat::Identity(2, 2));
    auto member = [](const Mat& g) {
        double r = orthogonality_residual(g);
        r = std::max(r, g.topRightCorner(2, 2).cwiseAbs().maxCoeff());
        r = std::max(r, g.bottomLeftCorner(2, 2).cwiseAbs().maxCoeff());
        return r;
    };
    return Group("torus2", alg, member, true);
}

std::vector<std::string> catalog_names() { return {"su2", "so3", "heisenberg3", "torus2"}; }

Group make_group(const std::string& name) {
    if (name == "su2") return make_su2();
    if (name == "so3") return make_so3();
    if (name == "heisenberg3") return make_heisenberg3();
    if (name == "torus2") return make_torus2();
    throw std::invalid_argument("unknown group: " + name);
}

InvariantPolynomial quadratic_polynomial(const Group& G) {
    InvariantPolynomial p;
    p.degree = 2;
    p.label = "half_dot";
    p.eval = [form = G.algebra().form()](const std::vector<Vec>& xs) {
        return 0.5 * xs[0].dot(form * xs[1]);
    };
    return p;
}

bool has_cubic_polynomial(const Group& G) { return G.name() == "heisenberg3" || G.name() == "torus2"; }

InvariantPolynomial cubic_polynomial(const Group& G) {
    if (!has_cubic_polynomial(G)) throw std::invalid_argument("no invariant cubic in catalog for " + G.name());
    // Product of the first two coordinates' sum: invariant because Ad
    // fixes these coordinates on both catalog entries.
    InvariantPolynomial p;
    p.degree = 3;
    p.label = "cube_of_abelian_coordinate";
    p.eval = [](const std::vector<Vec>& xs) {
        double out = 1.0;
        for (const auto& x : xs) out *= x(0) + x(1);
        return out;
    };
    return p;
}

double symmetry_residual(const InvariantPolynomial& p, const std::vector<Vec>& xs) {
    std::vector<int> idx(xs.size());
    std::iota(idx.begin(), idx.end(), 0);
    const double base = p(xs);
    double worst = 0;
    do {
        std::vector<Vec> perm;
        for (int i : idx) perm.push_back(xs[i]);
        worst = std::max(worst, std::abs(p(perm) - base));
    } while (std::next_permutation(idx.begin(), idx.end()));
    return worst;
}

double invariance_residual(const Group& G, const InvariantPolynomial& p, const Mat& g, const std::vector<Vec>& xs) {
    std::vector<Vec> moved;
    for (const auto& x : xs) moved.push_back(G.ad(g, x));
    return std::abs(p(moved) - p(xs));
}

}  // namespace atiyah
