#include "atiyah/quadrature.hpp"

#include <numeric>

namespace atiyah {

double QuadRule::total_weight() const { return std::accumulate(weights.begin(), weights.end(), 0.0); }

QuadRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre needs n >= 1");
    // Jacobi matrix of the Legendre recurrence on [-1,1].
    Mat J = Mat::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double b = k / std::sqrt(4.0 * k * k - 1.0);
        J(k, k - 1) = J(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(J);
    QuadRule r;
    for (int i = 0; i < n; ++i) {
        const double x = es.eigenvalues()(i);
        const double w = 2.0 * es.eigenvectors()(0, i) * es.eigenvectors()(0, i);
        r.nodes.push_back(Vec::Constant(1, 0.5 * (x + 1.0)));
        r.weights.push_back(0.5 * w);
    }
    return r;
}

QuadRule simplex_rule(int k, int points_per_axis) {
    if (k < 0 || k > 2) throw std::invalid_argument("simplex rules are implemented for k <= 2");
    QuadRule r;
    if (k == 0) {
        r.nodes.push_back(Vec::Zero(0));
        r.weights.push_back(1.0);
        return r;
    }
    const QuadRule g = gauss_legendre(points_per_axis);
    if (k == 1) return g;
    // (u, w) in [0,1]^2 -> (u, (1-u) w), Jacobian 1-u.
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) {
            const double u = g.nodes[i](0), w = g.nodes[j](0);
            Vec p(2);
            p << u, (1.0 - u) * w;
            r.nodes.push_back(p);
            r.weights.push_back(g.weights[i] * g.weights[j] * (1.0 - u));
        }
    return r;
}

QuadRule rectangle_rule(int n1, int n2) {
    const QuadRule a = gauss_legendre(n1), b = gauss_legendre(n2);
    QuadRule r;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            Vec p(2);
            p << a.nodes[i](0), b.nodes[j](0);
            r.nodes.push_back(p);
            r.weights.push_back(a.weights[i] * b.weights[j]);
        }
    return r;
}

}  // namespace atiyah
