#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace atiyah {

template <typename Scalar>
using VecT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vec = VecT<double>;
using Mat = MatT<double>;

// Matrix Lie algebra with a fixed basis, structure constants and an
// invariant symmetric form. Immutable after construction.
template <typename Scalar>
class LieAlgebraT {
public:
    using V = VecT<Scalar>;
    using M = MatT<Scalar>;

    LieAlgebraT() = default;

    LieAlgebraT(std::vector<M> basis, M form) : basis_(std::move(basis)), form_(std::move(form)) {
        const int n = dim();
        if (n == 0) throw std::invalid_argument("empty basis");
        const int N = static_cast<int>(basis_[0].rows());
        M gram(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) gram(i, j) = basis_[i].cwiseProduct(basis_[j]).sum();
        Eigen::FullPivLU<M> lu(gram);
        if (lu.rank() < n) throw std::invalid_argument("basis matrices are linearly dependent");
        gram_inv_ = lu.inverse();
        flat_.resize(N * N, n);
        for (int i = 0; i < n; ++i) flat_.col(i) = Eigen::Map<const V>(basis_[i].data(), N * N);
        c_.assign(n * n, V::Zero(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) c_[i * n + j] = vee(basis_[i] * basis_[j] - basis_[j] * basis_[i]);
        Eigen::SelfAdjointEigenSolver<M> es(form_);
        nondegenerate_ = es.eigenvalues().cwiseAbs().minCoeff() > Scalar(1e-12);
    }

    int dim() const { return static_cast<int>(basis_.size()); }
    int matrix_size() const { return static_cast<int>(basis_[0].rows()); }
    const std::vector<M>& basis() const { return basis_; }
    const M& form() const { return form_; }
    bool nondegenerate() const { return nondegenerate_; }

    // c[i][j] as a coefficient vector: [e_i, e_j] = sum_k c(i,j)_k e_k
    const V& structure(int i, int j) const { return c_[i * dim() + j]; }

    M hat(const V& x) const {
        M out = M::Zero(matrix_size(), matrix_size());
        for (int i = 0; i < dim(); ++i) out += x(i) * basis_[i];
        return out;
    }

    V vee(const M& m) const {
        const int N = matrix_size();
        V proj = flat_.transpose() * Eigen::Map<const V>(m.data(), N * N);
        return gram_inv_ * proj;
    }

    V bracket(const V& x, const V& y) const {
        V out = V::Zero(dim());
        for (int i = 0; i < dim(); ++i) {
            if (x(i) == Scalar(0)) continue;
            for (int j = 0; j < dim(); ++j) {
                if (y(j) == Scalar(0)) continue;
                out += x(i) * y(j) * structure(i, j);
            }
        }
        return out;
    }

    Scalar dot(const V& x, const V& y) const { return x.dot(form_ * y); }

    // Residual of the Jacobi identity over all basis triples.
    Scalar jacobi_residual() const {
        Scalar worst = 0;
        const int n = dim();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    V ei = V::Unit(n, i), ej = V::Unit(n, j), ek = V::Unit(n, k);
                    V r = bracket(ei, bracket(ej, ek)) + bracket(ej, bracket(ek, ei)) + bracket(ek, bracket(ei, ej));
                    worst = std::max(worst, r.cwiseAbs().maxCoeff());
                }
        return worst;
    }

    // max |B([x,y],z) + B(y,[x,z])| over basis triples.
    Scalar invariance_residual() const {
        Scalar worst = 0;
        const int n = dim();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    V ei = V::Unit(n, i), ej = V::Unit(n, j), ek = V::Unit(n, k);
                    worst = std::max(worst, std::abs(dot(bracket(ei, ej), ek) + dot(ej, bracket(ei, ek))));
                }
        return worst;
    }

    // max |[E_i,E_j] - sum c E_k| in matrix norm.
    Scalar realization_residual() const {
        Scalar worst = 0;
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j) {
                M lhs = basis_[i] * basis_[j] - basis_[j] * basis_[i];
                worst = std::max(worst, (lhs - hat(structure(i, j))).cwiseAbs().maxCoeff());
            }
        return worst;
    }

private:
    std::vector<M> basis_;
    M form_;
    M gram_inv_;
    M flat_;
    std::vector<V> c_;
    bool nondegenerate_ = false;
};

// A matrix group realized by exponentiating its algebra, with a
// membership test.
template <typename Scalar>
class MatrixGroupT {
public:
    using V = VecT<Scalar>;
    using M = MatT<Scalar>;
    using Membership = std::function<Scalar(const M&)>;

    MatrixGroupT() = default;
    MatrixGroupT(std::string name, LieAlgebraT<Scalar> alg, Membership membership, bool abelian)
        : name_(std::move(name)), alg_(std::move(alg)), membership_(std::move(membership)), abelian_(abelian) {}

    const std::string& name() const { return name_; }
    const LieAlgebraT<Scalar>& algebra() const { return alg_; }
    int dim() const { return alg_.dim(); }
    bool abelian() const { return abelian_; }

    M identity() const { return M::Identity(alg_.matrix_size(), alg_.matrix_size()); }
    M exp(const V& x) const { return alg_.hat(x).exp(); }
    M inverse(const M& g) const { return g.inverse(); }

    // Abelian groups short-circuit so that degenerate quantities vanish exactly.
    V ad(const M& g, const V& x) const {
        if (abelian_) return x;
        return alg_.vee(g * alg_.hat(x) * g.inverse());
    }
    V ad_inv(const M& g, const V& x) const {
        if (abelian_) return x;
        return alg_.vee(g.inverse() * alg_.hat(x) * g);
    }

    // Matrix of Ad_g in basis coordinates.
    M ad_matrix(const M& g) const {
        if (abelian_) return M::Identity(dim(), dim());
        M out(dim(), dim());
        const M gi = g.inverse();
        for (int i = 0; i < dim(); ++i) out.col(i) = alg_.vee(g * alg_.basis()[i] * gi);
        return out;
    }

    Scalar membership_residual(const M& g) const { return membership_ ? membership_(g) : Scalar(0); }

    V bracket(const V& x, const V& y) const { return alg_.bracket(x, y); }
    Scalar dot(const V& x, const V& y) const { return alg_.dot(x, y); }

private:
    std::string name_;
    LieAlgebraT<Scalar> alg_;
    Membership membership_;
    bool abelian_ = false;
};

using LieAlgebra = LieAlgebraT<double>;
using Group = MatrixGroupT<double>;

enum class Side { left, right };

// theta^R(X) = v, theta^L(X) = Ad_{g^-1} v for the tangent vector v g.
inline Vec maurer_cartan(const Group& G, const Mat& g, const Vec& v, Side side) {
    return side == Side::right ? v : G.ad_inv(g, v);
}

// Finite-difference settings shared by every derivative in the library.
struct FdConfig {
    double h = 1e-4;
    double ht = 1e-5;
};

template <typename T>
inline T zero_like(const T& sample) {
    if constexpr (std::is_arithmetic_v<T>)
        return T(0);
    else
        return T::Zero(sample.rows(), sample.cols());
}

template <typename T>
inline bool all_finite(const T& value) {
    if constexpr (std::is_arithmetic_v<T>)
        return std::isfinite(value);
    else
        return value.allFinite();
}

// Richardson-extrapolated central difference of s -> F(s) at s = 0:
// (4 D_h - D_2h) / 3.
template <typename F>
auto richardson(F&& f, double h) -> decltype(f(0.0)) {
    auto fp1 = f(h), fm1 = f(-h), fp2 = f(2 * h), fm2 = f(-2 * h);
    auto d1 = (fp1 - fm1) / (2 * h);
    auto d2 = (fp2 - fm2) / (4 * h);
    auto out = ((4.0 * d1 - d2) / 3.0).eval();
    if (!all_finite(out)) throw std::runtime_error("non-finite finite-difference value");
    return out;
}

template <typename F>
double richardson_scalar(F&& f, double h) {
    const double d1 = (f(h) - f(-h)) / (2 * h);
    const double d2 = (f(2 * h) - f(-2 * h)) / (4 * h);
    const double out = (4 * d1 - d2) / 3;
    if (!std::isfinite(out)) throw std::runtime_error("non-finite finite-difference value");
    return out;
}

// X F(g) = d/ds F(exp(s v) g) at s = 0.
template <typename F>
auto directional_derivative(const Group& G, F&& fn, const Mat& g, const Vec& v, double h)
    -> std::decay_t<decltype(fn(g))> {
    using R = std::decay_t<decltype(fn(g))>;
    if (v.cwiseAbs().maxCoeff() == 0.0) return zero_like<R>(fn(g));
    auto along = [&](double s) -> R { return fn(G.exp(s * v) * g); };
    if constexpr (std::is_arithmetic_v<R>)
        return richardson_scalar(along, h);
    else
        return richardson(along, h);
}

// Built-in catalog.
Group make_su2();
Group make_so3();
Group make_heisenberg3();
Group make_torus2();
Group make_group(const std::string& name);
std::vector<std::string> catalog_names();

// Symmetric multilinear invariant polynomial p(x_1, ..., x_m).
struct InvariantPolynomial {
    int degree = 2;
    std::string label;
    std::function<double(const std::vector<Vec>&)> eval;

    double operator()(const std::vector<Vec>& xs) const { return eval(xs); }
    double on_diagonal(const Vec& x) const { return eval(std::vector<Vec>(degree, x)); }
};

// p(x) = 1/2 x.x, polarized as 1/2 x.y.
InvariantPolynomial quadratic_polynomial(const Group& G);

// An invariant cubic if the catalog knows one for this group.
bool has_cubic_polynomial(const Group& G);
InvariantPolynomial cubic_polynomial(const Group& G);

double symmetry_residual(const InvariantPolynomial& p, const std::vector<Vec>& xs);
double invariance_residual(const Group& G, const InvariantPolynomial& p, const Mat& g, const std::vector<Vec>& xs);

}  // namespace atiyah
