#include "atiyah/qham.hpp"

namespace atiyah {

Vec EquivariantMap::push(const Mat& m, const Vec& X) const {
    if (X.cwiseAbs().maxCoeff() == 0.0) return Vec::Zero(group->dim());
    const Mat d = richardson([&](double s) -> Mat { return phi(group->exp(s * X) * m); }, fd.h);
    return group->algebra().vee(Mat(d * phi(m).inverse()));
}

double EquivariantMap::equivariance_residual(const Mat& k, const Mat& m) const {
    return (phi(k * m * k.inverse()) - k * phi(m) * k.inverse()).cwiseAbs().maxCoeff();
}

EquivariantMap inclusion_map(const Group& G, FdConfig fd) {
    return {&G, [](const Mat& m) { return m; }, fd};
}

EquivariantMap square_map(const Group& G, FdConfig fd) {
    return {&G, [](const Mat& m) -> Mat { return m * m; }, fd};
}

double pullback_seam_residual(const EquivariantMap& phi, const PullbackSection& s, const Mat& m) {
    const Group& G = *phi.group;
    const Vec r = s.xi(m, 1.0) - G.ad(phi(m), s.xi(m, 0.0)) - phi.push(m, s.X(m));
    return r.cwiseAbs().maxCoeff();
}

Section pushed_section(const EquivariantMap& phi, const PullbackSection& s, const Mat& m) {
    Section out;
    const Profile xi = s.xi, dxi = s.dxi;
    out.xi = [xi, m](const Mat&, double t) -> Vec { return xi(m, t); };
    if (dxi) out.dxi = [dxi, m](const Mat&, double t) -> Vec { return dxi(m, t); };
    const Vec v = phi.push(m, s.X(m));
    out.v = [v](const Mat&) -> Vec { return v; };
    out.smooth = true;
    return out;
}

namespace {

Profile profile_bracket(const Group& G, Profile ax, Profile bx, GroupFn aX, GroupFn bX, double h) {
    const Group* gp = &G;
    return [gp, ax, bx, aX, bX, h](const Mat& m, double t) -> Vec {
        Vec r = -gp->bracket(ax(m, t), bx(m, t));
        r += directional_derivative(*gp, [&](const Mat& q) -> Vec { return bx(q, t); }, m, aX(m), h);
        r -= directional_derivative(*gp, [&](const Mat& q) -> Vec { return ax(q, t); }, m, bX(m), h);
        return r;
    };
}

}  // namespace

PullbackSection pullback_bracket(const EquivariantMap& phi, const PullbackSection& a, const PullbackSection& b) {
    const Group& G = *phi.group;
    const double h = phi.fd.h;
    PullbackSection out;
    out.X = field_bracket(G, a.X, b.X, phi.fd);
    out.xi = profile_bracket(G, a.xi, b.xi, a.X, b.X, h);
    if (a.dxi && b.dxi) {
        const Group* gp = &G;
        const Profile ax = a.xi, adx = a.dxi, bx = b.xi, bdx = b.dxi;
        const GroupFn aX = a.X, bX = b.X;
        out.dxi = [gp, ax, adx, bx, bdx, aX, bX, h](const Mat& m, double t) -> Vec {
            Vec r = -gp->bracket(adx(m, t), bx(m, t)) - gp->bracket(ax(m, t), bdx(m, t));
            r += directional_derivative(*gp, [&](const Mat& q) -> Vec { return bdx(q, t); }, m, aX(m), h);
            r -= directional_derivative(*gp, [&](const Mat& q) -> Vec { return adx(q, t); }, m, bX(m), h);
            return r;
        };
    }
    return out;
}

PullbackSection pullback_generator(const Group& G, const Vec& x) {
    const Group* gp = &G;
    const int n = G.dim();
    PullbackSection s;
    s.X = [gp, x](const Mat& m) -> Vec { return gp->ad(m, x) - x; };
    s.xi = [x](const Mat&, double) -> Vec { return -x; };
    s.dxi = [n](const Mat&, double) -> Vec { return Vec::Zero(n); };
    return s;
}

PullbackSection sample_pullback_section(const EquivariantMap& phi, Sampler& s, BumpFunction f) {
    const Group* gp = phi.group;
    const int n = gp->dim();
    const Vec y0 = s.vector(n), d = s.vector(n), a0 = s.vector(n), d2 = s.vector(n);
    const double c = s.normal(), c2 = s.normal();
    PullbackSection out;
    out.X = [gp, y0, d, c](const Mat& m) -> Vec {
        const Vec y = y0 + c * gp->ad(m, d);
        return gp->ad(m, y) - y;
    };
    const GroupFn a = [gp, a0, d2, c2](const Mat& m) -> Vec { return a0 + c2 * gp->ad(m, d2); };
    const GroupFn X = out.X;
    const GroupFn jump = [gp, phi, a, X](const Mat& m) -> Vec {
        const Vec am = a(m);
        return gp->ad(phi(m), am) + phi.push(m, X(m)) - am;
    };
    out.xi = [a, jump, f](const Mat& m, double t) -> Vec {
        const double ft = f(t);
        return ft == 0.0 ? a(m) : Vec(a(m) + ft * jump(m));
    };
    out.dxi = [jump, f, n](const Mat& m, double t) -> Vec {
        const double df = f.derivative(t);
        return df == 0.0 ? Vec(Vec::Zero(n)) : Vec(df * jump(m));
    };
    return out;
}

PullbackForm pullback_phi(const EquivariantMap& phi, const AlgebroidForm& f) {
    return {f.degree, [phi, f](const Mat& m, const std::vector<PullbackSection>& xs) {
                std::vector<Section> pushed;
                pushed.reserve(xs.size());
                for (const auto& s : xs) pushed.push_back(pushed_section(phi, s, m));
                return f.eval(phi(m), pushed);
            }};
}

Vec fundamental_label(const Group& G, const Mat& m, const Vec& u) {
    const Mat A = G.ad_matrix(m) - Mat::Identity(G.dim(), G.dim());
    return A.completeOrthogonalDecomposition().solve(u);
}

MForm ghjw_omega(const Group& G, int sign) {
    const Group* gp = &G;
    return {2, [gp, sign](const Mat& m, const std::vector<Vec>& xs) {
                return 0.5 * sign * gp->dot(xs[0], gp->ad_inv(m, xs[1]) - gp->ad(m, xs[1]));
            }};
}

MixedForm<FundamentalCalc, double> pulled_eta_equivariant(const Group& G, const EquivariantMap& phi, const Vec& x) {
    const Group* gp = &G;
    auto u = [gp, phi](const Mat& m, const Vec& y) { return phi.push(m, gp->ad(m, y) - y); };
    MixedForm<FundamentalCalc, double> out;
    out.add(MForm{3, [gp, phi, u](const Mat& m, const std::vector<Vec>& ys) {
                      return cartan_eta(*gp).eval({phi(m)}, {u(m, ys[0]), u(m, ys[1]), u(m, ys[2])});
                  }});
    out.add(MForm{1, [gp, phi, u, x](const Mat& m, const std::vector<Vec>& ys) {
                      const Vec v = u(m, ys[0]);
                      return -0.5 * gp->dot(gp->ad_inv(phi(m), v) + v, x);
                  }});
    return out;
}

double ghjw_oracle_residual(const Group& G, const EquivariantMap& phi, const MForm& omega, const std::vector<Mat>& points,
                            const std::vector<Vec>& xs, Sampler& s) {
    const FundamentalCalc calc{&G, phi.fd};
    double worst = 0;
    for (const Vec& x : xs) {
        MixedForm<FundamentalCalc, double> w;
        w.add(omega);
        const auto dG = equivariant_differential(calc, w, x);
        const auto eta = pulled_eta_equivariant(G, phi, x);
        for (const Mat& m : points) {
            const std::vector<Vec> ys{s.vector(G.dim()), s.vector(G.dim()), s.vector(G.dim())};
            for (int k : {1, 3}) {
                const std::vector<Vec> args(ys.begin(), ys.begin() + k);
                const double a = dG.has(k) ? dG.at(k).eval(m, args) : 0.0;
                const double b = eta.has(k) ? eta.at(k).eval(m, args) : 0.0;
                worst = std::max(worst, std::abs(a + b));
            }
        }
    }
    return worst;
}

int ghjw_sign(const Group& G, const EquivariantMap& phi, const std::vector<Mat>& points, const std::vector<Vec>& xs,
              Sampler& s, double tol) {
    for (int sign : {1, -1}) {
        Sampler local(s.engine()());
        if (ghjw_oracle_residual(G, phi, ghjw_omega(G, sign), points, xs, local) < tol) return sign;
    }
    throw std::runtime_error("no sign of omega satisfies d_G omega = -Phi^* eta_G");
}

PullbackForm anchor_pullback(const Group& G, const MForm& omega) {
    const Group* gp = &G;
    return {omega.degree, [gp, omega](const Mat& m, const std::vector<PullbackSection>& xs) {
                std::vector<Vec> labels;
                for (const auto& s : xs) labels.push_back(fundamental_label(*gp, m, s.X(m)));
                return omega.eval(m, labels);
            }};
}

ClassPoint class_point(const Group& G, const Vec& a, const Mat& k) {
    return {k * G.exp(a) * k.inverse(), G.ad(k, a)};
}

std::vector<BasisElement> truncated_basis(const Group& G, const ClassPoint& p, int n_max) {
    const int n = G.dim();
    std::vector<BasisElement> out;
    const Mat A = G.ad_matrix(p.m) - Mat::Identity(n, n);
    Eigen::JacobiSVD<Mat> svd(A, Eigen::ComputeFullV);
    const Vec sv = svd.singularValues();
    const double cut = 1e-10 * std::max(1.0, sv.size() ? sv(0) : 0.0);
    for (int i = 0; i < n; ++i) {
        if (sv(i) <= cut) break;
        const Vec x = svd.matrixV().col(i);
        const Vec u = A * x;
        Section s;
        s.xi = [x](const Mat&, double) -> Vec { return -x; };
        s.dxi = [n](const Mat&, double) -> Vec { return Vec::Zero(n); };
        s.v = [u](const Mat&) -> Vec { return u; };
        s.smooth = true;
        out.push_back({x, u, s, "tangent" + std::to_string(i)});
    }
    Mat ad_a(n, n);
    for (int j = 0; j < n; ++j) ad_a.col(j) = G.bracket(p.log, Vec::Unit(n, j));
    const double w = 2 * M_PI;
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k <= n_max; ++k) {
            for (int kind = 0; kind < (k == 0 ? 1 : 2); ++kind) {
                auto c = [k, kind, w](double t) { return kind == 0 ? std::cos(w * k * t) : std::sin(w * k * t); };
                auto dc = [k, kind, w](double t) {
                    return kind == 0 ? -w * k * std::sin(w * k * t) : w * k * std::cos(w * k * t);
                };
                const Vec e = Vec::Unit(n, j);
                Section s;
                s.xi = [ad_a, c, e](const Mat&, double t) -> Vec { return (t * ad_a).exp() * (c(t) * e); };
                s.dxi = [ad_a, c, dc, e](const Mat&, double t) -> Vec {
                    const Mat E = (t * ad_a).exp();
                    return ad_a * (E * (c(t) * e)) + E * (dc(t) * e);
                };
                s.v = [n](const Mat&) -> Vec { return Vec::Zero(n); };
                s.smooth = true;
                out.push_back({Vec::Zero(n), Vec::Zero(n), s,
                               std::string(kind == 0 ? "cos" : "sin") + std::to_string(k) + "_e" + std::to_string(j)});
            }
        }
    }
    return out;
}

double basis_seam_residual(const Group& G, const BasisElement& b, const Mat& m) { return seam_residual(G, b.xi, m); }

namespace {

struct Samples {
    std::vector<std::vector<Vec>> value, deriv;
};

Samples sample_basis(const std::vector<BasisElement>& basis, const Mat& m, const QuadRule& rule) {
    Samples s;
    for (const auto& b : basis) {
        std::vector<Vec> v, d;
        for (const auto& node : rule.nodes) {
            v.push_back(b.xi.xi(m, node(0)));
            d.push_back(b.xi.dxi(m, node(0)));
        }
        s.value.push_back(std::move(v));
        s.deriv.push_back(std::move(d));
    }
    return s;
}

}  // namespace

Mat kernel_gram(const Group& G, const MForm& omega, const std::vector<BasisElement>& basis, const Mat& m,
                int quad_points) {
    if (!G.algebra().nondegenerate()) throw std::domain_error("kernel computation needs a nondegenerate inner product");
    const QuadRule rule = gauss_legendre(quad_points);
    const Samples s = sample_basis(basis, m, rule);
    const int N = static_cast<int>(basis.size());
    Mat out(N, N);
    for (int i = 0; i < N; ++i) {
        const Vec adx0 = G.ad(m, basis[i].xi.xi(m, 0.0));
        for (int j = 0; j < N; ++j) {
            double acc = 0;
            for (std::size_t q = 0; q < rule.size(); ++q) acc += rule.weights[q] * G.dot(s.deriv[i][q], s.value[j][q]);
            acc -= 0.5 * G.dot(basis[i].X, basis[j].X) + G.dot(adx0, basis[j].X);
            acc += omega.eval(m, {basis[i].label, basis[j].label});
            out(i, j) = acc;
        }
    }
    return out;
}

KernelReport gram_kernel(const Group& G, const MForm& omega, const std::vector<BasisElement>& basis, const Mat& m,
                         double threshold, int quad_points) {
    KernelReport r;
    r.gram = kernel_gram(G, omega, basis, m, quad_points);
    Eigen::JacobiSVD<Mat> svd(r.gram, Eigen::ComputeFullV);
    r.singular_values = svd.singularValues();
    const double top = r.singular_values(0);
    std::vector<int> idx;
    for (int i = 0; i < r.singular_values.size(); ++i)
        if (r.singular_values(i) < threshold * top) idx.push_back(i);
    r.dimension = static_cast<int>(idx.size());
    r.kernel = Mat(r.gram.cols(), r.dimension);
    for (int c = 0; c < r.dimension; ++c) r.kernel.col(c) = svd.matrixV().col(idx[c]);

    // basis conditioning: L2 Gram of the profiles plus the anchors
    const QuadRule rule = gauss_legendre(quad_points);
    const Samples s = sample_basis(basis, m, rule);
    const int N = static_cast<int>(basis.size());
    Mat B(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            double acc = basis[i].X.dot(basis[j].X);
            for (std::size_t q = 0; q < rule.size(); ++q) acc += rule.weights[q] * s.value[i][q].dot(s.value[j][q]);
            B(i, j) = acc;
        }
    const Vec ev = Eigen::SelfAdjointEigenSolver<Mat>(B).eigenvalues();
    r.basis_rank_gap = ev.minCoeff() / ev.maxCoeff();
    if (r.basis_rank_gap < 1e-12) throw std::runtime_error("truncated basis is rank deficient");
    return r;
}

Vec generator_row(const Group& G, const MForm& omega, const std::vector<BasisElement>& basis, const Mat& m,
                  const Vec& x, int) {
    const Vec u = G.ad(m, x) - x;
    const Vec adx0 = G.ad(m, Vec(-x));
    Vec row(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        row(j) = omega.eval(m, {x, basis[j].label}) - 0.5 * G.dot(u, basis[j].X) - G.dot(adx0, basis[j].X);
    return row;
}

double max_loop_derivative(const std::vector<BasisElement>& basis, const Vec& coeffs, const Mat& m, int samples) {
    double worst = 0;
    for (int k = 0; k < samples; ++k) {
        const double t = static_cast<double>(k) / (samples - 1);
        Vec d = Vec::Zero(basis[0].X.size());
        for (std::size_t i = 0; i < basis.size(); ++i) d += coeffs(i) * basis[i].xi.dxi(m, t);
        worst = std::max(worst, d.norm());
    }
    return worst;
}

Section project_Aprime(const Group& G, const Section& xi) {
    const Group* gp = &G;
    Section out;
    out.xi = [xi](const Mat& g, double t) -> Vec { return xi.xi(g, t) - xi.xi(g, 0.0); };
    out.dxi = xi.dxi;
    out.v = [gp, xi](const Mat& g) -> Vec {
        const Vec x0 = xi.xi(g, 0.0);
        return xi.v(g) + gp->ad(g, x0) - x0;
    };
    out.smooth = xi.smooth;
    return out;
}

PullbackSection project_Aprime(const Group& G, const PullbackSection& s) {
    const Group* gp = &G;
    PullbackSection out;
    out.xi = [s](const Mat& m, double t) -> Vec { return s.xi(m, t) - s.xi(m, 0.0); };
    out.dxi = s.dxi;
    out.X = [gp, s](const Mat& m) -> Vec {
        const Vec x0 = s.xi(m, 0.0);
        return s.X(m) + gp->ad(m, x0) - x0;
    };
    return out;
}

}  // namespace atiyah
