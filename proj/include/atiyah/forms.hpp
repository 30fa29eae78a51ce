#pragma once

#include "atiyah/lie.hpp"

#include <map>
#include <optional>

namespace atiyah {

// A degree-k alternating form, given as an evaluator on k tangent objects
// of a calculus (constant frames for de Rham forms, sections for
// algebroid forms). Value is double or Vec.
template <class Calc, class Value = double>
struct Form {
    using Point = typename Calc::Point;
    using Tangent = typename Calc::Tangent;
    using Eval = std::function<Value(const Point&, const std::vector<Tangent>&)>;

    int degree = 0;
    Eval eval;

    Value operator()(const Point& p, const std::vector<Tangent>& xs) const {
        if (static_cast<int>(xs.size()) != degree) throw std::invalid_argument("form arity mismatch");
        return eval(p, xs);
    }
};

namespace detail {

template <class T>
std::vector<T> without(const std::vector<T>& xs, int i) {
    std::vector<T> out;
    out.reserve(xs.size());
    for (int k = 0; k < static_cast<int>(xs.size()); ++k)
        if (k != i) out.push_back(xs[k]);
    return out;
}

template <class T>
std::vector<T> without2(const std::vector<T>& xs, int i, int j) {
    std::vector<T> out;
    for (int k = 0; k < static_cast<int>(xs.size()); ++k)
        if (k != i && k != j) out.push_back(xs[k]);
    return out;
}

template <class V>
void accumulate(std::optional<V>& acc, const V& term, double sign) {
    if (acc)
        *acc = *acc + sign * term;
    else
        acc = V(sign * term);
}

// Ordered partitions of {0..r-1} into consecutive blocks of the given
// sizes, increasing inside each block, with the permutation sign.
struct Shuffle {
    std::vector<int> order;
    int sign = 1;
};

std::vector<Shuffle> shuffles(const std::vector<int>& sizes);

}  // namespace detail

template <class Calc, class V>
Form<Calc, V> form_sum(const Form<Calc, V>& a, const Form<Calc, V>& b, double cb = 1.0) {
    if (a.degree != b.degree) throw std::invalid_argument("form_sum degree mismatch");
    return {a.degree, [a, b, cb](const auto& p, const auto& xs) -> V { return a.eval(p, xs) + cb * b.eval(p, xs); }};
}

template <class Calc, class V>
Form<Calc, V> form_scale(const Form<Calc, V>& a, double c) {
    return {a.degree, [a, c](const auto& p, const auto& xs) -> V { return c * a.eval(p, xs); }};
}

// iota_X with X a tangent object inserted in the first slot.
template <class Calc, class V>
Form<Calc, V> contract(const Form<Calc, V>& phi, const typename Calc::Tangent& X) {
    if (phi.degree < 1) throw std::invalid_argument("cannot contract a 0-form");
    return {phi.degree - 1, [phi, X](const auto& p, const auto& xs) -> V {
                std::vector<typename Calc::Tangent> args{X};
                args.insert(args.end(), xs.begin(), xs.end());
                return phi.eval(p, args);
            }};
}

// Pointwise contraction with a field given by its value at each point.
template <class Calc, class V>
Form<Calc, V> contract_field(const Form<Calc, V>& phi,
                             std::function<typename Calc::Tangent(const typename Calc::Point&)> field) {
    if (phi.degree < 1) throw std::invalid_argument("cannot contract a 0-form");
    return {phi.degree - 1, [phi, field](const auto& p, const auto& xs) -> V {
                std::vector<typename Calc::Tangent> args{field(p)};
                args.insert(args.end(), xs.begin(), xs.end());
                return phi.eval(p, args);
            }};
}

// Koszul formula:
// d phi(X_0..X_k) = sum_i (-1)^i X_i phi(..^i..)
//                 + sum_{i<j} (-1)^{i+j} phi([X_i,X_j], ..^i..^j..)
template <class Calc, class V>
Form<Calc, V> exterior_derivative(const Calc& calc, const Form<Calc, V>& phi) {
    return {phi.degree + 1, [calc, phi](const typename Calc::Point& p, const std::vector<typename Calc::Tangent>& xs) -> V {
                const int n = static_cast<int>(xs.size());
                std::optional<V> acc;
                for (int i = 0; i < n; ++i) {
                    const auto rest = detail::without(xs, i);
                    const V term = calc.derivative(p, xs[i], [&](const typename Calc::Point& q) { return phi.eval(q, rest); });
                    detail::accumulate(acc, term, (i % 2 == 0) ? 1.0 : -1.0);
                }
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        std::vector<typename Calc::Tangent> args{calc.bracket(xs[i], xs[j])};
                        const auto rest = detail::without2(xs, i, j);
                        args.insert(args.end(), rest.begin(), rest.end());
                        detail::accumulate(acc, phi.eval(p, args), ((i + j) % 2 == 0) ? 1.0 : -1.0);
                    }
                if (!acc) return phi.eval(p, {});
                return *acc;
            }};
}

// Cartan: L_X = iota_X d + d iota_X.
template <class Calc, class V>
Form<Calc, V> lie_derivative(const Calc& calc, const Form<Calc, V>& phi, const typename Calc::Tangent& X) {
    auto a = contract(exterior_derivative(calc, phi), X);
    if (phi.degree == 0) return a;
    return form_sum(a, exterior_derivative(calc, contract(phi, X)));
}

// L_X phi evaluated directly from its definition on arguments:
// X phi(Y..) - sum phi(.., [X,Y_i], ..).
template <class Calc, class V>
Form<Calc, V> lie_derivative_direct(const Calc& calc, const Form<Calc, V>& phi, const typename Calc::Tangent& X) {
    return {phi.degree, [calc, phi, X](const typename Calc::Point& p, const std::vector<typename Calc::Tangent>& ys) -> V {
                V acc = calc.derivative(p, X, [&](const typename Calc::Point& q) { return phi.eval(q, ys); });
                for (std::size_t i = 0; i < ys.size(); ++i) {
                    auto args = ys;
                    args[i] = calc.bracket(X, ys[i]);
                    acc = acc - phi.eval(p, args);
                }
                return acc;
            }};
}

// p(mu_1 ^ ... ^ mu_m) for a multilinear map p on Lie algebra values.
template <class Calc, class Out>
Form<Calc, Out> wedge_map(std::function<Out(const std::vector<Vec>&)> op, std::vector<Form<Calc, Vec>> mus) {
    std::vector<int> sizes;
    int total = 0;
    for (const auto& m : mus) {
        sizes.push_back(m.degree);
        total += m.degree;
    }
    auto table = detail::shuffles(sizes);
    return {total, [op, mus, sizes, table](const typename Calc::Point& p, const std::vector<typename Calc::Tangent>& xs) -> Out {
                std::optional<Out> acc;
                std::vector<Vec> vals(mus.size());
                for (const auto& sh : table) {
                    int pos = 0;
                    for (std::size_t b = 0; b < mus.size(); ++b) {
                        std::vector<typename Calc::Tangent> args;
                        for (int k = 0; k < sizes[b]; ++k) args.push_back(xs[sh.order[pos++]]);
                        vals[b] = mus[b].eval(p, args);
                    }
                    detail::accumulate(acc, op(vals), static_cast<double>(sh.sign));
                }
                return *acc;
            }};
}

// Forms of mixed degree, used for equivariant forms at a fixed x.
template <class Calc, class V = double>
struct MixedForm {
    std::map<int, Form<Calc, V>> parts;

    void add(const Form<Calc, V>& f, double c = 1.0) {
        auto it = parts.find(f.degree);
        if (it == parts.end())
            parts.emplace(f.degree, c == 1.0 ? f : form_scale(f, c));
        else
            it->second = form_sum(it->second, f, c);
    }
    bool has(int k) const { return parts.count(k) > 0; }
    const Form<Calc, V>& at(int k) const { return parts.at(k); }
};

// d_G = d - iota_{x}, with the generator supplied by the calculus.
template <class Calc, class V>
MixedForm<Calc, V> equivariant_differential(const Calc& calc, const MixedForm<Calc, V>& phi, const Vec& x) {
    MixedForm<Calc, V> out;
    auto field = calc.generator(x);
    for (const auto& [k, f] : phi.parts) {
        out.add(exterior_derivative(calc, f));
        if (k >= 1) out.add(contract_field<Calc, V>(f, field), -1.0);
    }
    return out;
}

}  // namespace atiyah
