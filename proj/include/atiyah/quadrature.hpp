#pragma once

#include "atiyah/lie.hpp"

namespace atiyah {

// Nodes and weights of a rule on [0,1] or on a simplex.
struct QuadRule {
    std::vector<Vec> nodes;
    std::vector<double> weights;

    std::size_t size() const { return weights.size(); }
    double total_weight() const;
};

// n-point Gauss-Legendre on [0,1] (Golub-Welsch).
QuadRule gauss_legendre(int n);

// Tensor Gauss-Legendre mapped onto the standard simplex
// {p_i >= 0, sum p_i <= 1} of dimension k <= 2 (Duffy collapse for k = 2).
// Nodes are the k free coordinates.
QuadRule simplex_rule(int k, int points_per_axis = 8);

// Tensor rule on [0,1]^2: first coordinate n1 points, second n2.
QuadRule rectangle_rule(int n1, int n2);

}  // namespace atiyah
