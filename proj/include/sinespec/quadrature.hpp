#pragma once

#include <vector>

namespace sinespec {

/// Gauss-Legendre nodes and weights mapped affinely onto (0, pi).
/// Nodes are strictly interior and ascending; weights are positive and
/// sum to pi. Exact for polynomials of degree 2*size()-1 in y.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    int size() const { return static_cast<int>(nodes.size()); }
};

/// Build an n_points Gauss-Legendre rule on (0, pi). Requires n_points >= 8.
QuadratureRule build_quadrature(int n_points);

}  // namespace sinespec
