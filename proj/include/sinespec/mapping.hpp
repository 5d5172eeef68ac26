#pragma once

#include "sinespec/expansion.hpp"

namespace sinespec {

/// A point of the real line together with its image in the computational
/// interval (0, pi) under y = pi/2 + arctan(x).
struct MapPoint {
    double x;  ///< physical coordinate
    double y;  ///< computational coordinate in [0, pi]
};

/// Metric factors of the arctan map at a computational coordinate y:
/// inv_jac = 1/(dx/dy) = sin^2(y), inv_jac_deriv = d/dy sin^2(y) = sin(2y).
struct MetricTerms {
    double inv_jac;
    double inv_jac_deriv;
};

/// y = pi/2 + arctan(x). Strictly increasing; maps the line onto (0, pi).
double to_computational(double x);

/// x = tan(y - pi/2), the inverse map. Requires 0 < y < pi strictly;
/// the endpoints map to -inf/+inf and are rejected.
double to_physical(double y);

/// Build the point pair for a physical coordinate.
MapPoint map_from_physical(double x);

/// Metric factors at y in [0, pi]. The endpoints are valid and yield zeros.
MetricTerms metric_terms(double y);

/// Evaluate a sine expansion at a physical-space point:
/// sum_m c_m sin(m (pi/2 + arctan(x))).
double eval_expansion_physical(const SineExpansion1D& e, double x);

}  // namespace sinespec
