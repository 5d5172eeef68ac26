#include "sinespec/mapping.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace sinespec {

namespace {
constexpr double kPi = std::numbers::pi;
}

double to_computational(double x) {
    if (!std::isfinite(x)) {
        throw InvalidInputError("to_computational: x must be finite, got " + std::to_string(x));
    }
    return kPi / 2 + std::atan(x);
}

double to_physical(double y) {
    if (!(y >= 0.0 && y <= kPi)) {
        throw InvalidInputError("to_physical: y must lie in [0, pi], got " + std::to_string(y));
    }
    if (y == 0.0 || y == kPi) {
        throw DomainEndpointError("to_physical: y = " + std::to_string(y) +
                                  " is an interval endpoint (maps to infinity)");
    }
    return std::tan(y - kPi / 2);
}

MapPoint map_from_physical(double x) {
    return MapPoint{x, to_computational(x)};
}

MetricTerms metric_terms(double y) {
    if (!(y >= 0.0 && y <= kPi)) {
        throw InvalidInputError("metric_terms: y must lie in [0, pi], got " + std::to_string(y));
    }
    if (y == 0.0 || y == kPi) return MetricTerms{0.0, 0.0};  // sin(double pi) is not exactly 0
    const double s = std::sin(y);
    return MetricTerms{s * s, std::sin(2 * y)};
}

double eval_expansion_physical(const SineExpansion1D& e, double x) {
    if (e.size() == 0) throw InvalidInputError("eval_expansion_physical: empty expansion");
    const double y = to_computational(x);
    double sum = 0.0;
    for (int m = 1; m <= e.size(); ++m) {
        sum += e.c[static_cast<size_t>(m - 1)] * std::sin(m * y);
    }
    return sum;
}

}  // namespace sinespec
