#include "sinespec/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sinespec/errors.hpp"

namespace sinespec {

namespace {
constexpr double kPi = std::numbers::pi;

struct LegendreValue {
    double p;   // P_n(t)
    double dp;  // P_n'(t)
};

LegendreValue legendre(int n, double t) {
    double p0 = 1.0;
    double p1 = 0.0;
    for (int j = 0; j < n; ++j) {
        const double p2 = ((2 * j + 1) * t * p0 - j * p1) / (j + 1);
        p1 = p0;
        p0 = p2;
    }
    // p0 = P_n, p1 = P_{n-1}
    const double dp = n * (t * p0 - p1) / (t * t - 1.0);
    return {p0, dp};
}
}  // namespace

QuadratureRule build_quadrature(int n_points) {
    if (n_points < 8) {
        throw InvalidInputError("build_quadrature: need at least 8 points, got " +
                                std::to_string(n_points));
    }

    QuadratureRule rule;
    rule.nodes.resize(static_cast<size_t>(n_points));
    rule.weights.resize(static_cast<size_t>(n_points));

    const int mid = (n_points + 1) / 2;
    for (int i = 0; i < mid; ++i) {
        // i-th root of P_n counted from t = +1 downwards
        double t = std::cos(kPi * (i + 0.75) / (n_points + 0.5));
        LegendreValue lv{};
        for (int iter = 0; iter < 64; ++iter) {
            lv = legendre(n_points, t);
            const double dt = lv.p / lv.dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) {
                lv = legendre(n_points, t);  // polish derivative at the root
                break;
            }
        }
        const double w_ref = 2.0 / ((1.0 - t * t) * lv.dp * lv.dp);
        const size_t hi = static_cast<size_t>(n_points - 1 - i);
        const size_t lo = static_cast<size_t>(i);
        rule.nodes[hi] = (kPi / 2) * (1.0 + t);
        rule.nodes[lo] = (kPi / 2) * (1.0 - t);
        rule.weights[hi] = (kPi / 2) * w_ref;
        rule.weights[lo] = (kPi / 2) * w_ref;
    }
    return rule;
}

}  // namespace sinespec
