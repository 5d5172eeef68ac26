#include "sinespec/projection.hpp"

#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "sinespec/mapping.hpp"

namespace sinespec {

namespace {
constexpr double kPi = std::numbers::pi;

std::vector<double> sample_at_nodes(const ScalarFunction& f, const QuadratureRule& rule) {
    std::vector<double> vals(rule.nodes.size());
    for (size_t q = 0; q < rule.nodes.size(); ++q) {
        const double v = f(rule.nodes[q]);
        if (!std::isfinite(v)) {
            throw EvaluationError("project_1d: integrand non-finite at node y = " +
                                      std::to_string(rule.nodes[q]),
                                  rule.nodes[q]);
        }
        vals[q] = v;
    }
    return vals;
}

MomentVector moments_from_samples(std::span<const double> vals, const QuadratureRule& rule,
                                  int basis_size) {
    MomentVector out(basis_size);
    for (int m = 1; m <= basis_size; ++m) {
        double sum = 0.0;  // sequential summation keeps results bit-reproducible
        for (size_t q = 0; q < vals.size(); ++q) {
            sum += rule.weights[q] * std::sin(m * rule.nodes[q]) * vals[q];
        }
        out.values[static_cast<size_t>(m - 1)] = sum;
    }
    return out;
}

void validate(const QuadratureRule& rule, int basis_size) {
    if (basis_size < 1) throw InvalidInputError("projection: basis_size must be >= 1");
    if (rule.size() == 0) throw InvalidInputError("projection: empty quadrature rule");
}
}  // namespace

MomentVector project_1d(const ScalarFunction& f_of_y, const QuadratureRule& rule,
                        int basis_size) {
    validate(rule, basis_size);
    return moments_from_samples(sample_at_nodes(f_of_y, rule), rule, basis_size);
}

MomentVector project_1d_physical(const ScalarFunction& f_of_x, const QuadratureRule& rule,
                                 int basis_size) {
    return project_1d([&](double y) { return f_of_x(to_physical(y)); }, rule, basis_size);
}

MomentTensor3D project_3d_separable(const ScalarFunction& fx, const ScalarFunction& fy,
                                    const ScalarFunction& fz, const QuadratureRule& rule,
                                    int basis_size) {
    validate(rule, basis_size);
    const MomentVector mx = project_1d(fx, rule, basis_size);
    const MomentVector my = project_1d(fy, rule, basis_size);
    const MomentVector mz = project_1d(fz, rule, basis_size);

    MomentTensor3D out(basis_size);
    for (int l = 0; l < basis_size; ++l) {
        for (int m = 0; m < basis_size; ++m) {
            const double lm = mx.values[static_cast<size_t>(l)] * my.values[static_cast<size_t>(m)];
            for (int n = 0; n < basis_size; ++n) {
                out(l, m, n) = lm * mz.values[static_cast<size_t>(n)];
            }
        }
    }
    return out;
}

SineExpansion1D moments_to_coefficients(const MomentVector& m) {
    SineExpansion1D e(m.size());
    for (size_t i = 0; i < m.values.size(); ++i) {
        e.c[i] = (2.0 / kPi) * m.values[i];
    }
    return e;
}

bool parity_keeps_index(int m, Symmetry symmetry) {
    const bool odd = (m % 2) != 0;
    return symmetry == Symmetry::SymmetricAboutCenter ? odd : !odd;
}

namespace {
void restrict_span(std::span<double> v, Symmetry symmetry) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (!parity_keeps_index(static_cast<int>(i) + 1, symmetry)) v[i] = 0.0;
    }
}
}  // namespace

MomentVector parity_restrict(MomentVector m, Symmetry symmetry) {
    restrict_span(m.values, symmetry);
    return m;
}

SineExpansion1D parity_restrict(SineExpansion1D e, Symmetry symmetry) {
    restrict_span(e.c, symmetry);
    return e;
}

}  // namespace sinespec
