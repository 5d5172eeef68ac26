#include "sinespec/galerkin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace sinespec {

namespace {
constexpr double kPi = std::numbers::pi;

// Bracket of the closed-form first-derivative metric block,
// [M12]_mn = n*pi/16 * (-d_{m-n,4} + d_{n-m,4} - d_{m+n,4}
//            + 2 d_{m-n,2} - 2 d_{n-m,2} + 2 d_{m+n,2}),  1-based m, n.
double m12_entry(int m, int n) {
    int b = 0;
    if (m - n == 4) b -= 1;
    if (n - m == 4) b += 1;
    if (m + n == 4) b -= 1;
    if (m - n == 2) b += 2;
    if (n - m == 2) b -= 2;
    if (m + n == 2) b += 2;
    return n * kPi / 16 * b;
}

// [M2]_mn = -n^2*pi/32 * (d_{m-n,4} + d_{n-m,4} - d_{m+n,4}
//           - 4 d_{m-n,2} - 4 d_{n-m,2} + 4 d_{m+n,2} + 6 d_{m,n}).
double m2_entry(int m, int n) {
    int b = 0;
    if (m - n == 4) b += 1;
    if (n - m == 4) b += 1;
    if (m + n == 4) b -= 1;
    if (m - n == 2) b -= 4;
    if (n - m == 2) b -= 4;
    if (m + n == 2) b += 4;
    if (m == n) b += 6;
    return -static_cast<double>(n) * n * kPi / 32 * b;
}

void check_basis_size(int basis_size) {
    if (basis_size < 1) {
        throw InvalidInputError("assemble: basis_size must be >= 1, got " +
                                std::to_string(basis_size));
    }
}
}  // namespace

GalerkinMatrix1D::GalerkinMatrix1D(int dimension, std::vector<MatrixEntry> entries,
                                   bool symmetric)
    : n_(dimension), entries_(std::move(entries)), symmetric_(symmetric) {
    if (dimension < 1) throw InvalidInputError("GalerkinMatrix1D: dimension must be >= 1");
    for (const auto& e : entries_) {
        if (e.row < 0 || e.row >= n_ || e.col < 0 || e.col >= n_) {
            throw InvalidInputError("GalerkinMatrix1D: entry index out of range");
        }
        if (!std::isfinite(e.value)) {
            throw InvalidInputError("GalerkinMatrix1D: non-finite entry value");
        }
    }
    std::sort(entries_.begin(), entries_.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
}

double GalerkinMatrix1D::entry(int row, int col) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{row, col},
                               [](const MatrixEntry& e, const std::pair<int, int>& rc) {
                                   return e.row != rc.first ? e.row < rc.first
                                                            : e.col < rc.second;
                               });
    if (it != entries_.end() && it->row == row && it->col == col) return it->value;
    return 0.0;
}

void GalerkinMatrix1D::apply(std::span<const double> x, std::span<double> y) const {
    if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_) {
        throw InvalidInputError("GalerkinMatrix1D::apply: size mismatch");
    }
    std::fill(y.begin(), y.end(), 0.0);
    for (const auto& e : entries_) {
        y[static_cast<size_t>(e.row)] += e.value * x[static_cast<size_t>(e.col)];
    }
}

std::vector<double> GalerkinMatrix1D::diagonal() const {
    std::vector<double> d(static_cast<size_t>(n_), 0.0);
    for (const auto& e : entries_) {
        if (e.row == e.col) d[static_cast<size_t>(e.row)] = e.value;
    }
    return d;
}

GalerkinMatrix1D assemble_poisson_1d(int basis_size) {
    check_basis_size(basis_size);
    std::vector<MatrixEntry> entries;
    entries.reserve(static_cast<size_t>(basis_size) * 7);
    for (int m = 1; m <= basis_size; ++m) {
        int candidates[7] = {m - 4, m - 2, m, m + 2, m + 4, 2 - m, 4 - m};
        std::sort(std::begin(candidates), std::end(candidates));
        int prev = 0;
        for (int n : candidates) {
            if (n < 1 || n > basis_size || n == prev) continue;
            prev = n;
            const double v = m2_entry(m, n) + m12_entry(m, n);
            if (v != 0.0) entries.push_back({m - 1, n - 1, v});
        }
    }
    return GalerkinMatrix1D(basis_size, std::move(entries));
}

GalerkinMatrix1D assemble_helmholtz_1d(int basis_size, double gamma) {
    check_basis_size(basis_size);
    GalerkinMatrix1D poisson = assemble_poisson_1d(basis_size);
    std::vector<MatrixEntry> entries(poisson.entries().begin(), poisson.entries().end());
    for (auto& e : entries) {
        e.value = -e.value;
        if (e.row == e.col) e.value += gamma * kPi / 2;
    }
    return GalerkinMatrix1D(basis_size, std::move(entries));
}

GalerkinMatrix1D assemble_general_1d(const OperatorSpec& spec, int basis_size,
                                     const QuadratureRule& rule) {
    check_basis_size(basis_size);
    if (rule.size() < 2 * basis_size) {
        throw InvalidInputError("assemble_general_1d: rule must have at least 2*basis_size nodes");
    }

    const int nq = rule.size();
    // Per-node integrand factors shared by all (m, n):
    //   a_q multiplies -n^2 sin(my) sin(ny)   (second-derivative block)
    //   b_q multiplies  n   sin(my) cos(ny)   (first-derivative blocks)
    //   d_q multiplies      sin(my) sin(ny)   (mass block)
    std::vector<double> a(static_cast<size_t>(nq)), b(a.size()), d(a.size());
    for (int q = 0; q < nq; ++q) {
        const double y = rule.nodes[static_cast<size_t>(q)];
        const double w = rule.weights[static_cast<size_t>(q)];
        const double s2 = std::sin(y) * std::sin(y);
        const double l2 = spec.l2 ? spec.l2(y) : 0.0;
        const double l1 = spec.l1 ? spec.l1(y) : 0.0;
        const double l0 = spec.l0 ? spec.l0(y) : 0.0;
        if (!std::isfinite(l2) || !std::isfinite(l1) || !std::isfinite(l0)) {
            throw EvaluationError("assemble_general_1d: coefficient non-finite at node y = " +
                                      std::to_string(y),
                                  y);
        }
        a[static_cast<size_t>(q)] = w * l2 * s2 * s2;
        b[static_cast<size_t>(q)] = w * (l2 * s2 * std::sin(2 * y) + l1 * s2);
        d[static_cast<size_t>(q)] = w * (l0 + spec.gamma);
    }

    std::vector<double> sin_my(static_cast<size_t>(nq));
    std::vector<double> sin_ny(static_cast<size_t>(nq));
    std::vector<double> cos_ny(static_cast<size_t>(nq));
    std::vector<MatrixEntry> entries;
    entries.reserve(static_cast<size_t>(basis_size) * basis_size);
    for (int m = 1; m <= basis_size; ++m) {
        for (int q = 0; q < nq; ++q) {
            sin_my[static_cast<size_t>(q)] = std::sin(m * rule.nodes[static_cast<size_t>(q)]);
        }
        for (int n = 1; n <= basis_size; ++n) {
            for (int q = 0; q < nq; ++q) {
                sin_ny[static_cast<size_t>(q)] = std::sin(n * rule.nodes[static_cast<size_t>(q)]);
                cos_ny[static_cast<size_t>(q)] = std::cos(n * rule.nodes[static_cast<size_t>(q)]);
            }
            double v2 = 0.0, v1 = 0.0, v0 = 0.0;
            for (size_t q = 0; q < sin_my.size(); ++q) {
                v2 += a[q] * sin_my[q] * sin_ny[q];
                v1 += b[q] * sin_my[q] * cos_ny[q];
                v0 += d[q] * sin_my[q] * sin_ny[q];
            }
            const double v = -static_cast<double>(n) * n * v2 + n * v1 + v0;
            entries.push_back({m - 1, n - 1, v});
        }
    }
    return GalerkinMatrix1D(basis_size, std::move(entries));
}

}  // namespace sinespec
