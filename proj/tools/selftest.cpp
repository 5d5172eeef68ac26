// Built-in oracle and property checks behind `sinespec-bench selftest`.
// Each check recomputes its expectation independently of the code path it
// verifies (quadrature of defining integrals, dense Kronecker systems).

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <string>

#include "sinespec/galerkin.hpp"
#include "sinespec/hartree.hpp"
#include "sinespec/mapping.hpp"
#include "sinespec/projection.hpp"
#include "sinespec/solvers.hpp"

namespace {

using namespace sinespec;
constexpr double kPi = std::numbers::pi;

struct Harness {
    std::ostream& out;
    int failures = 0;

    void check(const std::string& name, bool ok, double detail = 0.0) {
        if (ok) {
            out << "PASS " << name << '\n';
        } else {
            out << "FAIL " << name << " (measured " << detail << ")\n";
            ++failures;
        }
    }
};

double quad(const std::function<double(double)>& f, const QuadratureRule& rule) {
    double s = 0.0;
    for (size_t q = 0; q < rule.nodes.size(); ++q) s += rule.weights[q] * f(rule.nodes[q]);
    return s;
}

Eigen::MatrixXd dense_of(const GalerkinMatrix1D& m) {
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(m.dimension(), m.dimension());
    for (const auto& e : m.entries()) d(e.row, e.col) = e.value;
    return d;
}

Eigen::MatrixXd dense_kronecker_sum(const Eigen::MatrixXd& m) {
    const int n = static_cast<int>(m.rows());
    const int n3 = n * n * n;
    auto idx = [n](int i, int j, int k) { return (i * n + j) * n + k; };
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n3, n3);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int r = 0; r < n; ++r) {
                    a(idx(i, j, k), idx(r, j, k)) += m(i, r);
                    a(idx(i, j, k), idx(i, r, k)) += m(j, r);
                    a(idx(i, j, k), idx(i, j, r)) += m(k, r);
                }
    return a;
}

}  // namespace

int run_selftest(std::ostream& out) {
    Harness h{out};
    std::mt19937 rng(20240817);

    // Coordinate map round-trip and monotonicity. The double representation
    // of y quantizes 1/x at ~2e-16 |x| relative, so the wide-range bound is
    // looser than the moderate-range one.
    {
        std::uniform_real_distribution<double> moderate(-1e5, 1e5);
        std::uniform_real_distribution<double> wide(-1e6, 1e6);
        double worst_moderate = 0.0, worst_wide = 0.0;
        for (int i = 0; i < 10000; ++i) {
            const double xm = moderate(rng);
            worst_moderate =
                std::max(worst_moderate, std::abs(to_physical(to_computational(xm)) - xm) /
                                             std::max(1.0, std::abs(xm)));
            const double xw = wide(rng);
            worst_wide = std::max(worst_wide, std::abs(to_physical(to_computational(xw)) - xw) /
                                                  std::max(1.0, std::abs(xw)));
        }
        h.check("map round-trip within 1e-10 for |x| <= 1e5", worst_moderate <= 1e-10,
                worst_moderate);
        h.check("map round-trip within 4e-10 for |x| <= 1e6", worst_wide <= 4e-10, worst_wide);

        bool monotone = true;
        double prev_y = -1.0;
        for (double x = -100.0; x < 100.0; x += 0.7) {
            const double y = to_computational(x);
            if (y <= prev_y) monotone = false;
            prev_y = y;
        }
        h.check("map strictly increasing", monotone);
    }

    // Quadrature identities.
    {
        const QuadratureRule rule = build_quadrature(64);
        double wsum = 0.0;
        for (double w : rule.weights) wsum += w;
        h.check("quadrature weights sum to pi", std::abs(wsum - kPi) <= 1e-12,
                std::abs(wsum - kPi));
        const double i33 = quad([](double y) { return std::sin(3 * y) * std::sin(3 * y); }, rule);
        h.check("int sin^2(3y) = pi/2", std::abs(i33 - kPi / 2) <= 1e-12, std::abs(i33 - kPi / 2));
        const double i25 = quad([](double y) { return std::sin(2 * y) * std::sin(5 * y); }, rule);
        h.check("int sin(2y) sin(5y) = 0", std::abs(i25) <= 1e-12, std::abs(i25));
    }

    // Projection of sin^7(y) against its harmonic expansion.
    {
        const QuadratureRule rule = build_quadrature(64);
        const MomentVector m =
            project_1d([](double y) { return std::pow(std::sin(y), 7); }, rule, 8);
        const double expected[8] = {35.0 / 64, 0, -21.0 / 64, 0, 7.0 / 64, 0, -1.0 / 64, 0};
        double worst = 0.0;
        for (int i = 0; i < 8; ++i) {
            worst = std::max(worst,
                             std::abs(m.values[static_cast<size_t>(i)] - kPi / 2 * expected[i]));
        }
        h.check("sin^7 moments match harmonic identity", worst <= 1e-12, worst);
    }

    // Analytic Poisson matrix vs quadrature of its defining integrals.
    {
        const int n = 16;
        const GalerkinMatrix1D analytic = assemble_poisson_1d(n);
        const OperatorSpec spec{[](double) { return 1.0; }, nullptr, nullptr, 0.0};
        const GalerkinMatrix1D quadrature =
            assemble_general_1d(spec, n, build_quadrature(4 * n + 64));
        double worst = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                worst = std::max(worst, std::abs(analytic.entry(i, j) - quadrature.entry(i, j)));
        h.check("analytic Poisson matrix matches quadrature", worst <= 1e-10, worst);
    }

    // Overlap matrix vs quadrature of its defining integral.
    {
        const int n = 8;
        const OverlapMatrix e = build_overlap_matrix(n);
        const QuadratureRule rule = build_quadrature(128);
        double worst = 0.0;
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                const double val = quad(
                    [i, j](double y) {
                        const double s = std::sin(y);
                        return std::sin(i * y) * std::sin(j * y) / (s * s);
                    },
                    rule);
                worst = std::max(worst, std::abs(val - e(i - 1, j - 1)));
            }
        }
        h.check("overlap matrix matches defining integral", worst <= 1e-8, worst);
    }

    // Kronecker-sum action and 3D solve vs the dense 27x27 system.
    {
        const int n = 3;
        const GalerkinMatrix1D m = assemble_helmholtz_1d(n, 2.0);
        const Eigen::MatrixXd a3 = dense_kronecker_sum(dense_of(m));
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        Tensor3 c(n);
        for (double& v : c.flat()) v = dist(rng);
        const Tensor3 applied = kronecker_apply(m, c);
        Eigen::VectorXd cv(27);
        for (int i = 0; i < 27; ++i) cv(i) = c.flat()[static_cast<size_t>(i)];
        const Eigen::VectorXd ref = a3 * cv;
        double worst = 0.0;
        for (int i = 0; i < 27; ++i) {
            worst = std::max(worst, std::abs(ref(i) - applied.flat()[static_cast<size_t>(i)]));
        }
        h.check("kronecker_apply matches dense Kronecker sum", worst <= 1e-12, worst);

        Tensor3 f(n);
        for (double& v : f.flat()) v = dist(rng);
        const Solve3dResult solved = solve_3d(m, f, 1e-13, 400);
        Eigen::VectorXd fv(27);
        for (int i = 0; i < 27; ++i) fv(i) = f.flat()[static_cast<size_t>(i)];
        const Eigen::VectorXd direct = a3.partialPivLu().solve(fv);
        worst = 0.0;
        for (int i = 0; i < 27; ++i) {
            worst = std::max(worst,
                             std::abs(direct(i) - solved.solution.flat()[static_cast<size_t>(i)]));
        }
        h.check("solve_3d matches dense direct solve", solved.report.converged && worst <= 1e-8,
                worst);
    }

    // Hartree contraction vs the explicit 8x8 Kronecker product.
    {
        const int n = 2;
        const OverlapMatrix e = build_overlap_matrix(n);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        Tensor3 c(n), f(n);
        for (double& v : c.flat()) v = dist(rng);
        for (double& v : f.flat()) v = dist(rng);
        double ref = 0.0;
        for (int i1 = 0; i1 < n; ++i1)
            for (int j1 = 0; j1 < n; ++j1)
                for (int k1 = 0; k1 < n; ++k1)
                    for (int i2 = 0; i2 < n; ++i2)
                        for (int j2 = 0; j2 < n; ++j2)
                            for (int k2 = 0; k2 < n; ++k2)
                                ref += c(i1, j1, k1) * e(i1, i2) * e(j1, j2) * e(k1, k2) *
                                       f(i2, j2, k2);
        const double got = hartree_energy(c, f, 1.0);
        h.check("hartree_energy matches dense Kronecker product", std::abs(got - ref) <= 1e-12,
                std::abs(got - ref));
    }

    // 1D Helmholtz with an exact finite expansion.
    {
        const int n = 16;
        const GalerkinMatrix1D m = assemble_helmholtz_1d(n, 2.0);
        const MomentVector f = project_1d_physical(
            [](double x) {
                const double q = 1.0 + x * x;
                return 7.0 * std::pow(q, -4.5) - 63.0 * x * x * std::pow(q, -5.5) +
                       2.0 * std::pow(q, -3.5);
            },
            build_quadrature(256), n);
        const SineExpansion1D c = solve_1d(m, f);
        double worst = 0.0;
        for (int i = 1; i <= 1000; ++i) {
            const double x = to_physical(kPi * i / 1001.0);
            worst = std::max(worst, std::abs(eval_expansion_physical(c, x) -
                                             std::pow(1.0 + x * x, -3.5)));
        }
        h.check("1D Helmholtz solves the finite-expansion case", worst <= 1e-13, worst);
    }

    out << (h.failures == 0 ? "selftest: all checks passed\n"
                            : "selftest: " + std::to_string(h.failures) + " check(s) failed\n");
    return h.failures == 0 ? 0 : 1;
}
