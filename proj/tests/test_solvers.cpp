#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "sinespec/mapping.hpp"
#include "sinespec/projection.hpp"
#include "sinespec/solvers.hpp"

using namespace sinespec;
namespace {
constexpr double kPi = std::numbers::pi;

GalerkinMatrix1D scaled_identity(int n, double value) {
    std::vector<MatrixEntry> entries;
    for (int i = 0; i < n; ++i) entries.push_back({i, i, value});
    return GalerkinMatrix1D(n, std::move(entries), true);
}

Tensor3 random_tensor(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Tensor3 t(n);
    for (double& v : t.flat()) v = dist(rng);
    return t;
}
}  // namespace

TEST_CASE("solve_1d handles trivial systems") {
    const GalerkinMatrix1D m = assemble_helmholtz_1d(6, 2.0);
    const SineExpansion1D zero = solve_1d(m, MomentVector(6));
    for (double v : zero.c) CHECK(v == 0.0);

    const GalerkinMatrix1D ident = scaled_identity(3, kPi / 2);
    const SineExpansion1D c = solve_1d(ident, MomentVector(std::vector<double>{kPi / 2, kPi, 0.0}));
    CHECK(c.c[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(c.c[1] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(c.c[2] == 0.0);
}

TEST_CASE("solve_1d recovers the exact finite expansion") {
    // -u'' + 2u = f with u = (1+x^2)^{-7/2}; u(y) = sin^7 y has an exact
    // four-term expansion, so the solve must hit it to roundoff.
    const int n = 8;
    const GalerkinMatrix1D m = assemble_helmholtz_1d(n, 2.0);
    const MomentVector f = project_1d_physical(
        [](double x) {
            const double q = 1.0 + x * x;
            return 7.0 * std::pow(q, -4.5) - 63.0 * x * x * std::pow(q, -5.5) +
                   2.0 * std::pow(q, -3.5);
        },
        build_quadrature(256), n);
    const SineExpansion1D c = solve_1d(m, f);
    const double expected[8] = {35.0 / 64, 0, -21.0 / 64, 0, 7.0 / 64, 0, -1.0 / 64, 0};
    for (int i = 0; i < n; ++i) {
        CHECK(std::abs(c.c[static_cast<size_t>(i)] - expected[i]) <= 1e-10);
    }
}

TEST_CASE("solve_1d residual contract and error paths") {
    const int n = 24;
    const GalerkinMatrix1D m = assemble_helmholtz_1d(n, 2.0);
    const MomentVector f = project_1d_physical(
        [](double x) { return std::exp(-x * x); }, build_quadrature(192), n);
    const SineExpansion1D c = solve_1d(m, f);
    std::vector<double> mc(static_cast<size_t>(n));
    m.apply(c.c, mc);
    double resid = 0.0, fmax = 0.0;
    for (int i = 0; i < n; ++i) {
        resid = std::max(resid, std::abs(mc[static_cast<size_t>(i)] -
                                         f.values[static_cast<size_t>(i)]));
        fmax = std::max(fmax, std::abs(f.values[static_cast<size_t>(i)]));
    }
    CHECK(resid <= 1e-10 * (1.0 + fmax));

    CHECK_THROWS_AS(solve_1d(m, MomentVector(7)), InvalidInputError);
    try {
        solve_1d(scaled_identity(4, 0.0), MomentVector(4));
        CHECK(false);
    } catch (const SingularSystemError& e) {
        CHECK(e.rcond_estimate() <= 1e-14);
    }
}

TEST_CASE("kronecker_apply acts mode by mode") {
    SUBCASE("scaled identity gives three equal contributions") {
        const Tensor3 c = random_tensor(4, 31);
        const Tensor3 out = kronecker_apply(scaled_identity(4, kPi / 2), c);
        for (size_t i = 0; i < c.flat().size(); ++i) {
            CHECK(out.flat()[i] == doctest::Approx(3.0 * kPi / 2 * c.flat()[i]).epsilon(1e-14));
        }
    }

    SUBCASE("matches the dense Kronecker sum at N = 3") {
        const GalerkinMatrix1D m = assemble_helmholtz_1d(3, 1.0);
        const Tensor3 c = random_tensor(3, 37);
        const Tensor3 out = kronecker_apply(m, c);
        const Eigen::MatrixXd a3 = oracles::dense_kronecker_sum(oracles::dense_of(m));
        Eigen::VectorXd cv(27);
        for (int i = 0; i < 27; ++i) cv(i) = c.flat()[static_cast<size_t>(i)];
        const Eigen::VectorXd ref = a3 * cv;
        for (int i = 0; i < 27; ++i) {
            CHECK(std::abs(out.flat()[static_cast<size_t>(i)] - ref(i)) <= 1e-12);
        }
    }

    SUBCASE("zero tensor maps to zero and mismatches throw") {
        const Tensor3 zero(3);
        const Tensor3 out = kronecker_apply(assemble_poisson_1d(3), zero);
        for (double v : out.flat()) CHECK(v == 0.0);
        CHECK_THROWS_AS(kronecker_apply(assemble_poisson_1d(4), zero), InvalidInputError);
    }
}

TEST_CASE("solve_3d trivial and oracle cases") {
    SUBCASE("zero forcing returns immediately") {
        const Solve3dResult r = solve_3d(assemble_helmholtz_1d(4, 1.0), Tensor3(4), 1e-12, 100);
        CHECK(r.report.converged);
        CHECK(r.report.iterations == 0);
        for (double v : r.solution.flat()) CHECK(v == 0.0);
    }

    SUBCASE("matches the dense direct solve for N = 2, 3, 4") {
        for (int n : {2, 3, 4}) {
            const GalerkinMatrix1D m = assemble_helmholtz_1d(n, 2.0);
            const Tensor3 f = random_tensor(n, 41u + static_cast<unsigned>(n));
            const Solve3dResult r = solve_3d(m, f, 1e-13, 500);
            REQUIRE(r.report.converged);

            const Eigen::MatrixXd a3 = oracles::dense_kronecker_sum(oracles::dense_of(m));
            Eigen::VectorXd fv(a3.rows());
            for (int i = 0; i < fv.size(); ++i) fv(i) = f.flat()[static_cast<size_t>(i)];
            const Eigen::VectorXd direct = a3.partialPivLu().solve(fv);

            double fnorm = 0.0, diff = 0.0;
            for (int i = 0; i < fv.size(); ++i) {
                diff = std::max(diff, std::abs(direct(i) -
                                               r.solution.flat()[static_cast<size_t>(i)]));
                fnorm = std::max(fnorm, std::abs(direct(i)));
            }
            CHECK(diff <= 1e-8 * std::max(1.0, fnorm));
        }
    }
}

TEST_CASE("solve_3d reports a from-scratch residual") {
    const int n = 5;
    const GalerkinMatrix1D m = assemble_helmholtz_1d(n, 1.0);
    const Tensor3 f = random_tensor(n, 53);
    const Solve3dResult r = solve_3d(m, f, 1e-11, 500);
    REQUIRE(r.report.converged);

    const Tensor3 mc = kronecker_apply(m, r.solution);
    double resid = 0.0;
    for (size_t i = 0; i < f.flat().size(); ++i) {
        const double d = f.flat()[i] - mc.flat()[i];
        resid += d * d;
    }
    resid = std::sqrt(resid);
    CHECK(std::abs(resid - r.report.residual_norm) <= 1e-12);
}

TEST_CASE("solve_3d is symmetric under mode permutation") {
    const int n = 5;
    const GalerkinMatrix1D m = assemble_helmholtz_1d(n, 2.0);
    const Tensor3 f = random_tensor(n, 59);
    Tensor3 f_perm(n);  // cycle modes (i,j,k) -> (j,k,i)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) f_perm(j, k, i) = f(i, j, k);

    const Solve3dResult a = solve_3d(m, f, 1e-13, 500);
    const Solve3dResult b = solve_3d(m, f_perm, 1e-13, 500);
    REQUIRE(a.report.converged);
    REQUIRE(b.report.converged);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                CHECK(std::abs(a.solution(i, j, k) - b.solution(j, k, i)) <= 1e-10);
}

TEST_CASE("solve_3d caps iterations and keeps the best iterate") {
    const int n = 6;
    const GalerkinMatrix1D m = assemble_helmholtz_1d(n, 2.0);
    const Tensor3 f = random_tensor(n, 61);
    const Solve3dResult r = solve_3d(m, f, 1e-14, 1);
    CHECK_FALSE(r.report.converged);
    CHECK(r.report.iterations == 1);
    CHECK(std::isfinite(r.report.residual_norm));
    double norm = 0.0;
    for (double v : r.solution.flat()) norm += std::abs(v);
    CHECK(norm > 0.0);  // best iterate, not zeros
    CHECK_THROWS_AS(solve_3d(m, Tensor3(5), 1e-12, 10), InvalidInputError);
    CHECK_THROWS_AS(solve_3d(m, f, -1.0, 10), InvalidInputError);
}

TEST_CASE("solve_3d with the Jacobi flag reaches the same solution") {
    const int n = 5;
    const GalerkinMatrix1D m = assemble_helmholtz_1d(n, 2.0);
    const Tensor3 f = random_tensor(n, 67);
    const Solve3dResult plain = solve_3d(m, f, 1e-13, 500, false);
    const Solve3dResult jacobi = solve_3d(m, f, 1e-13, 500, true);
    REQUIRE(plain.report.converged);
    REQUIRE(jacobi.report.converged);
    for (size_t i = 0; i < f.flat().size(); ++i) {
        CHECK(std::abs(plain.solution.flat()[i] - jacobi.solution.flat()[i]) <= 1e-9);
    }
}
