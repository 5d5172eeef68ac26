#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "sinespec/hartree.hpp"
#include "sinespec/quadrature.hpp"

using namespace sinespec;
namespace {
constexpr double kPi = std::numbers::pi;

Tensor3 random_tensor(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Tensor3 t(n);
    for (double& v : t.flat()) v = dist(rng);
    return t;
}

// Reference contraction over all six index pairs, with E formed explicitly.
double dense_energy(const OverlapMatrix& e, const Tensor3& c, const Tensor3& f, double kappa) {
    const int n = c.extent();
    double sum = 0.0;
    for (int i1 = 0; i1 < n; ++i1)
        for (int j1 = 0; j1 < n; ++j1)
            for (int k1 = 0; k1 < n; ++k1)
                for (int i2 = 0; i2 < n; ++i2)
                    for (int j2 = 0; j2 < n; ++j2)
                        for (int k2 = 0; k2 < n; ++k2)
                            sum += c(i1, j1, k1) * e(i1, i2) * e(j1, j2) * e(k1, k2) *
                                   f(i2, j2, k2);
    return kappa * sum;
}

// Same bilinear form contracting the modes in the reverse order (2, 1, 0)
// and against c instead of f.
double reverse_order_energy(const OverlapMatrix& e, const Tensor3& c, const Tensor3& f,
                            double kappa) {
    const int n = c.extent();
    Tensor3 t = c;
    for (int mode = 2; mode >= 0; --mode) {
        Tensor3 next(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    double s = 0.0;
                    for (int r = 0; r < n; ++r) {
                        const double v = mode == 0 ? t(r, j, k) : mode == 1 ? t(i, r, k)
                                                                            : t(i, j, r);
                        s += e(mode == 0 ? i : mode == 1 ? j : k, r) * v;
                    }
                    next(i, j, k) = s;
                }
        t = next;
    }
    double sum = 0.0;
    for (size_t i = 0; i < t.flat().size(); ++i) sum += t.flat()[i] * f.flat()[i];
    return kappa * sum;
}
}  // namespace

TEST_CASE("overlap matrix closed form") {
    const OverlapMatrix e = build_overlap_matrix(4);
    CHECK(e(0, 0) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(e(0, 1) == 0.0);
    CHECK(e(0, 2) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(e(1, 1) == doctest::Approx(2 * kPi).epsilon(1e-15));
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            CHECK(e(i, j) == e(j, i));
            if ((i + j) % 2 == 1) CHECK(e(i, j) == 0.0);
        }
        CHECK(e(i, i) == doctest::Approx(kPi * (i + 1)).epsilon(1e-15));
    }
}

TEST_CASE("overlap matrix matches its defining integral") {
    const int n = 16;
    const OverlapMatrix e = build_overlap_matrix(n);
    const QuadratureRule rule = build_quadrature(256);
    double worst = 0.0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            worst = std::max(worst, std::abs(oracles::overlap_integral(i, j, rule) -
                                             e(i - 1, j - 1)));
    CHECK(worst <= 1e-8);
}

TEST_CASE("hartree energy of a single mode") {
    Tensor3 c(2), f(2);
    c(0, 0, 0) = 1.0;
    f(0, 0, 0) = 1.0;
    CHECK(hartree_energy(c, f, 1.0) == doctest::Approx(kPi * kPi * kPi).epsilon(1e-14));
}

TEST_CASE("hartree energy matches the dense Kronecker evaluation at N = 2") {
    const Tensor3 c = random_tensor(2, 71);
    const Tensor3 f = random_tensor(2, 73);
    const OverlapMatrix e = build_overlap_matrix(2);
    const double kappa = 0.37;
    CHECK(std::abs(hartree_energy(c, f, kappa) - dense_energy(e, c, f, kappa)) <= 1e-12);
}

TEST_CASE("hartree energy is bilinear") {
    const int n = 3;
    const Tensor3 c1 = random_tensor(n, 79), c2 = random_tensor(n, 83);
    const Tensor3 f = random_tensor(n, 89);
    Tensor3 combo(n);
    for (size_t i = 0; i < combo.flat().size(); ++i) {
        combo.flat()[i] = 2.0 * c1.flat()[i] - 0.5 * c2.flat()[i];
    }
    const double lhs = hartree_energy(combo, f, 1.0);
    const double rhs = 2.0 * hartree_energy(c1, f, 1.0) - 0.5 * hartree_energy(c2, f, 1.0);
    CHECK(std::abs(lhs - rhs) <= 1e-11 * std::max(1.0, std::abs(rhs)));
}

TEST_CASE("hartree energy is symmetric in its tensor arguments") {
    const int n = 3;
    const Tensor3 c = random_tensor(n, 97);
    const Tensor3 f = random_tensor(n, 101);
    CHECK(std::abs(hartree_energy(c, f, 1.0) - hartree_energy(f, c, 1.0)) <=
          1e-11 * std::max(1.0, std::abs(hartree_energy(c, f, 1.0))));
}

TEST_CASE("contraction order does not matter") {
    const int n = 5;
    const Tensor3 c = random_tensor(n, 103);
    const Tensor3 f = random_tensor(n, 107);
    const OverlapMatrix e = build_overlap_matrix(n);
    const double a = hartree_energy(c, f, 1.0);
    const double b = reverse_order_energy(e, c, f, 1.0);
    CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)));
}

TEST_CASE("hartree energy validates its inputs") {
    CHECK_THROWS_AS(hartree_energy(Tensor3(2), Tensor3(3), 1.0), InvalidInputError);
    CHECK_THROWS_AS(hartree_energy(Tensor3(2), Tensor3(2), std::nan("")), InvalidInputError);
}
