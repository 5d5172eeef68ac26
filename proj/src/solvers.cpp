#include "sinespec/solvers.hpp"

#include <Eigen/Dense>

#include <chrono>
#include <cmath>
#include <string>
#include <vector>

namespace sinespec {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

// out = f - KronSum(m) x
void residual(const GalerkinMatrix1D& m, const Tensor3& f, const Tensor3& x, Tensor3& out) {
    out = kronecker_apply(m, x);
    auto o = out.flat();
    auto fv = f.flat();
    for (size_t i = 0; i < o.size(); ++i) o[i] = fv[i] - o[i];
}

}  // namespace

SineExpansion1D solve_1d(const GalerkinMatrix1D& m, const MomentVector& f) {
    const int n = m.dimension();
    if (f.size() != n) {
        throw InvalidInputError("solve_1d: dimension mismatch, matrix " + std::to_string(n) +
                                " vs rhs " + std::to_string(f.size()));
    }
    Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(n, n);
    for (const auto& e : m.entries()) dense(e.row, e.col) = e.value;
    Eigen::Map<const Eigen::VectorXd> rhs(f.values.data(), n);

    Eigen::PartialPivLU<Eigen::MatrixXd> lu(dense);
    const double rcond = lu.rcond();
    if (!(rcond > 1e-14)) {
        throw SingularSystemError(
            "solve_1d: system numerically singular (rcond estimate " + std::to_string(rcond) + ")",
            rcond);
    }
    Eigen::VectorXd x = lu.solve(rhs);
    if (!x.allFinite()) {
        throw SingularSystemError("solve_1d: factorization produced non-finite solution", rcond);
    }
    return SineExpansion1D(std::vector<double>(x.data(), x.data() + n));
}

MomentTensor3D kronecker_apply(const GalerkinMatrix1D& m, const SineExpansion3D& c) {
    const int n = m.dimension();
    if (c.extent() != n) {
        throw InvalidInputError("kronecker_apply: matrix dimension " + std::to_string(n) +
                                " does not match tensor extent " + std::to_string(c.extent()));
    }
    MomentTensor3D out(n);
    const size_t n2 = static_cast<size_t>(n) * n;
    const double* in = c.data();
    double* o = out.data();

    // mode 0: out(r,:,:) += v * in(c,:,:)
    for (const auto& e : m.entries()) {
        double* dst = o + static_cast<size_t>(e.row) * n2;
        const double* src = in + static_cast<size_t>(e.col) * n2;
        for (size_t t = 0; t < n2; ++t) dst[t] += e.value * src[t];
    }
    // mode 1: out(i,r,:) += v * in(i,c,:)
    for (int i = 0; i < n; ++i) {
        const size_t base = static_cast<size_t>(i) * n2;
        for (const auto& e : m.entries()) {
            double* dst = o + base + static_cast<size_t>(e.row) * n;
            const double* src = in + base + static_cast<size_t>(e.col) * n;
            for (int k = 0; k < n; ++k) dst[k] += e.value * src[k];
        }
    }
    // mode 2: out(i,j,r) += v * in(i,j,c)
    for (size_t ij = 0; ij < n2; ++ij) {
        const size_t base = ij * static_cast<size_t>(n);
        for (const auto& e : m.entries()) {
            o[base + static_cast<size_t>(e.row)] += e.value * in[base + static_cast<size_t>(e.col)];
        }
    }
    return out;
}

Solve3dResult solve_3d(const GalerkinMatrix1D& m, const MomentTensor3D& f, double tol,
                       long max_iter, bool jacobi_precondition) {
    const auto t_start = std::chrono::steady_clock::now();
    const int n = m.dimension();
    if (f.extent() != n) {
        throw InvalidInputError("solve_3d: matrix dimension does not match tensor extent");
    }
    if (!(tol > 0.0)) throw InvalidInputError("solve_3d: tol must be positive");
    if (max_iter < 0) max_iter = 10L * n;

    Solve3dResult result{SineExpansion3D(n), SolveReport{}};
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    };

    const double f_norm = norm2(f.flat());
    if (f_norm == 0.0) {
        result.report.converged = true;
        result.report.wall_time_s = elapsed();
        return result;
    }
    const double target = tol * f_norm;

    // Kronecker-sum diagonal d_i + d_j + d_k, used only when preconditioning.
    std::vector<double> inv_diag;
    if (jacobi_precondition) {
        const std::vector<double> d = m.diagonal();
        inv_diag.resize(static_cast<size_t>(n) * n * n);
        size_t t = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                for (int k = 0; k < n; ++k, ++t) {
                    const double dd = d[static_cast<size_t>(i)] + d[static_cast<size_t>(j)] +
                                      d[static_cast<size_t>(k)];
                    inv_diag[t] = dd != 0.0 ? 1.0 / dd : 1.0;
                }
            }
        }
    }
    auto precondition = [&](const Tensor3& v, Tensor3& out) {
        auto ov = out.flat();
        auto vv = v.flat();
        if (inv_diag.empty()) {
            std::copy(vv.begin(), vv.end(), ov.begin());
        } else {
            for (size_t t = 0; t < ov.size(); ++t) ov[t] = inv_diag[t] * vv[t];
        }
    };

    Tensor3& x = result.solution;
    Tensor3 r = f;  // x0 = 0
    Tensor3 r_shadow = r;
    Tensor3 p(n), p_hat(n), v(n), s_hat(n), t_vec(n), scratch(n);

    auto finalize = [&](long iterations) {
        residual(m, f, x, scratch);
        result.report.iterations = iterations;
        result.report.residual_norm = norm2(scratch.flat());
        result.report.converged = result.report.residual_norm <= target;
        result.report.wall_time_s = elapsed();
        return result;
    };

    double rho = 1.0, alpha = 1.0, omega = 1.0;
    for (long it = 1; it <= max_iter; ++it) {
        const double rho_new = dot(r_shadow.flat(), r.flat());
        if (rho_new == 0.0 || omega == 0.0) return finalize(it - 1);  // breakdown

        if (it == 1) {
            p = r;
        } else {
            const double beta = (rho_new / rho) * (alpha / omega);
            auto pv = p.flat();
            auto rv = r.flat();
            auto vv = v.flat();
            for (size_t i = 0; i < pv.size(); ++i) {
                pv[i] = rv[i] + beta * (pv[i] - omega * vv[i]);
            }
        }
        rho = rho_new;

        precondition(p, p_hat);
        v = kronecker_apply(m, p_hat);
        const double rtv = dot(r_shadow.flat(), v.flat());
        if (rtv == 0.0) return finalize(it - 1);  // breakdown
        alpha = rho / rtv;

        // s = r - alpha v (reuse r), half-step update of x
        {
            auto rv = r.flat();
            auto vv = v.flat();
            auto xv = x.flat();
            auto ph = p_hat.flat();
            for (size_t i = 0; i < rv.size(); ++i) {
                rv[i] -= alpha * vv[i];
                xv[i] += alpha * ph[i];
            }
        }
        if (norm2(r.flat()) <= target) {
            residual(m, f, x, scratch);  // accept only on the true residual
            if (norm2(scratch.flat()) <= target) return finalize(it);
        }

        precondition(r, s_hat);
        t_vec = kronecker_apply(m, s_hat);
        const double tt = dot(t_vec.flat(), t_vec.flat());
        if (tt == 0.0) return finalize(it);  // breakdown
        omega = dot(t_vec.flat(), r.flat()) / tt;

        {
            auto rv = r.flat();
            auto tv = t_vec.flat();
            auto xv = x.flat();
            auto sh = s_hat.flat();
            for (size_t i = 0; i < rv.size(); ++i) {
                xv[i] += omega * sh[i];
                rv[i] -= omega * tv[i];
            }
        }
        if (norm2(r.flat()) <= target) {
            residual(m, f, x, scratch);
            if (norm2(scratch.flat()) <= target) return finalize(it);
        }
    }
    return finalize(max_iter);
}

}  // namespace sinespec
