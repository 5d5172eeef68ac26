#pragma once

#include "sinespec/expansion.hpp"
#include "sinespec/galerkin.hpp"

namespace sinespec {

/// Outcome of an iterative solve. residual_norm is recomputed from scratch
/// at exit, never taken from the recurrence.
struct SolveReport {
    long iterations = 0;
    double residual_norm = 0.0;
    bool converged = false;
    double wall_time_s = 0.0;
};

/// Direct dense solve of M c = f (partial-pivot LU). Throws
/// SingularSystemError with an rcond estimate when M is numerically singular.
SineExpansion1D solve_1d(const GalerkinMatrix1D& m, const MomentVector& f);

/// Action of the Kronecker sum M (+) M (+) M on a rank-3 coefficient tensor:
/// M is applied along each tensor mode and the results are summed. The
/// N^3 x N^3 matrix is never formed.
MomentTensor3D kronecker_apply(const GalerkinMatrix1D& m, const SineExpansion3D& c);

struct Solve3dResult {
    SineExpansion3D solution;
    SolveReport report;
};

/// Matrix-free BiCGSTAB solve of the Kronecker-sum system
/// (M (+) M (+) M) c = f with relative tolerance tol on the true residual.
/// max_iter < 0 selects the default 10 * extent. Non-convergence is reported
/// through the result (converged = false, best iterate kept), not thrown.
/// jacobi_precondition applies the Kronecker-sum diagonal as a left
/// preconditioner; default off.
Solve3dResult solve_3d(const GalerkinMatrix1D& m, const MomentTensor3D& f, double tol = 1e-12,
                       long max_iter = -1, bool jacobi_precondition = false);

}  // namespace sinespec
