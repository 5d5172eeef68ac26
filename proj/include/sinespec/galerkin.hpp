#pragma once

#include <span>
#include <vector>

#include "sinespec/projection.hpp"
#include "sinespec/quadrature.hpp"

namespace sinespec {

/// One stored matrix entry; indices are 0-based.
struct MatrixEntry {
    int row;
    int col;
    double value;
};

/// N x N Galerkin operator matrix in coordinate-list form with a fixed
/// row-major entry ordering, so assemblies are reproducible run to run.
class GalerkinMatrix1D {
public:
    GalerkinMatrix1D(int dimension, std::vector<MatrixEntry> entries, bool symmetric = false);

    int dimension() const { return n_; }
    bool symmetric() const { return symmetric_; }
    std::span<const MatrixEntry> entries() const { return entries_; }

    /// Entry lookup; absent coordinates read as zero.
    double entry(int row, int col) const;

    /// y = M x (y is overwritten).
    void apply(std::span<const double> x, std::span<double> y) const;

    /// Main diagonal as a dense vector (zeros where no entry is stored).
    std::vector<double> diagonal() const;

private:
    int n_;
    std::vector<MatrixEntry> entries_;
    bool symmetric_;
};

/// Variable-coefficient second-order operator L2 u'' + L1 u' + L0 u in
/// physical space, with coefficients supplied as functions of the
/// computational coordinate y. The constant gamma is added to L0.
struct OperatorSpec {
    ScalarFunction l2;
    ScalarFunction l1;
    ScalarFunction l0;
    double gamma = 0.0;
};

/// Closed-form Galerkin matrix of the Poisson operator d^2/dx^2 under the
/// arctan map (the sum of the second-derivative and metric-derivative
/// parts). Entries come from Kronecker-delta formulas; no quadrature.
/// Nonzeros only where |m-n| is 0, 2 or 4, or m+n is 2 or 4.
GalerkinMatrix1D assemble_poisson_1d(int basis_size);

/// Galerkin matrix of -d^2/dx^2 + gamma, i.e. the negated Poisson matrix
/// plus gamma*(pi/2) on the diagonal.
GalerkinMatrix1D assemble_helmholtz_1d(int basis_size, double gamma);

/// Quadrature-based assembly for a general second-order operator. Dense in
/// general; requires rule.size() >= 2*basis_size.
GalerkinMatrix1D assemble_general_1d(const OperatorSpec& spec, int basis_size,
                                     const QuadratureRule& rule);

}  // namespace sinespec
