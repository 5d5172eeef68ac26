#pragma once

#include <vector>

#include "sinespec/expansion.hpp"

namespace sinespec {

/// Closed-form overlap matrix of the mapped-volume weight,
/// [E]_ij = \int_0^pi sin(iy) sin(jy) / sin^2(y) dy
///        = pi * min(i, j) when i + j is even, 0 otherwise (1-based i, j).
class OverlapMatrix {
public:
    explicit OverlapMatrix(int dimension);

    int dimension() const { return n_; }

    /// 0-based access.
    double operator()(int i, int j) const {
        return values_[static_cast<size_t>(i) * n_ + j];
    }

    const std::vector<double>& values() const { return values_; }

private:
    int n_;
    std::vector<double> values_;
};

OverlapMatrix build_overlap_matrix(int basis_size);

/// Bilinear Hartree-energy contraction
///   kappa * sum c_lmn [E]_ll' [E]_mm' [E]_nn' f_l'm'n'
/// evaluated by three successive mode contractions with E (O(N^4) work);
/// the N^3 x N^3 Kronecker product is never formed.
double hartree_energy(const SineExpansion3D& c, const MomentTensor3D& f, double kappa);

}  // namespace sinespec
