#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sinespec/errors.hpp"

namespace sinespec {

/// Truncated sine-series coefficients c_1..c_N of a function on (0,pi).
/// Index m of the stored vector corresponds to the basis function sin((m+1)y).
struct SineExpansion1D {
    std::vector<double> c;

    SineExpansion1D() = default;
    explicit SineExpansion1D(int basis_size) : c(static_cast<size_t>(basis_size), 0.0) {}
    explicit SineExpansion1D(std::vector<double> coeffs) : c(std::move(coeffs)) {}

    int size() const { return static_cast<int>(c.size()); }
};

/// Projection moments f_m = \int_0^pi sin(my) f(y) dy for m = 1..N.
/// Distinct from SineExpansion1D: coefficients are (2/pi) times moments.
struct MomentVector {
    std::vector<double> values;

    MomentVector() = default;
    explicit MomentVector(int basis_size) : values(static_cast<size_t>(basis_size), 0.0) {}
    explicit MomentVector(std::vector<double> vals) : values(std::move(vals)) {}

    int size() const { return static_cast<int>(values.size()); }
};

/// Cubic rank-3 tensor with row-major layout (i, j, k) -> (i*n + j)*n + k.
/// Used both for 3D moment tensors and 3D expansion coefficients.
class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(int extent)
        : n_(extent),
          v_(static_cast<size_t>(extent) * extent * extent, 0.0) {
        if (extent < 1) throw InvalidInputError("Tensor3 extent must be >= 1");
    }

    int extent() const { return n_; }

    double& operator()(int i, int j, int k) { return v_[index(i, j, k)]; }
    double operator()(int i, int j, int k) const { return v_[index(i, j, k)]; }

    std::span<double> flat() { return v_; }
    std::span<const double> flat() const { return v_; }

    double* data() { return v_.data(); }
    const double* data() const { return v_.data(); }

private:
    size_t index(int i, int j, int k) const {
        return (static_cast<size_t>(i) * n_ + j) * n_ + k;
    }

    int n_ = 0;
    std::vector<double> v_;
};

using SineExpansion3D = Tensor3;
using MomentTensor3D = Tensor3;

}  // namespace sinespec
