#include "sinespec/hartree.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace sinespec {

namespace {
constexpr double kPi = std::numbers::pi;

// Contract E along one tensor mode: out = E x_mode in.
Tensor3 contract_mode(const OverlapMatrix& e, const Tensor3& t, int mode) {
    const int n = t.extent();
    Tensor3 out(n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            const double v = e(r, c);
            if (v == 0.0) continue;
            switch (mode) {
                case 0:
                    for (int j = 0; j < n; ++j)
                        for (int k = 0; k < n; ++k) out(r, j, k) += v * t(c, j, k);
                    break;
                case 1:
                    for (int i = 0; i < n; ++i)
                        for (int k = 0; k < n; ++k) out(i, r, k) += v * t(i, c, k);
                    break;
                default:
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j) out(i, j, r) += v * t(i, j, c);
                    break;
            }
        }
    }
    return out;
}
}  // namespace

OverlapMatrix::OverlapMatrix(int dimension) : n_(dimension) {
    if (dimension < 1) throw InvalidInputError("OverlapMatrix: dimension must be >= 1");
    values_.assign(static_cast<size_t>(n_) * n_, 0.0);
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            if ((i + j) % 2 == 0) {
                values_[static_cast<size_t>(i - 1) * n_ + (j - 1)] = kPi * std::min(i, j);
            }
        }
    }
}

OverlapMatrix build_overlap_matrix(int basis_size) { return OverlapMatrix(basis_size); }

double hartree_energy(const SineExpansion3D& c, const MomentTensor3D& f, double kappa) {
    if (c.extent() != f.extent()) {
        throw InvalidInputError("hartree_energy: tensor extents differ, " +
                                std::to_string(c.extent()) + " vs " + std::to_string(f.extent()));
    }
    if (!std::isfinite(kappa)) throw InvalidInputError("hartree_energy: kappa must be finite");

    const OverlapMatrix e = build_overlap_matrix(f.extent());
    Tensor3 t = contract_mode(e, f, 0);
    t = contract_mode(e, t, 1);
    t = contract_mode(e, t, 2);

    double sum = 0.0;
    auto cv = c.flat();
    auto tv = t.flat();
    for (size_t i = 0; i < cv.size(); ++i) sum += cv[i] * tv[i];
    return kappa * sum;
}

}  // namespace sinespec
