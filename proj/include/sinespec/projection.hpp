#pragma once

#include <functional>

#include "sinespec/expansion.hpp"
#include "sinespec/quadrature.hpp"

namespace sinespec {

using ScalarFunction = std::function<double(double)>;

/// Symmetry of a function about the interval midpoint y = pi/2. Under the
/// arctan map this is exactly evenness/oddness of the physical function:
/// reflecting y about pi/2 sends x to -x, and sin(my) picks up (-1)^(m+1).
enum class Symmetry {
    SymmetricAboutCenter,      ///< u(-x) = u(x); only odd m survive
    AntisymmetricAboutCenter,  ///< u(-x) = -u(x); only even m survive
};

/// Moments f_m = \int_0^pi sin(my) f(y) dy for m = 1..basis_size, with f
/// given in computational space. Throws EvaluationError if f is non-finite
/// at a node.
MomentVector project_1d(const ScalarFunction& f_of_y, const QuadratureRule& rule,
                        int basis_size);

/// Same moments for a forcing supplied in physical space; the integrand is
/// composed with the inverse map at the (interior) quadrature nodes.
MomentVector project_1d_physical(const ScalarFunction& f_of_x, const QuadratureRule& rule,
                                 int basis_size);

/// Rank-3 moment tensor of a separable product f(y1,y2,y3) = fx(y1) fy(y2) fz(y3):
/// f_lmn factors into the product of three 1D moment vectors.
MomentTensor3D project_3d_separable(const ScalarFunction& fx, const ScalarFunction& fy,
                                    const ScalarFunction& fz, const QuadratureRule& rule,
                                    int basis_size);

/// Convert moments of a function into its own expansion coefficients,
/// c_m = (2/pi) f_m. Note the Galerkin right-hand side uses raw moments;
/// this factor applies only when reconstructing a function from its moments.
SineExpansion1D moments_to_coefficients(const MomentVector& m);

/// Zero out the coefficients forbidden by the declared symmetry.
MomentVector parity_restrict(MomentVector m, Symmetry symmetry);
SineExpansion1D parity_restrict(SineExpansion1D e, Symmetry symmetry);

/// True if basis index m (1-based) is kept under the given symmetry.
bool parity_keeps_index(int m, Symmetry symmetry);

}  // namespace sinespec
