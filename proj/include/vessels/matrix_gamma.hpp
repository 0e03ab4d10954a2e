#pragma once

#include "vessels/complex_matrix.hpp"

namespace vessels {

// Finite dimensional analogue of the gamma function for selfadjoint T:
//   Gamma(eps*I - i*T) = integral_0^inf e^{-x} e^{((eps-1)I - iT) ln x} dx.
// Evaluated after the substitution x = e^u, which removes the endpoint
// singularity for eps < 1 and leaves a smooth doubly-decaying integrand.
CMatrix matrix_gamma(const CMatrix& t, double eps, double tol = 1e-12);

}  // namespace vessels
