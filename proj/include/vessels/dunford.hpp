#pragma once

#include "vessels/contour.hpp"

namespace vessels {

// -(1/2*pi*i) * contour integral of e^{scale*mu} (M - mu I)^{-1} d mu,
// trapezoid rule on the contour nodes. Equals mat_exp(scale*M) when the
// contour encloses the spectrum of M.
CMatrix dunford_exp(const CMatrix& m, const Contour& c, Complex scale);

// Same, doubling the node count until two successive results agree to tol.
CMatrix dunford_exp_auto(const CMatrix& m, Contour c, Complex scale,
                         double tol = 1e-9, int max_nodes = 1 << 14);

}  // namespace vessels
