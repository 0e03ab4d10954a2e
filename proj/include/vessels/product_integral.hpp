#pragma once

#include <functional>

#include "vessels/complex_matrix.hpp"

namespace vessels {

using MatrixFunction = std::function<CMatrix(double)>;

// Ordered product of exponentials prod_j e^{F(w_j) dw} over a partition of
// [a, b], w increasing. Factors for larger w are applied on the left, so the
// result solves X' = F(w) X, X(a) = I, matching the arrowed products used for
// triangular-model fundamental solutions. Left-endpoint nodes: first order.
CMatrix product_integral(const MatrixFunction& f, double a, double b, int steps);

// Richardson combination of the step and half-step products: second order.
CMatrix product_integral_extrapolated(const MatrixFunction& f, double a, double b,
                                      int steps);

}  // namespace vessels
