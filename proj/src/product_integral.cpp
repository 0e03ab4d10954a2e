#include "vessels/product_integral.hpp"

#include "vessels/mat_exp.hpp"

namespace vessels {

CMatrix product_integral(const MatrixFunction& f, double a, double b, int steps) {
  if (steps < 1) throw std::invalid_argument("product_integral: steps must be >= 1");
  const double h = (b - a) / steps;
  CMatrix acc;
  for (int j = 0; j < steps; ++j) {
    const CMatrix factor = mat_exp(CMatrix(h * f(a + j * h)));
    acc = (j == 0) ? factor : CMatrix(factor * acc);
  }
  return acc;
}

CMatrix product_integral_extrapolated(const MatrixFunction& f, double a, double b,
                                      int steps) {
  const CMatrix coarse = product_integral(f, a, b, steps);
  const CMatrix fine = product_integral(f, a, b, 2 * steps);
  return 2.0 * fine - coarse;
}

}  // namespace vessels
