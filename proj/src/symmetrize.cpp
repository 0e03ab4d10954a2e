#include "vessels/symmetrize.hpp"

namespace vessels {

CMatrix symmetrize(const CMatrix& c, const CMatrix& u, double tol) {
  require_square(c, "symmetrize");
  if (u.rows() != c.rows() || u.cols() != c.cols())
    throw std::invalid_argument("symmetrize: dimension mismatch");
  const CMatrix id = identity(u.rows());
  if (opnorm(CMatrix(u.adjoint() * u - id)) > tol ||
      opnorm(CMatrix(u * u.adjoint() - id)) > tol)
    throw std::domain_error("symmetrize: U is not unitary");
  const CMatrix u2 = u * u;
  const CMatrix cs = c.adjoint();
  if (opnorm(CMatrix(u2 * cs - cs * u2)) > tol * std::max(1.0, opnorm(cs)))
    throw std::domain_error("symmetrize: U^2 must commute with C* for B* = -UBU*");
  return c - u * cs * u.adjoint();
}

CMatrix flip_unitary(Eigen::Index n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
  CMatrix u = CMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n / 2; ++k) {
    const Complex phase = std::exp(Complex(0.0, ang(rng)));
    u(k, n - 1 - k) = phase;
    u(n - 1 - k, k) = Complex(1.0, 0.0) / phase;
  }
  if (n % 2 == 1) u(n / 2, n / 2) = 1.0;
  return u;
}

}  // namespace vessels
