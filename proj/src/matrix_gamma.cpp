#include "vessels/matrix_gamma.hpp"

#include <cmath>

namespace vessels {
namespace {

// e^{-e^u + eps*u} e^{-iT u} assembled from the eigendecomposition of T.
CMatrix integrand(double u, double eps, const CMatrix& q, const RVector& lam) {
  const double w = std::exp(-std::exp(u) + eps * u);
  CVector d(lam.size());
  for (Eigen::Index k = 0; k < lam.size(); ++k)
    d(k) = w * std::exp(Complex(0.0, -lam(k) * u));
  return q * d.asDiagonal() * q.adjoint();
}

CMatrix simpson(double a, double b, int intervals, double eps, const CMatrix& q,
                const RVector& lam) {
  const double h = (b - a) / intervals;
  CMatrix acc = integrand(a, eps, q, lam) + integrand(b, eps, q, lam);
  for (int k = 1; k < intervals; ++k)
    acc += integrand(a + k * h, eps, q, lam) * (k % 2 ? 4.0 : 2.0);
  return acc * (h / 3.0);
}

}  // namespace

CMatrix matrix_gamma(const CMatrix& t, double eps, double tol) {
  require_square(t, "matrix_gamma");
  if (eps <= 0.0) throw std::invalid_argument("matrix_gamma: eps must be positive");
  if (herm_defect(t) > 1e-10 * std::max(1.0, opnorm(t)))
    throw std::domain_error("matrix_gamma: T must be selfadjoint");

  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (t + t.adjoint()));
  const CMatrix q = es.eigenvectors();
  const RVector lam = es.eigenvalues();

  // x = e^u. Truncation: head contribution ~ e^{eps*u_min}/eps, tail bound
  // e^{-X} X^{eps} at X = e^{u_max}.
  const double u_min = std::log(tol * eps) / eps - 2.0;
  double u_max = 2.0;
  while (std::exp(-std::exp(u_max)) * std::exp(eps * u_max) > tol * 0.01) u_max += 0.5;

  int intervals = 256;
  CMatrix prev = simpson(u_min, u_max, intervals, eps, q, lam);
  for (int round = 0; round < 12; ++round) {
    intervals *= 2;
    CMatrix next = simpson(u_min, u_max, intervals, eps, q, lam);
    if (opnorm(CMatrix(next - prev)) <= tol * std::max(1.0, opnorm(next))) return next;
    prev = next;
  }
  return prev;
}

}  // namespace vessels
