#include "vessels/dunford.hpp"

namespace vessels {

Contour enclosing_contour(const CMatrix& m, double margin, int nodes) {
  require_square(m, "enclosing_contour");
  Eigen::ComplexEigenSolver<CMatrix> es(m, false);
  double rho = 0.0;
  for (Eigen::Index k = 0; k < m.rows(); ++k)
    rho = std::max(rho, std::abs(es.eigenvalues()(k)));
  return Contour(Complex(0, 0), margin * rho + 1.0, nodes);
}

CMatrix dunford_exp(const CMatrix& m, const Contour& c, Complex scale) {
  require_square(m, "dunford_exp");
  const Eigen::Index n = m.rows();

  Eigen::ComplexEigenSolver<CMatrix> es(m, false);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (std::abs(es.eigenvalues()(k) - c.center) >= c.radius)
      throw std::domain_error("dunford_exp: contour does not enclose the spectrum");
  }

  const CMatrix id = identity(n);
  CMatrix acc = CMatrix::Zero(n, n);
  for (int k = 0; k < c.node_count; ++k) {
    const Complex mu = c.node(k);
    Eigen::PartialPivLU<CMatrix> lu(m - mu * id);
    const CMatrix res = lu.solve(id);
    if (opnorm(res) > 1e14)
      throw std::runtime_error("dunford_exp: node collides with an eigenvalue");
    // dmu = i * (mu - center) * dtheta on the circle
    acc += std::exp(scale * mu) * res * (kI * (mu - c.center));
  }
  // -(1/2*pi*i) * sum * (2*pi/n)
  return acc * (-1.0 / (kI * static_cast<double>(c.node_count)));
}

CMatrix dunford_exp_auto(const CMatrix& m, Contour c, Complex scale, double tol,
                         int max_nodes) {
  CMatrix prev = dunford_exp(m, c, scale);
  while (2 * c.node_count <= max_nodes) {
    c = c.doubled();
    CMatrix next = dunford_exp(m, c, scale);
    if (opnorm(CMatrix(next - prev)) <= tol * std::max(1.0, opnorm(next))) return next;
    prev = next;
  }
  return prev;
}

}  // namespace vessels
