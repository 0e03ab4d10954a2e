// Bartels-Stewart solver for the Sylvester equation P X - X Q = R.
#include "vessels/sylvester.hpp"

namespace vessels {

double sylvester_spectral_gap(const CMatrix& p, const CMatrix& q) {
  Eigen::ComplexEigenSolver<CMatrix> ep(p, false), eq(q, false);
  double gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < p.rows(); ++i)
    for (Eigen::Index j = 0; j < q.rows(); ++j)
      gap = std::min(gap, std::abs(ep.eigenvalues()(i) - eq.eigenvalues()(j)));
  return gap;
}

CMatrix solve_sylvester(const CMatrix& p, const CMatrix& q, const CMatrix& r,
                        double gap_tol) {
  require_square(p, "solve_sylvester");
  require_square(q, "solve_sylvester");
  if (r.rows() != p.rows() || r.cols() != q.rows())
    throw std::invalid_argument("solve_sylvester: R has incompatible shape");

  Eigen::ComplexSchur<CMatrix> sp(p), sq(q);
  const CMatrix& tp = sp.matrixT();
  const CMatrix& tq = sq.matrixT();
  const CMatrix& u = sp.matrixU();
  const CMatrix& v = sq.matrixU();

  double scale = 0.0, gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < tp.rows(); ++i) scale = std::max(scale, std::abs(tp(i, i)));
  for (Eigen::Index j = 0; j < tq.rows(); ++j) scale = std::max(scale, std::abs(tq(j, j)));
  for (Eigen::Index i = 0; i < tp.rows(); ++i)
    for (Eigen::Index j = 0; j < tq.rows(); ++j)
      gap = std::min(gap, std::abs(tp(i, i) - tq(j, j)));
  if (gap < gap_tol * std::max(1.0, scale)) throw SpectralGapError(gap);

  CMatrix c = u.adjoint() * r * v;
  CMatrix y(r.rows(), r.cols());
  const Eigen::Index n = tp.rows();
  for (Eigen::Index j = 0; j < r.cols(); ++j) {
    CVector rhs = c.col(j);
    for (Eigen::Index k = 0; k < j; ++k) rhs += y.col(k) * tq(k, j);
    // (T_P - tq(j,j) I) is upper triangular
    CMatrix shifted = tp - tq(j, j) * identity(n);
    y.col(j) = shifted.triangularView<Eigen::Upper>().solve(rhs);
  }
  return u * y * v.adjoint();
}

}  // namespace vessels
