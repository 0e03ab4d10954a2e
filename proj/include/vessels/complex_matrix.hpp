// Dense complex matrix aliases and small helpers shared by every module.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <stdexcept>

namespace vessels {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

inline CMatrix identity(Eigen::Index n) { return CMatrix::Identity(n, n); }

// Spectral norm. Exact SVD up to moderate sizes, power iteration above.
inline double opnorm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  if (m.rows() <= 400 && m.cols() <= 400) {
    return Eigen::JacobiSVD<CMatrix>(m).singularValues()(0);
  }
  CVector v = CVector::Ones(m.cols());
  v(0) = Complex(1.0, 0.5);  // break symmetry for signed matrices
  v.normalize();
  double s = 0.0;
  for (int it = 0; it < 60; ++it) {
    CVector w = m.adjoint() * (m * v);
    double ns = std::sqrt(w.norm());
    if (ns == 0.0) return 0.0;
    v = w / w.norm();
    if (it > 4 && std::abs(ns - s) <= 1e-10 * ns) return ns;
    s = ns;
  }
  return s;
}

inline CMatrix imag_part(const CMatrix& m) {  // (M - M*)/i, selfadjoint
  return (m - m.adjoint()) / kI;
}

inline double herm_defect(const CMatrix& m) { return opnorm(CMatrix(m - m.adjoint())); }

inline void require_square(const CMatrix& m, const char* who) {
  if (m.rows() != m.cols())
    throw std::invalid_argument(std::string(who) + ": matrix must be square");
}

// Deterministic complex Ginibre sample.
inline CMatrix random_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

inline CVector random_vector(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(g(rng), g(rng));
  return v;
}

inline CMatrix random_unitary(Eigen::Index n, std::mt19937_64& rng) {
  Eigen::HouseholderQR<CMatrix> qr(random_matrix(n, n, rng));
  CMatrix q = qr.householderQ();
  CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < n; ++i) {
    Complex d = r(i, i);
    q.col(i) *= (d == Complex(0) ? Complex(1) : d / std::abs(d));
  }
  return q;
}

inline CMatrix random_hermitian(Eigen::Index n, std::mt19937_64& rng) {
  CMatrix a = random_matrix(n, n, rng);
  return 0.5 * (a + a.adjoint());
}

}  // namespace vessels
