#include "vessels/wave_limit.hpp"

#include "vessels/mat_exp.hpp"

namespace vessels {

WaveLimitEstimate wave_limit_estimate(const CMatrix& b, double x_max, double tol) {
  require_square(b, "wave_limit_estimate");
  if (x_max <= 0.0) throw std::invalid_argument("wave_limit_estimate: x_max > 0");

  double x = std::min(1.0, x_max);
  auto q_at = [&](double xc) {
    return CMatrix(mat_exp(CMatrix(-kI * xc * b.adjoint())) * mat_exp(CMatrix(kI * xc * b)));
  };

  WaveLimitEstimate est;
  CMatrix q = q_at(x);
  est.limit = q;
  est.x_reached = x;
  while (2.0 * x <= x_max) {
    x *= 2.0;
    CMatrix q2 = q_at(x);
    est.last_diff = opnorm(CMatrix(q2 - q));
    est.limit = q2;
    est.x_reached = x;
    if (opnorm(q2) > 1e8) {
      est.flag = ConvergenceFlag::diverging;
      return est;
    }
    if (est.last_diff <= tol) {
      est.flag = ConvergenceFlag::converged;
      return est;
    }
    q = q2;
  }
  est.flag = (opnorm(est.limit) > 1e6) ? ConvergenceFlag::diverging
                                       : ConvergenceFlag::undecided;
  return est;
}

}  // namespace vessels
