#pragma once

#include "vessels/complex_matrix.hpp"

namespace vessels {

enum class ConvergenceFlag { converged, diverging, undecided };

// Direct estimate of s-lim e^{-ixB*} e^{ixB} on a doubling sequence of x.
struct WaveLimitEstimate {
  CMatrix limit;            // last iterate Q(x)
  ConvergenceFlag flag = ConvergenceFlag::undecided;
  double last_diff = 0.0;   // ||Q(2x) - Q(x)|| at the final step
  double x_reached = 0.0;
};

WaveLimitEstimate wave_limit_estimate(const CMatrix& b, double x_max, double tol);

inline const char* to_string(ConvergenceFlag f) {
  switch (f) {
    case ConvergenceFlag::converged: return "converged";
    case ConvergenceFlag::diverging: return "diverging";
    default: return "undecided";
  }
}

}  // namespace vessels
