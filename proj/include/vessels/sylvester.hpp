#pragma once

#include "vessels/complex_matrix.hpp"

namespace vessels {

// Thrown when the spectra of P and Q nearly overlap; carries the gap estimate.
struct SpectralGapError : std::runtime_error {
  double gap;
  explicit SpectralGapError(double g)
      : std::runtime_error("solve_sylvester: spectra of P and Q overlap (gap " +
                           std::to_string(g) + ")"),
        gap(g) {}
};

// Solves P X - X Q = R by Bartels-Stewart (Schur reduction of both factors).
// gap_tol is relative to the larger spectral radius.
CMatrix solve_sylvester(const CMatrix& p, const CMatrix& q, const CMatrix& r,
                        double gap_tol = 1e-9);

// Smallest |lambda_i(P) - mu_j(Q)|.
double sylvester_spectral_gap(const CMatrix& p, const CMatrix& q);

}  // namespace vessels
