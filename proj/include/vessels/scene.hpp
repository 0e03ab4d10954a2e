// Solitonic scenes: an embedded operator B with the symmetry B* = -U B U*,
// the interlacing operator M solving B* M - M B = rho (B* - B), and the
// grading structure (N, B~, projectors) demanded by the NLS / Sine-Gordon /
// Davey-Stewartson constructions.
#pragma once

#include <optional>

#include "vessels/colligation.hpp"
#include "vessels/motion.hpp"
#include "vessels/report.hpp"
#include "vessels/wave_limit.hpp"

namespace vessels {

enum class MMethod { integral, sylvester, automatic };

struct MOperatorResult {
  CMatrix m;
  std::string method_used;
  double relation_residual = 0.0;  // ||B* M - M B - rho (B* - B)||
  double spectral_gap = 0.0;       // sylvester path diagnostic
  double tail_estimate = 0.0;      // integral path diagnostic
};

// M = int_0^inf e^{-ixB*} rho (B - B*)/i e^{ixB} dx, via Bartels-Stewart on
// B* M - M B = rho (B* - B) when the spectra of B* and B are separated, else
// by quadrature with doubling upper limit. The automatic mode tries the
// solver first and falls back.
MOperatorResult compute_M(const CMatrix& b, const CMatrix& rho, MMethod method);

// Orthoprojector onto the span of singular vectors of (B - B*)/i above
// rank_tol times the top singular value; zero projector for selfadjoint B.
CMatrix nonhermitian_projector(const CMatrix& b, double rank_tol = 1e-10);

struct SolitonScene {
  Colligation x;
  CMatrix b;        // underlying operator B
  CMatrix u;        // unitary with B* = -U B U*
  CMatrix rho;      // interlacing weight (default U, so rho~ = I)
  CMatrix m_op;     // M
  CMatrix m_tilde;  // U* M
  CMatrix m1;       // left constant factor (default U*, so M1 U = I)
  CMatrix n_op;     // N (identity for KdV, P1 otherwise)
  CMatrix b_tilde;  // involution commuting with B; meaningful for nls/sg/ds
  CMatrix p1, p2;   // (I +- B~)/2
  CMatrix p_gb;     // orthoprojector onto the nonhermitian subspace
  bool has_btilde = false;

  CMatrix rho_tilde() const { return u.adjoint() * rho; }
  CMatrix m1_tilde() const { return m1 * u; }
  int dim_gb() const;
  CVector gb_direction() const;  // unit vector spanning G_B (rank-1 case)
};

// Parameters of the rank-one-coupling matrix scenes used across the test
// suites. With real_modes the two middle grid points of the diagonal carry no
// coupling, producing a genuine projector P1 compatible with the integral M;
// without them B is strictly dissipative.
struct MatrixSceneParams {
  int n = 6;
  double scale = 0.55;       // diagonal spread
  double coupling = 3.0;     // amplitude of Im B
  double b = 2.0;            // KdV / NLS polynomial coefficient
  double alpha = 1.0;        // DS
  double beta = 1.0;         // DS
  bool real_modes = false;
  unsigned long long seed = 20240901ull;
};

SolitonScene make_matrix_scene(const std::string& tag, const MatrixSceneParams& p);

// Scene structural invariants: N B~ = N, M B~ = -M, B~^2 = I, projector
// idempotence, P_GB compression, U-symmetry, M relation.
ResidualReport verify_scene(const SolitonScene& scene, double tol = 1e-10);

}  // namespace vessels
