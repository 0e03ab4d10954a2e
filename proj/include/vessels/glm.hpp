// Generalized Gelfand-Levitan-Marchenko machinery: the kernel
// Psi(x,t) = Phi~ T(x,t) rho~ Phi~* sigma_B, modes v_h(xi) = Phi~ e^{i xi B} h,
// the forward residual of the integral equation, its Nystrom inverse, the
// complete-characteristic-function and transfer-function representations of
// Psi, and the mode scalar product.
#pragma once

#include "vessels/contour.hpp"
#include "vessels/scene.hpp"
#include "vessels/wave_limit.hpp"

namespace vessels {

// sigma attached to the x-slot operator B (pairs store it second, the
// Davey-Stewartson triple first).
const CMatrix& sigma_b_of(const Colligation& x);

CMatrix psi_kernel(const SolitonScene& scene, const Coords& c);

struct ModeCurve {
  std::vector<double> xi;
  std::vector<CVector> values;
  double max_norm() const;
};

ModeCurve mode(const Colligation& x, const CVector& h, const std::vector<double>& xi);

struct GlmQuad {
  double h_max = 0.0;  // 0: choose from the measured spectral decay
  int nodes = 0;       // 0: choose from the oscillation scale (odd)
};

// Forward residual of the integral equation at one (x,t[,y]) base point. The
// left-hand mode is v_h for KdV and v_{P1 h} for the graded equations.
ResidualReport glm_residual(const SolitonScene& scene, const CVector& g,
                            const Coords& c, GlmQuad quad = {},
                            double rel_tol = 1e-5);

struct GlmSolution {
  ModeCurve phi;
  std::string status = "ok";
  double roundtrip_residual = 0.0;      // against the scene mode
  double reconstruction_residual = 0.0; // Gamma h + i T(-x,-t) rho~ (B-B*) g
  double s_reproduction_residual = 0.0; // (h + iBg) vs S g
  double nystrom_condition = 0.0;
};

// Nystrom solve of the KdV-weight integral equation with right side built
// from v_g(0) = Phi~ g; reproduces the forward mode of the scene.
GlmSolution solve_glm(const SolitonScene& scene, const CVector& g, const Coords& c,
                      GlmQuad quad = {});

struct PsiValue {
  CVector value;
  std::string status = "ok";  // ok | not-applicable
  std::string detail;
  double defect = 0.0;  // ghat representation defect (transfer route)
};

// Psi(x,t) g~ via the complete characteristic function of the pencil
// eps_t t A + x B (pairs only, rho~ = I).
PsiValue psi_via_complete_cf(const SolitonScene& scene, const Coords& c,
                             const CVector& g_tilde, double radius = 0.0,
                             int nodes = 256);

// Psi(x,t) g~ via the characteristic function of A alone; applicable when
// e^{ixB} Phi~* sigma_B g~ lies in ran(Phi~* sigma_A).
PsiValue psi_via_transfer(const SolitonScene& scene, const Coords& c,
                          const CVector& g_tilde, double radius = 0.0,
                          int nodes = 256);

struct ModeInnerProduct {
  Complex value{0.0, 0.0};
  std::string status = "ok";  // ok | not-computable
  double isometry_defect = 0.0;
};

// <v_h1, v_h2> = (Qlim h1, h2) + int_0^inf (sigma_B v_h1, v_h2) dxi; the
// boundary term consumes the wave-limit estimate and the status reflects its
// convergence flag.
ModeInnerProduct mode_inner_product(const SolitonScene& scene, const CVector& h1,
                                    const CVector& h2,
                                    const WaveLimitEstimate& limit,
                                    GlmQuad quad = {});

}  // namespace vessels
