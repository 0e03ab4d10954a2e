// Commutative regular colligations (vessels) for the four embedding
// constructions, with numerical verification of the vessel identities.
//
// For an n-tuple A_1..A_n with channel map Phi~ : H -> E, selfadjoint sigma_k
// and gamma_{ks} = -gamma_{sk} on E, the implemented identities are
//   (V1) (A_k - A_k*)/i = Phi~* sigma_k Phi~
//   (V2) sigma_k Phi~ A_s* - sigma_s Phi~ A_k* = gamma_{ks} Phi~
//   (V3) sigma_k Phi~ A_s  - sigma_s Phi~ A_k  = gamma~_{ks} Phi~
//   (V4) gamma~_{ks} = gamma_{ks}
//          + i (sigma_k Phi~ Phi~* sigma_s - sigma_s Phi~ Phi~* sigma_k)
//   (V5) (A_k A_s* - A_s A_k*)/i = Phi~* gamma_{ks} Phi~
// This. index order is the one the printed block matrices of the embeddings
// actually satisfy; pair colligations use slot 1 = A, slot 2 = B.
#pragma once

#include <string>
#include <vector>

#include "vessels/complex_matrix.hpp"
#include "vessels/report.hpp"

namespace vessels {

struct GammaEntry {
  int k = 0, s = 0;  // k < s
  CMatrix value;
};

struct Colligation {
  std::string tag;                 // kdv | nls | sg | ds
  std::vector<CMatrix> ops;        // A_1..A_n on H
  CMatrix phi_tilde;               // dim_E x dim_H stacked channel map
  std::vector<CMatrix> sigmas;     // selfadjoint dim_E x dim_E
  std::vector<GammaEntry> gammas;
  std::vector<GammaEntry> gammas_tilde;
  std::vector<Complex> epsilons;   // collective-motion weights
  double b = 1.0;                  // polynomial coefficient of the embedding
  double alpha = 0.0, beta = 0.0;  // Davey-Stewartson parameters

  int arity() const { return static_cast<int>(ops.size()); }
  Eigen::Index dim_h() const { return phi_tilde.cols(); }
  Eigen::Index dim_e() const { return phi_tilde.rows(); }

  const CMatrix& gamma(int k, int s) const;        // requires k < s
  const CMatrix& gamma_tilde(int k, int s) const;  // requires k < s
};

// Factorization (B - B*)/i = Phi* L Phi with L = diag(+-1) and full-row-rank
// Phi; m = rank of the imaginary part above rank_tol (relative).
struct ChannelFactorization {
  CMatrix phi;  // m x dim_H
  CMatrix l;    // m x m real diagonal +-1
  int positive = 0;
};
ChannelFactorization channel_factorization(const CMatrix& b, double rank_tol = 1e-10);

// Embeddings. Phi and L describe the imaginary part of B; the convenience
// overloads factor them from B directly.
Colligation embed_kdv(const CMatrix& b_op, double b, const CMatrix& phi, const CMatrix& l);
Colligation embed_nls(const CMatrix& b_op, double b, const CMatrix& phi, const CMatrix& l);
Colligation embed_sg(const CMatrix& b_op, const CMatrix& phi, const CMatrix& l);
Colligation embed_ds(const CMatrix& b_op, double alpha, double beta, const CMatrix& phi,
                     const CMatrix& l);
Colligation embed_kdv(const CMatrix& b_op, double b);
Colligation embed_nls(const CMatrix& b_op, double b);
Colligation embed_sg(const CMatrix& b_op);
Colligation embed_ds(const CMatrix& b_op, double alpha, double beta);

// Residuals of (V1)-(V5) plus pairwise commutators; never throws on failure.
ResidualReport verify_colligation(const Colligation& x, double tol);

// Zolotarev compatibility conditions for n >= 3 with det sigma_n != 0, plus
// the reconstruction gamma_{ks} = sigma_s sigma_n^{-1} gamma_{kn}
//                                 - sigma_k sigma_n^{-1} gamma_{sn}.
ResidualReport verify_zolotarev(const Colligation& x, double tol);

}  // namespace vessels
