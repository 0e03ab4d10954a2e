// Discretized triangular model of a coupling of dissipative and
// antidissipative operators on L^2(Delta; C^p).
//
// Conventions. H-elements are column-valued samples on midpoint nodes,
// rescaled by sqrt(h) so the weighted L^2 inner product becomes the standard
// C^{Np} one and adjoints are plain conjugate transposes. In these
// coordinates
//   (B f)(w) = alpha(w) f(w)
//              + i Pi(w) (J1 - J2 + S) int_{a'}^{w} Pi*(s) f(s) ds
//              + i Pi(w) S            int_{w}^{b'} Pi*(s) f(s) ds,
//   (Phi f)  = int Pi*(w) f(w) dw,
// and the diagonal quadrature cell carries half of each one-sided kernel,
// which makes (B - B*)/i = Phi* L Phi exact in the discrete algebra.
#pragma once

#include <optional>
#include <vector>

#include "vessels/complex_matrix.hpp"
#include "vessels/report.hpp"

namespace vessels {

// J1, J2, S blocks of the channel matrix L = J1 - J2 + S + S*.
struct ChannelStructure {
  int m = 0;  // channel dimension
  int r = 0;  // positive eigenvalues of L
  CMatrix shat;  // (m - r) x r

  ChannelStructure(int m_, int r_, CMatrix shat_);

  CMatrix j1() const;
  CMatrix j2() const;
  CMatrix s() const;
  CMatrix l() const;  // J1 - J2 + S + S*

  // det L != 0 with the correct inertia; throws otherwise.
  void validate() const;
  double condition_number() const;
};

enum class PiKind { constant, trigonometric, polynomial };
enum class AlphaKind { identity, zero };

struct ModelGrid {
  // One or two intervals (two for the split Sine-Gordon domain).
  std::vector<std::pair<double, double>> segments;
  int n = 0;  // total midpoint count, split proportionally to length

  std::vector<double> nodes() const;
  double step() const;  // uniform across segments by construction
  double length() const;
};

struct ModelSpec {
  ModelGrid grid;
  int p = 1;
  ChannelStructure channel;
  AlphaKind alpha = AlphaKind::identity;
  std::vector<CMatrix> pi_samples;  // p x m per node

  ResidualReport validate(double tol = 1e-12) const;
};

// Constructs Pi(w) samples for the requested family. The polynomial family
// (p=2, m=4, r=2) satisfies the commutation condition Pi~ J1 = J1 Pi~ exactly;
// the p=1 trigonometric and constant families satisfy the trace and
// row-independence conditions, with the J1 commutation defect reported by
// ModelSpec::validate.
std::vector<CMatrix> build_pi_family(PiKind kind, int p, int m, int r,
                                     const ModelGrid& grid);

ModelSpec make_model_spec(PiKind kind, AlphaKind alpha, int n, int p, int m, int r,
                          const CMatrix& shat, double a = -1.0, double b = 1.0);
ModelSpec make_split_model_spec(PiKind kind, int n, int p, int m, int r,
                                const CMatrix& shat, double d, double l);

// Dense N*p x N*p matrix of the model operator.
CMatrix assemble_model(const ModelSpec& spec);

// m x N*p quadrature matrix of Phi; adjoint is .adjoint().
CMatrix assemble_phi(const ModelSpec& spec);

}  // namespace vessels
