#pragma once

#include "vessels/field_sample.hpp"
#include "vessels/scene.hpp"

namespace vessels {

struct GammaValue {
  CMatrix gamma;
  double condition = 0.0;
};

// Gamma(x,t) = T N + M1 T*^{-1} M; reports the condition number and throws
// when it exceeds cond_limit.
GammaValue gamma_op(const SolitonScene& scene, const Coords& c,
                    double cond_limit = 1e12);

// Closed form S = iB - i Gamma^{-1} M1~ T(-x,-t) rho~ (B - B*).
CMatrix solitonic_combination(const SolitonScene& scene, const Coords& c);

// Exact x-derivative of S, from dGamma/dx = iB(TN - T(-x,-t)M~) and the
// reflected-motion derivative; avoids one finite-difference layer.
CMatrix solitonic_x_derivative(const SolitonScene& scene, const Coords& c);

// Reference value Gamma^{-1} dGamma/dx by central differences.
CMatrix solitonic_combination_fd(const SolitonScene& scene, const Coords& c,
                                 double h = 1e-5);

// S sampled on a grid; points where Gamma is ill-conditioned are flagged.
// sx is filled when with_x_derivative is requested.
struct SField {
  FieldSample s;
  FieldSample sx;
  std::vector<double> gamma_condition;  // per flat index
  std::vector<bool> valid;
  bool has_sx = false;
};
SField sample_solitonic_field(const SolitonScene& scene, const std::vector<Axis>& axes,
                              double cond_limit = 1e12,
                              bool with_x_derivative = false);

}  // namespace vessels
