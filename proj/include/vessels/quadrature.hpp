// Composite Simpson helpers for matrix/vector-valued integrands.
#pragma once

#include <functional>
#include <vector>

#include "vessels/complex_matrix.hpp"

namespace vessels {

// Simpson weights on n nodes (n odd) over [a, b].
inline std::vector<double> simpson_weights(double a, double b, int n) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("simpson_weights: need an odd node count >= 3");
  const double h = (b - a) / (n - 1);
  std::vector<double> w(n, h / 3.0);
  for (int k = 1; k + 1 < n; ++k) w[k] *= (k % 2 ? 4.0 : 2.0);
  return w;
}

template <typename F>
auto simpson_integrate(const F& f, double a, double b, int n)
    -> decltype(f(0.0)) {
  const auto w = simpson_weights(a, b, n);
  const double h = (b - a) / (n - 1);
  auto acc = decltype(f(0.0))(w[0] * f(a));
  for (int k = 1; k < n; ++k) acc += w[k] * f(a + k * h);
  return acc;
}

}  // namespace vessels
