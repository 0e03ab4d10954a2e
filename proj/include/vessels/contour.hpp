#pragma once

#include <stdexcept>
#include <vector>

#include "vessels/complex_matrix.hpp"

namespace vessels {

// Circular integration contour with equispaced nodes.
struct Contour {
  Complex center{0.0, 0.0};
  double radius = 1.0;
  int node_count = 256;

  Contour() = default;
  Contour(Complex c, double r, int n) : center(c), radius(r), node_count(n) {
    if (r <= 0.0) throw std::invalid_argument("Contour: radius must be positive");
    if (n < 8 || n % 2 != 0)
      throw std::invalid_argument("Contour: node_count must be even and >= 8");
  }

  Complex node(int k) const {
    const double theta = 2.0 * M_PI * k / node_count;
    return center + radius * Complex(std::cos(theta), std::sin(theta));
  }

  Contour doubled() const { return Contour(center, radius, 2 * node_count); }
};

// Smallest centered circle with margin around the spectrum of m.
Contour enclosing_contour(const CMatrix& m, double margin = 1.5, int nodes = 256);

}  // namespace vessels
