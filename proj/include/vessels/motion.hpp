#pragma once

#include "vessels/colligation.hpp"

namespace vessels {

// Coordinates of the collective motion. Pairs use (x, t); the
// Davey-Stewartson triple also uses y.
struct Coords {
  double x = 0.0;
  double t = 0.0;
  double y = 0.0;
};

struct Motion {
  CMatrix t;         // exp(i sum eps_k x_k A_k)
  CMatrix tstar_inv; // exp(i sum conj(eps_k) x_k A_k*)
};

// Collective motion of the open system attached to the colligation. The
// exponent weights are the stored epsilons; the coordinate-to-operator slot
// map is (t, x) for pairs and (x, y, t) for the triple.
Motion collective_motion(const Colligation& x, const Coords& c);

// T evaluated at the reflected coordinates (-x, -t) (y kept), the argument of
// the closed-form solitonic combination.
CMatrix motion_reflected(const Colligation& x, const Coords& c);

Coords reflect(const Coords& c);

}  // namespace vessels
