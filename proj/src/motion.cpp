#include "vessels/motion.hpp"

#include "vessels/mat_exp.hpp"

namespace vessels {
namespace {

CMatrix exponent(const Colligation& x, const Coords& c, bool conjugate) {
  const Eigen::Index n = x.dim_h();
  CMatrix e = CMatrix::Zero(n, n);
  auto add = [&](int slot, double coord) {
    const Complex w = conjugate ? std::conj(x.epsilons[slot]) : x.epsilons[slot];
    const CMatrix& op = x.ops[slot];
    e += kI * w * coord * (conjugate ? CMatrix(op.adjoint()) : op);
  };
  if (x.arity() == 2) {
    add(0, c.t);
    add(1, c.x);
  } else if (x.arity() == 3) {
    add(0, c.x);
    add(1, c.y);
    add(2, c.t);
  } else {
    throw std::invalid_argument("collective_motion: unsupported arity");
  }
  return e;
}

}  // namespace

Coords reflect(const Coords& c) { return {-c.x, -c.t, c.y}; }

Motion collective_motion(const Colligation& x, const Coords& c) {
  return {mat_exp(exponent(x, c, false)), mat_exp(exponent(x, c, true))};
}

CMatrix motion_reflected(const Colligation& x, const Coords& c) {
  return mat_exp(exponent(x, reflect(c), false));
}

}  // namespace vessels
