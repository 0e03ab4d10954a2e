#include "vessels/model.hpp"

namespace vessels {

CMatrix assemble_model(const ModelSpec& spec) {
  const auto nodes = spec.grid.nodes();
  const int n = static_cast<int>(nodes.size());
  const int p = spec.p;
  if (static_cast<int>(spec.pi_samples.size()) != n)
    throw std::invalid_argument("assemble_model: Pi samples do not match the grid");
  const double h = spec.grid.step();

  const CMatrix j1 = spec.channel.j1();
  const CMatrix j2 = spec.channel.j2();
  const CMatrix s = spec.channel.s();
  const CMatrix below = j1 - j2 + s;           // kernel for s < w
  const CMatrix above = s;                     // kernel for s > w
  const CMatrix diag_cell = 0.5 * (below + above);

  CMatrix b = CMatrix::Zero(n * p, n * p);
  for (int j = 0; j < n; ++j) {
    if (spec.alpha == AlphaKind::identity)
      b.block(j * p, j * p, p, p) = nodes[j] * CMatrix::Identity(p, p);
    const CMatrix left = kI * h * spec.pi_samples[j];
    for (int k = 0; k < n; ++k) {
      const CMatrix& d = (k < j) ? below : (k > j) ? above : diag_cell;
      b.block(j * p, k * p, p, p) += left * d * spec.pi_samples[k].adjoint();
    }
  }
  return b;
}

CMatrix assemble_phi(const ModelSpec& spec) {
  const auto nodes = spec.grid.nodes();
  const int n = static_cast<int>(nodes.size());
  const int p = spec.p;
  const int m = spec.channel.m;
  const double sqrth = std::sqrt(spec.grid.step());

  CMatrix phi(m, n * p);
  for (int k = 0; k < n; ++k)
    phi.block(0, k * p, m, p) = sqrth * spec.pi_samples[k].adjoint();
  return phi;
}

}  // namespace vessels
