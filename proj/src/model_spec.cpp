#include <cmath>

#include "vessels/model.hpp"

namespace vessels {

ChannelStructure::ChannelStructure(int m_, int r_, CMatrix shat_)
    : m(m_), r(r_), shat(std::move(shat_)) {
  if (m < 1 || r < 0 || r > m)
    throw std::invalid_argument("ChannelStructure: need 0 <= r <= m, m >= 1");
  if (shat.rows() != m - r || shat.cols() != r)
    throw std::invalid_argument("ChannelStructure: Shat must be (m-r) x r");
}

CMatrix ChannelStructure::j1() const {
  CMatrix j = CMatrix::Zero(m, m);
  j.topLeftCorner(r, r).setIdentity();
  return j;
}

CMatrix ChannelStructure::j2() const {
  CMatrix j = CMatrix::Zero(m, m);
  j.bottomRightCorner(m - r, m - r).setIdentity();
  return j;
}

CMatrix ChannelStructure::s() const {
  CMatrix s = CMatrix::Zero(m, m);
  s.bottomLeftCorner(m - r, r) = shat;
  return s;
}

CMatrix ChannelStructure::l() const {
  const CMatrix sm = s();
  return j1() - j2() + sm + sm.adjoint();
}

void ChannelStructure::validate() const {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(l());
  int pos = 0, neg = 0;
  for (Eigen::Index k = 0; k < m; ++k) {
    const double ev = es.eigenvalues()(k);
    if (std::abs(ev) < 1e-12)
      throw std::invalid_argument("ChannelStructure: L is singular");
    (ev > 0 ? pos : neg)++;
  }
  if (pos != r || neg != m - r)
    throw std::invalid_argument("ChannelStructure: L has wrong inertia for (m, r)");
}

double ChannelStructure::condition_number() const {
  Eigen::JacobiSVD<CMatrix> svd(l());
  return svd.singularValues()(0) / svd.singularValues()(m - 1);
}

std::vector<double> ModelGrid::nodes() const {
  std::vector<double> w;
  const double h = step();
  for (const auto& [a, b] : segments) {
    const int cnt = static_cast<int>(std::lround((b - a) / h));
    for (int j = 0; j < cnt; ++j) w.push_back(a + (j + 0.5) * h);
  }
  return w;
}

double ModelGrid::step() const { return length() / n; }

double ModelGrid::length() const {
  double len = 0.0;
  for (const auto& [a, b] : segments) len += b - a;
  return len;
}

ResidualReport ModelSpec::validate(double tol) const {
  ResidualReport rep;
  rep.title = "model-spec";
  channel.validate();
  const CMatrix j1 = channel.j1();

  double trace_defect = 0.0, j1_defect = 0.0, hoelder = 0.0;
  double min_sv = std::numeric_limits<double>::infinity();
  int well_conditioned = 0;
  CMatrix prev_pit;
  for (size_t k = 0; k < pi_samples.size(); ++k) {
    const CMatrix& pi = pi_samples[k];
    const CMatrix pit = pi.adjoint() * pi;  // Pi~
    trace_defect = std::max(trace_defect, std::abs(pit.trace() - Complex(1.0)));
    j1_defect = std::max(j1_defect, opnorm(CMatrix(pit * j1 - j1 * pit)));
    Eigen::JacobiSVD<CMatrix> svd(pi);
    const double sv = svd.singularValues()(pi.rows() - 1);
    min_sv = std::min(min_sv, sv);
    if (sv >= 1e-8) ++well_conditioned;
    if (k > 0) hoelder = std::max(hoelder, opnorm(CMatrix(pit - prev_pit)) / grid.step());
    prev_pit = pit;
  }
  rep.add("trace_normalization", trace_defect, tol);
  rep.add("row_independence_fraction",
          1.0 - static_cast<double>(well_conditioned) / pi_samples.size(), 0.5,
          "fraction of nodes with smallest singular value < 1e-8");
  rep.add_gated("j1_commutation_defect", j1_defect,
                "diagnostic only; exact for the polynomial family");
  rep.add_gated("hoelder_constant", hoelder, "max |dPi~/dw|, finite for Hoelder-1");
  rep.add_gated("smallest_singular_value", min_sv, "");
  return rep;
}

std::vector<CMatrix> build_pi_family(PiKind kind, int p, int m, int r,
                                     const ModelGrid& grid) {
  if (p < 1 || p > m) throw std::invalid_argument("build_pi_family: need 1 <= p <= m");
  const std::vector<double> w = grid.nodes();
  const double w0 = grid.segments.front().first;
  const double len = grid.segments.back().second - w0;
  std::vector<CMatrix> out;
  out.reserve(w.size());

  switch (kind) {
    case PiKind::constant: {
      CMatrix pi = CMatrix::Constant(p, m, Complex(1.0 / std::sqrt(double(p * m)), 0.0));
      out.assign(w.size(), pi);
      break;
    }
    case PiKind::trigonometric: {
      // p=1: unit row (cos, sin, ...); p=2, m=2: diag(cos, sin) which also
      // commutes with J1 when r = 1.
      for (double wk : w) {
        const double theta = 0.3 + 0.9 * (wk - w0) / len;
        CMatrix pi = CMatrix::Zero(p, m);
        if (p == 1) {
          pi(0, 0) = std::cos(theta);
          if (m > 1) pi(0, 1) = std::sin(theta);
        } else if (p == 2 && m == 2) {
          pi(0, 0) = std::cos(theta);
          pi(1, 1) = std::sin(theta);
        } else {
          throw std::invalid_argument(
              "build_pi_family: trigonometric family supports p=1 or p=m=2");
        }
        out.push_back(pi);
      }
      break;
    }
    case PiKind::polynomial: {
      if (p != 2 || m != 4 || r != 2)
        throw std::invalid_argument(
            "build_pi_family: polynomial family is built for p=2, m=4, r=2");
      // Pi = [cos(phi) u x1*, sin(phi) v x2*] with u _|_ v; the column blocks
      // are mutually orthogonal, so Pi~ is block diagonal and commutes with J1.
      Eigen::Vector2cd u, v, x1, x2;
      u << Complex(1, 0), Complex(0, 1);
      u /= std::sqrt(2.0);
      v << Complex(0, 1), Complex(1, 0);
      v /= std::sqrt(2.0);
      x1 << Complex(0.8, 0), Complex(0.6, 0);
      x2 << Complex(0.6, 0), Complex(0, -0.8);
      for (double wk : w) {
        const double s = (wk - w0) / len;             // in [0, 1]
        const double phi = 0.25 + 1.0 * s * s - 0.45 * s * s * s;
        CMatrix pi(2, 4);
        pi.leftCols(2) = std::cos(phi) * u * x1.adjoint();
        pi.rightCols(2) = std::sin(phi) * v * x2.adjoint();
        out.push_back(pi);
      }
      break;
    }
  }
  return out;
}

ModelSpec make_model_spec(PiKind kind, AlphaKind alpha, int n, int p, int m, int r,
                          const CMatrix& shat, double a, double b) {
  ModelSpec spec{ModelGrid{{{a, b}}, n}, p, ChannelStructure(m, r, shat), alpha, {}};
  spec.pi_samples = build_pi_family(kind, p, m, r, spec.grid);
  return spec;
}

ModelSpec make_split_model_spec(PiKind kind, int n, int p, int m, int r,
                                const CMatrix& shat, double d, double l) {
  if (!(0 < d && d < l))
    throw std::invalid_argument("make_split_model_spec: need 0 < d < l");
  ModelSpec spec{ModelGrid{{{-l, -d}, {d, l}}, n}, p, ChannelStructure(m, r, shat),
                 AlphaKind::identity, {}};
  spec.pi_samples = build_pi_family(kind, p, m, r, spec.grid);
  return spec;
}

}  // namespace vessels
