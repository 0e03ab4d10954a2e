#include "vessels/solitonic.hpp"

namespace vessels {
namespace {

struct Pointwise {
  CMatrix s;
  CMatrix sx;
  double condition;
};

// Shared evaluation of S and (optionally) its exact x-derivative.
Pointwise evaluate(const SolitonScene& scene, const Coords& c, bool with_sx,
                   double cond_limit) {
  const Motion mo = collective_motion(scene.x, c);
  const CMatrix t_refl = motion_reflected(scene.x, c);

  CMatrix gamma = mo.t * scene.n_op + scene.m1 * mo.tstar_inv * scene.m_op;
  Eigen::JacobiSVD<CMatrix> svd(gamma);
  const double smin = svd.singularValues()(gamma.rows() - 1);
  const double cond = (smin == 0.0) ? std::numeric_limits<double>::infinity()
                                    : svd.singularValues()(0) / smin;
  if (cond > cond_limit)
    throw std::runtime_error("gamma_op: Gamma numerically singular at (x=" +
                             std::to_string(c.x) + ", t=" + std::to_string(c.t) +
                             "), cond " + std::to_string(cond));

  Eigen::PartialPivLU<CMatrix> lu(gamma);
  const CMatrix w = scene.m1_tilde() * t_refl * scene.rho_tilde() *
                    (scene.b - scene.b.adjoint());
  const CMatrix ginv_w = lu.solve(w);

  Pointwise out;
  out.condition = cond;
  out.s = kI * scene.b - kI * ginv_w;
  if (with_sx) {
    const CMatrix gamma_x =
        kI * scene.b * (mo.t * scene.n_op - scene.m1_tilde() * t_refl * scene.m_tilde);
    // S_x = i G^{-1} G_x G^{-1} W + G^{-1} B W
    out.sx = kI * lu.solve(CMatrix(gamma_x * ginv_w)) - lu.solve(CMatrix(scene.b * w));
  }
  return out;
}

}  // namespace

GammaValue gamma_op(const SolitonScene& scene, const Coords& c, double cond_limit) {
  const Motion mo = collective_motion(scene.x, c);
  GammaValue out;
  out.gamma = mo.t * scene.n_op + scene.m1 * mo.tstar_inv * scene.m_op;
  Eigen::JacobiSVD<CMatrix> svd(out.gamma);
  const double smin = svd.singularValues()(out.gamma.rows() - 1);
  out.condition = (smin == 0.0) ? std::numeric_limits<double>::infinity()
                                : svd.singularValues()(0) / smin;
  if (out.condition > cond_limit)
    throw std::runtime_error("gamma_op: Gamma numerically singular at (x=" +
                             std::to_string(c.x) + ", t=" + std::to_string(c.t) +
                             "), cond " + std::to_string(out.condition));
  return out;
}

CMatrix solitonic_combination(const SolitonScene& scene, const Coords& c) {
  return evaluate(scene, c, false, 1e12).s;
}

CMatrix solitonic_x_derivative(const SolitonScene& scene, const Coords& c) {
  return evaluate(scene, c, true, 1e12).sx;
}

CMatrix solitonic_combination_fd(const SolitonScene& scene, const Coords& c, double h) {
  Coords cp = c, cm = c;
  cp.x += h;
  cm.x -= h;
  const CMatrix gp = gamma_op(scene, cp).gamma;
  const CMatrix gm = gamma_op(scene, cm).gamma;
  const CMatrix g = gamma_op(scene, c).gamma;
  return g.partialPivLu().solve(CMatrix((gp - gm) / (2.0 * h)));
}

SField sample_solitonic_field(const SolitonScene& scene, const std::vector<Axis>& axes,
                              double cond_limit, bool with_x_derivative) {
  SField out;
  out.s = FieldSample(axes, scene.x.tag);
  out.sx = FieldSample(axes, scene.x.tag);
  out.has_sx = with_x_derivative;
  out.gamma_condition.assign(out.s.total(), 0.0);
  out.valid.assign(out.s.total(), true);

  std::vector<int> idx(axes.size(), 0);
  for (int flat = 0; flat < out.s.total(); ++flat) {
    int rem = flat;
    for (int a = static_cast<int>(axes.size()) - 1; a >= 0; --a) {
      idx[a] = rem % axes[a].count;
      rem /= axes[a].count;
    }
    Coords c;
    for (size_t a = 0; a < axes.size(); ++a) {
      const double v = axes[a].coord(idx[a]);
      if (axes[a].name == "x") c.x = v;
      else if (axes[a].name == "t") c.t = v;
      else if (axes[a].name == "y") c.y = v;
      else throw std::invalid_argument("sample_solitonic_field: unknown axis name");
    }
    try {
      Pointwise p = evaluate(scene, c, with_x_derivative, cond_limit);
      out.gamma_condition[flat] = p.condition;
      out.s.values[flat] = std::move(p.s);
      if (with_x_derivative) out.sx.values[flat] = std::move(p.sx);
    } catch (const std::runtime_error&) {
      out.valid[flat] = false;
      out.gamma_condition[flat] = std::numeric_limits<double>::infinity();
      out.s.values[flat] = CMatrix::Zero(scene.b.rows(), scene.b.cols());
      if (with_x_derivative)
        out.sx.values[flat] = CMatrix::Zero(scene.b.rows(), scene.b.cols());
    }
  }
  return out;
}

}  // namespace vessels
