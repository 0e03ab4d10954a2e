#include "vessels/colligation.hpp"

namespace vessels {
namespace {

const CMatrix& lookup(const std::vector<GammaEntry>& table, int k, int s,
                      const char* who) {
  for (const auto& e : table)
    if (e.k == k && e.s == s) return e.value;
  throw std::out_of_range(std::string(who) + ": no gamma entry for that pair");
}

CMatrix gamma_tilde_from(const CMatrix& gamma, const CMatrix& sig_k,
                         const CMatrix& sig_s, const CMatrix& gram) {
  return gamma + kI * (sig_k * gram * sig_s - sig_s * gram * sig_k);
}

void attach_gamma_tilde(Colligation& x) {
  const CMatrix gram = x.phi_tilde * x.phi_tilde.adjoint();
  x.gammas_tilde.clear();
  for (const auto& g : x.gammas)
    x.gammas_tilde.push_back(
        {g.k, g.s, gamma_tilde_from(g.value, x.sigmas[g.k], x.sigmas[g.s], gram)});
}

CMatrix block3(const CMatrix& a11, const CMatrix& a12, const CMatrix& a13,
               const CMatrix& a21, const CMatrix& a22, const CMatrix& a23,
               const CMatrix& a31, const CMatrix& a32, const CMatrix& a33) {
  const Eigen::Index m = a11.rows();
  CMatrix out(3 * m, 3 * m);
  out << a11, a12, a13, a21, a22, a23, a31, a32, a33;
  return out;
}

CMatrix block2(const CMatrix& a11, const CMatrix& a12, const CMatrix& a21,
               const CMatrix& a22) {
  const Eigen::Index m = a11.rows();
  CMatrix out(2 * m, 2 * m);
  out << a11, a12, a21, a22;
  return out;
}

}  // namespace

const CMatrix& Colligation::gamma(int k, int s) const {
  return lookup(gammas, k, s, "Colligation::gamma");
}

const CMatrix& Colligation::gamma_tilde(int k, int s) const {
  return lookup(gammas_tilde, k, s, "Colligation::gamma_tilde");
}

ChannelFactorization channel_factorization(const CMatrix& b, double rank_tol) {
  require_square(b, "channel_factorization");
  const CMatrix im = imag_part(b);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(im);
  const double top = es.eigenvalues().cwiseAbs().maxCoeff();

  std::vector<Eigen::Index> keep;
  for (Eigen::Index k = 0; k < im.rows(); ++k)
    if (std::abs(es.eigenvalues()(k)) > rank_tol * std::max(top, 1e-300))
      keep.push_back(k);

  ChannelFactorization out;
  const int m = static_cast<int>(keep.size());
  out.phi = CMatrix(m, im.rows());
  out.l = CMatrix::Zero(m, m);
  // positive channels first, matching L = J1 - J2 inertia ordering
  std::sort(keep.begin(), keep.end(), [&](Eigen::Index a, Eigen::Index c) {
    return es.eigenvalues()(a) > es.eigenvalues()(c);
  });
  for (int j = 0; j < m; ++j) {
    const double lam = es.eigenvalues()(keep[j]);
    out.phi.row(j) = std::sqrt(std::abs(lam)) * es.eigenvectors().col(keep[j]).adjoint();
    out.l(j, j) = lam > 0 ? 1.0 : -1.0;
    if (lam > 0) ++out.positive;
  }
  return out;
}

Colligation embed_kdv(const CMatrix& b_op, double b, const CMatrix& phi,
                      const CMatrix& l) {
  const Eigen::Index m = l.rows();
  const CMatrix z = CMatrix::Zero(m, m);
  const CMatrix bl = b * l;

  Colligation x;
  x.tag = "kdv";
  x.b = b;
  const CMatrix b2 = b_op * b_op;
  x.ops = {CMatrix(b * (b2 * b_op)), b_op};
  x.phi_tilde = CMatrix(3 * m, b_op.rows());
  x.phi_tilde << phi, phi * b_op.adjoint(), phi * (b2).adjoint();
  x.sigmas = {block3(z, z, bl, z, bl, z, bl, z, z),
              block3(l, z, z, z, z, z, z, z, z)};
  x.gammas = {{0, 1, block3(z, z, z, z, z, bl, z, bl, z)}};
  x.epsilons = {Complex(1, 0), Complex(1, 0)};
  attach_gamma_tilde(x);
  return x;
}

Colligation embed_nls(const CMatrix& b_op, double b, const CMatrix& phi,
                      const CMatrix& l) {
  const Eigen::Index m = l.rows();
  const CMatrix z = CMatrix::Zero(m, m);
  const CMatrix bl = b * l;

  Colligation x;
  x.tag = "nls";
  x.b = b;
  x.ops = {CMatrix(b * (b_op * b_op)), b_op};
  x.phi_tilde = CMatrix(2 * m, b_op.rows());
  x.phi_tilde << phi, phi * b_op.adjoint();
  x.sigmas = {block2(z, bl, bl, z), block2(l, z, z, z)};
  x.gammas = {{0, 1, block2(z, z, z, bl)}};
  x.epsilons = {kI, Complex(1, 0)};
  attach_gamma_tilde(x);
  return x;
}

Colligation embed_sg(const CMatrix& b_op, const CMatrix& phi, const CMatrix& l) {
  const Eigen::Index m = l.rows();
  const CMatrix z = CMatrix::Zero(m, m);

  Eigen::PartialPivLU<CMatrix> lu(b_op);
  const CMatrix binv = lu.solve(identity(b_op.rows()));
  const double cond = opnorm(b_op) * opnorm(binv);
  if (!std::isfinite(cond) || cond > 1e13)
    throw std::runtime_error("embed_sg: B is numerically singular (cond " +
                             std::to_string(cond) + ")");

  Colligation x;
  x.tag = "sg";
  x.ops = {binv, b_op};
  x.phi_tilde = CMatrix(2 * m, b_op.rows());
  x.phi_tilde << phi, phi * binv.adjoint();
  // The imaginary-part identity forces the sign of the lower sigma_A block:
  // B^{-1}(B - B*)/i B*^{-1} = (B*^{-1} - B^{-1})/i = -(A - A*)/i.
  x.sigmas = {block2(z, z, z, CMatrix(-l)), block2(l, z, z, z)};
  x.gammas = {{0, 1, block2(z, CMatrix(-l), CMatrix(-l), z)}};
  x.epsilons = {Complex(-1, 0), Complex(1, 0)};
  attach_gamma_tilde(x);
  return x;
}

Colligation embed_ds(const CMatrix& b_op, double alpha, double beta,
                     const CMatrix& phi, const CMatrix& l) {
  const Eigen::Index m = l.rows();
  const CMatrix z = CMatrix::Zero(m, m);

  Colligation x;
  x.tag = "ds";
  x.alpha = alpha;
  x.beta = beta;
  x.b = beta;
  x.ops = {b_op, CMatrix(alpha * b_op), CMatrix(beta * (b_op * b_op))};
  x.phi_tilde = CMatrix(2 * m, b_op.rows());
  x.phi_tilde << phi, phi * b_op.adjoint();
  x.sigmas = {block2(l, z, z, z), block2(CMatrix(alpha * l), z, z, z),
              block2(z, CMatrix(beta * l), CMatrix(beta * l), z)};
  x.gammas = {{0, 1, CMatrix(CMatrix::Zero(2 * m, 2 * m))},
              {0, 2, block2(z, z, z, CMatrix(-beta * l))},
              {1, 2, block2(z, z, z, CMatrix(-alpha * beta * l))}};
  x.epsilons = {Complex(1, 0), kI, kI};
  attach_gamma_tilde(x);
  return x;
}

Colligation embed_kdv(const CMatrix& b_op, double b) {
  const auto f = channel_factorization(b_op);
  return embed_kdv(b_op, b, f.phi, f.l);
}
Colligation embed_nls(const CMatrix& b_op, double b) {
  const auto f = channel_factorization(b_op);
  return embed_nls(b_op, b, f.phi, f.l);
}
Colligation embed_sg(const CMatrix& b_op) {
  const auto f = channel_factorization(b_op);
  return embed_sg(b_op, f.phi, f.l);
}
Colligation embed_ds(const CMatrix& b_op, double alpha, double beta) {
  const auto f = channel_factorization(b_op);
  return embed_ds(b_op, alpha, beta, f.phi, f.l);
}

ResidualReport verify_colligation(const Colligation& x, double tol) {
  ResidualReport rep;
  rep.title = "colligation(" + x.tag + ")";
  const CMatrix& ph = x.phi_tilde;
  const CMatrix pha = ph.adjoint();
  const CMatrix gram = ph * pha;

  for (int k = 0; k < x.arity(); ++k) {
    rep.add("imag_part_" + std::to_string(k + 1),
            opnorm(CMatrix(imag_part(x.ops[k]) - pha * x.sigmas[k] * ph)), tol);
    rep.add("sigma_selfadjoint_" + std::to_string(k + 1), herm_defect(x.sigmas[k]),
            tol);
  }
  for (const auto& g : x.gammas) {
    const std::string id = std::to_string(g.k + 1) + std::to_string(g.s + 1);
    const CMatrix& ak = x.ops[g.k];
    const CMatrix& as = x.ops[g.s];
    const CMatrix& gt = x.gamma_tilde(g.k, g.s);
    rep.add("vessel_" + id,
            opnorm(CMatrix(x.sigmas[g.k] * ph * as.adjoint() -
                           x.sigmas[g.s] * ph * ak.adjoint() - g.value * ph)),
            tol);
    rep.add("vessel_adjoint_side_" + id,
            opnorm(CMatrix(x.sigmas[g.k] * ph * as - x.sigmas[g.s] * ph * ak - gt * ph)),
            tol);
    rep.add("linkage_" + id,
            opnorm(CMatrix(gt - g.value -
                           kI * (x.sigmas[g.k] * gram * x.sigmas[g.s] -
                                 x.sigmas[g.s] * gram * x.sigmas[g.k]))),
            tol);
    rep.add("joint_imag_part_" + id,
            opnorm(CMatrix((ak * as.adjoint() - as * ak.adjoint()) / kI -
                           pha * g.value * ph)),
            tol);
    rep.add("gamma_selfadjoint_" + id, herm_defect(g.value), tol);
    rep.add("gamma_tilde_selfadjoint_" + id, herm_defect(gt), tol);
    const double sc = opnorm(ak) * opnorm(as);
    rep.add("commutator_" + id, opnorm(CMatrix(ak * as - as * ak)),
            std::max(tol, 1e-10 * sc));
  }
  return rep;
}

ResidualReport verify_zolotarev(const Colligation& x, double tol) {
  ResidualReport rep;
  rep.title = "zolotarev(" + x.tag + ")";
  const int n = x.arity();
  if (n < 3) {
    rep.status = "ok";
    rep.add("vacuous_n_lt_3", 0.0, tol, "no pair below n");
    return rep;
  }
  const CMatrix& sn = x.sigmas[n - 1];
  Eigen::FullPivLU<CMatrix> lu(sn);
  if (!lu.isInvertible()) {
    rep.status = "not-applicable";
    return rep;
  }
  const CMatrix sni = lu.inverse();
  auto a = [&](int k) { return CMatrix(sni * x.sigmas[k]); };
  auto g = [&](int k) { return CMatrix(sni * x.gamma(k, n - 1)); };

  for (int k = 0; k < n - 1; ++k) {
    for (int s = k + 1; s < n - 1; ++s) {
      const std::string id = std::to_string(k + 1) + std::to_string(s + 1);
      rep.add("sigma_commute_" + id, opnorm(CMatrix(a(k) * a(s) - a(s) * a(k))), tol);
      // Mixed condition from d2u/dxk dxs = d2u/dxs dxk; the printed right side
      // of the middle Zolotarev identity is restored to the sigma/gamma mixed
      // form that the embeddings satisfy.
      rep.add("mixed_" + id,
              opnorm(CMatrix(a(k) * g(s) + g(k) * a(s) - a(s) * g(k) - g(s) * a(k))),
              tol);
      rep.add("gamma_commute_" + id, opnorm(CMatrix(g(k) * g(s) - g(s) * g(k))), tol);
      rep.add("gamma_reconstruction_" + id,
              opnorm(CMatrix(x.gamma(k, s) - x.sigmas[s] * sni * x.gamma(k, n - 1) +
                             x.sigmas[k] * sni * x.gamma(s, n - 1))),
              tol);
    }
  }
  return rep;
}

}  // namespace vessels
