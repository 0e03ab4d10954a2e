// Scaling-and-squaring matrix exponential, degree-13 Pade kernel
// (coefficients and theta thresholds from Higham's expm analysis).
#include "vessels/mat_exp.hpp"

#include <array>
#include <cmath>

namespace vessels {
namespace {

CMatrix pade_solve(const CMatrix& u, const CMatrix& v) {
  // (V - U) X = (V + U)
  return (v - u).partialPivLu().solve(v + u);
}

CMatrix pade3(const CMatrix& a) {
  static constexpr std::array<double, 4> b{120, 60, 12, 1};
  const CMatrix i = identity(a.rows());
  CMatrix a2 = a * a;
  CMatrix u = a * (b[3] * a2 + b[1] * i);
  CMatrix v = b[2] * a2 + b[0] * i;
  return pade_solve(u, v);
}

CMatrix pade5(const CMatrix& a) {
  static constexpr std::array<double, 6> b{30240, 15120, 3360, 420, 30, 1};
  const CMatrix i = identity(a.rows());
  CMatrix a2 = a * a, a4 = a2 * a2;
  CMatrix u = a * (b[5] * a4 + b[3] * a2 + b[1] * i);
  CMatrix v = b[4] * a4 + b[2] * a2 + b[0] * i;
  return pade_solve(u, v);
}

CMatrix pade7(const CMatrix& a) {
  static constexpr std::array<double, 8> b{17297280, 8648640, 1995840, 277200,
                                           25200,    1512,    56,      1};
  const CMatrix i = identity(a.rows());
  CMatrix a2 = a * a, a4 = a2 * a2, a6 = a4 * a2;
  CMatrix u = a * (b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * i);
  CMatrix v = b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * i;
  return pade_solve(u, v);
}

CMatrix pade9(const CMatrix& a) {
  static constexpr std::array<double, 10> b{17643225600., 8821612800., 2075673600.,
                                            302702400.,   30270240.,   2162160.,
                                            110880.,      3960.,       90.,
                                            1.};
  const CMatrix i = identity(a.rows());
  CMatrix a2 = a * a, a4 = a2 * a2, a6 = a4 * a2, a8 = a6 * a2;
  CMatrix u = a * (b[9] * a8 + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * i);
  CMatrix v = b[8] * a8 + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * i;
  return pade_solve(u, v);
}

CMatrix pade13(const CMatrix& a) {
  static constexpr std::array<double, 14> b{
      64764752532480000., 32382376266240000., 7771770303897600., 1187353796428800.,
      129060195264000.,   10559470521600.,    670442572800.,     33522128640.,
      1323241920.,        40840800.,          960960.,           16380.,
      182.,               1.};
  const CMatrix i = identity(a.rows());
  CMatrix a2 = a * a, a4 = a2 * a2, a6 = a4 * a2;
  CMatrix u = a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 +
                   b[5] * a4 + b[3] * a2 + b[1] * i);
  CMatrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 +
              b[2] * a2 + b[0] * i;
  return pade_solve(u, v);
}

}  // namespace

CMatrix mat_exp(const CMatrix& m) {
  require_square(m, "mat_exp");
  if (m.rows() == 0) return m;
  const double norm = m.cwiseAbs().colwise().sum().maxCoeff();  // 1-norm
  if (norm <= 1.495585217958292e-2) return pade3(m);
  if (norm <= 2.539398330063230e-1) return pade5(m);
  if (norm <= 9.504178996162932e-1) return pade7(m);
  if (norm <= 2.097847961257068e0) return pade9(m);

  const double theta13 = 5.371920351148152;
  int squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / theta13))));
  CMatrix r = pade13(m / std::pow(2.0, squarings));
  for (int k = 0; k < squarings; ++k) r = r * r;
  return r;
}

}  // namespace vessels
