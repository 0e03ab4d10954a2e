#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vessels/complex_matrix.hpp"
#include "vessels/dunford.hpp"
#include "vessels/field_sample.hpp"
#include "vessels/mat_exp.hpp"
#include "vessels/matrix_gamma.hpp"
#include "vessels/product_integral.hpp"
#include "vessels/report.hpp"
#include "vessels/sylvester.hpp"

using namespace vessels;

namespace {

// Truncated-series oracle, adequate for opnorm <= 1.
CMatrix taylor_exp(const CMatrix& m, int terms = 60) {
  CMatrix acc = identity(m.rows());
  CMatrix pow = identity(m.rows());
  double fact = 1.0;
  for (int k = 1; k <= terms; ++k) {
    pow = pow * m;
    fact *= k;
    acc += pow / fact;
  }
  return acc;
}

}  // namespace

TEST_CASE("mat_exp basics") {
  CHECK(opnorm(CMatrix(mat_exp(CMatrix(CMatrix::Zero(3, 3))) - identity(3))) == 0.0);

  CMatrix nil(2, 2);
  nil << 0, 1, 0, 0;
  CMatrix expect(2, 2);
  expect << 1, 1, 0, 1;
  CHECK(opnorm(CMatrix(mat_exp(nil) - expect)) <= 1e-15);

  CHECK_THROWS_AS(mat_exp(CMatrix(CMatrix::Zero(2, 3))), std::invalid_argument);
}

TEST_CASE("mat_exp matches the Taylor oracle") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 8; ++rep) {
    CMatrix m = random_matrix(4, 4, rng);
    m /= opnorm(m);  // opnorm 1
    const CMatrix ours = mat_exp(m);
    CHECK(opnorm(CMatrix(ours - taylor_exp(m))) <= 1e-12 * opnorm(ours));
  }
}

TEST_CASE("mat_exp group law at large norm") {
  std::mt19937_64 rng(12);
  CMatrix m = random_matrix(5, 5, rng);
  m *= 25.0 / opnorm(m);
  const CMatrix whole = mat_exp(m);
  CMatrix half = mat_exp(CMatrix(0.5 * m));
  CHECK(opnorm(CMatrix(half * half - whole)) <= 1e-10 * opnorm(whole));
}

TEST_CASE("dunford_exp diagonal and identity cases") {
  const Contour c(Complex(0, 0), 5.0, 256);
  CHECK(opnorm(CMatrix(dunford_exp(CMatrix(CMatrix::Zero(3, 3)), c, kI) - identity(3))) <=
        1e-10);

  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = 2.0;
  CMatrix expect = CMatrix::Zero(2, 2);
  expect(0, 0) = std::exp(kI);
  expect(1, 1) = std::exp(2.0 * kI);
  CHECK(opnorm(CMatrix(dunford_exp(d, c, kI) - expect)) <= 1e-10);
}

TEST_CASE("dunford_exp agrees with mat_exp on random matrices") {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 4; ++rep) {
    CMatrix m = random_matrix(5, 5, rng);
    m /= opnorm(m);
    const Complex scale(0.3, 0.7);
    const CMatrix via_contour = dunford_exp_auto(m, enclosing_contour(m), scale);
    CHECK(opnorm(CMatrix(via_contour - mat_exp(CMatrix(scale * m)))) <= 1e-8);
  }
}

TEST_CASE("dunford_exp rejects a contour missing the spectrum") {
  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = 10.0;
  d(1, 1) = 0.5;
  CHECK_THROWS_AS(dunford_exp(d, Contour(Complex(0, 0), 2.0, 64), kI), std::domain_error);
}

TEST_CASE("contour invariants") {
  CHECK_THROWS_AS(Contour(Complex(0, 0), -1.0, 64), std::invalid_argument);
  CHECK_THROWS_AS(Contour(Complex(0, 0), 1.0, 63), std::invalid_argument);
  CHECK_THROWS_AS(Contour(Complex(0, 0), 1.0, 4), std::invalid_argument);
}

TEST_CASE("solve_sylvester") {
  std::mt19937_64 rng(14);

  SUBCASE("zero right side") {
    CMatrix p = random_matrix(4, 4, rng) + 6.0 * identity(4);
    CMatrix q = random_matrix(4, 4, rng) - 6.0 * identity(4);
    CHECK(opnorm(solve_sylvester(p, q, CMatrix(CMatrix::Zero(4, 4)))) <= 1e-12);
  }

  SUBCASE("scalar formula") {
    CMatrix p(1, 1), q(1, 1), r(1, 1);
    p << kI;
    q << -kI;
    r << Complex(3.0, -1.0);
    const CMatrix x = solve_sylvester(p, q, r);
    CHECK(std::abs(x(0, 0) - r(0, 0) / (2.0 * kI)) <= 1e-14);
  }

  SUBCASE("random instances meet the residual contract") {
    for (int rep = 0; rep < 6; ++rep) {
      CMatrix p = random_matrix(6, 6, rng) + 8.0 * identity(6);
      CMatrix q = random_matrix(6, 6, rng) - 8.0 * identity(6);
      CMatrix r = random_matrix(6, 6, rng);
      const CMatrix x = solve_sylvester(p, q, r);
      CHECK(opnorm(CMatrix(p * x - x * q - r)) <= 1e-10 * (opnorm(r) + 1.0));
    }
  }

  SUBCASE("overlapping spectra are rejected with a gap estimate") {
    CMatrix p = random_matrix(4, 4, rng);
    try {
      solve_sylvester(p, p, CMatrix(random_matrix(4, 4, rng)));
      FAIL("expected SpectralGapError");
    } catch (const SpectralGapError& e) {
      CHECK(e.gap <= 1e-9);
    }
  }
}

TEST_CASE("product_integral") {
  std::mt19937_64 rng(15);

  SUBCASE("constant integrand") {
    CMatrix c = random_matrix(3, 3, rng);
    const CMatrix expect = mat_exp(CMatrix(2.0 * c));  // b - a = 2
    CHECK(opnorm(CMatrix(product_integral([&](double) { return c; }, -1.0, 1.0, 10000) -
                         expect)) <= 1e-8 * opnorm(expect));
  }

  SUBCASE("commuting diagonal family equals exp of the integral") {
    auto f = [](double w) {
      CMatrix d = CMatrix::Zero(2, 2);
      d(0, 0) = Complex(w, 0.2);
      d(1, 1) = Complex(-w, 0.1 * w);
      return d;
    };
    // integral over [0, 1]: diag(1/2 + 0.2 i, -1/2 + 0.05 i)
    CMatrix integral = CMatrix::Zero(2, 2);
    integral(0, 0) = Complex(0.5, 0.2);
    integral(1, 1) = Complex(-0.5, 0.05);
    const CMatrix expect = mat_exp(integral);
    CHECK(opnorm(CMatrix(product_integral(f, 0.0, 1.0, 4000) - expect)) <=
          1e-3 * opnorm(expect));
    CHECK(opnorm(CMatrix(product_integral_extrapolated(f, 0.0, 1.0, 4000) - expect)) <=
          1e-6 * opnorm(expect));
  }

  SUBCASE("noncommuting family self-converges and halving gains >= 1.8x") {
    CMatrix a = random_matrix(2, 2, rng), b = random_matrix(2, 2, rng);
    a *= 0.15 / opnorm(a);
    b *= 0.15 / opnorm(b);
    auto f = [&](double w) { return CMatrix(std::cos(w) * a + std::sin(w) * b); };
    // A dense run agrees with its 10x finer counterpart once the first-order
    // error is pushed below the target.
    const CMatrix dense = product_integral(f, 0.0, 1.5, 300000);
    const CMatrix dense10 = product_integral(f, 0.0, 1.5, 3000000);
    CHECK(opnorm(CMatrix(dense - dense10)) <= 1e-6);

    // Second-order reference; its own error is negligible at this step count.
    const CMatrix ref = product_integral_extrapolated(f, 0.0, 1.5, 20480);
    const CMatrix coarse = product_integral(f, 0.0, 1.5, 256);
    const double e1 = opnorm(CMatrix(coarse - ref));
    const double e2 = opnorm(CMatrix(product_integral(f, 0.0, 1.5, 512) - ref));
    CHECK(e1 / e2 >= 1.8);

    // Richardson variant is second order: quartering the step should gain
    // roughly 16x, demand >= 3.4^2.
    const double r1 = opnorm(CMatrix(product_integral_extrapolated(f, 0.0, 1.5, 256) - ref));
    const double r2 = opnorm(CMatrix(product_integral_extrapolated(f, 0.0, 1.5, 1024) - ref));
    CHECK(r1 / r2 >= 11.5);
  }
}

TEST_CASE("matrix_gamma") {
  SUBCASE("classical values") {
    CMatrix z = CMatrix::Zero(1, 1);
    CHECK(std::abs(matrix_gamma(z, 1.0)(0, 0) - Complex(1.0)) <= 1e-10);
    CHECK(std::abs(matrix_gamma(z, 0.5)(0, 0) - Complex(std::sqrt(M_PI))) <= 1e-9);
  }

  SUBCASE("reflection-formula oracle on scalars") {
    for (double t : {0.3, 1.0, 2.5}) {
      CMatrix tm(1, 1);
      tm << Complex(t, 0.0);
      const Complex g = matrix_gamma(tm, 1.0)(0, 0);
      const double expect = M_PI * t / std::sinh(M_PI * t);
      CHECK(std::abs(std::norm(g) - expect) <= 1e-8);
    }
  }

  SUBCASE("commutes with unitary conjugation") {
    std::mt19937_64 rng(16);
    CMatrix t = random_hermitian(4, rng);
    CMatrix v = random_unitary(4, rng);
    const CMatrix lhs = matrix_gamma(CMatrix(v.adjoint() * t * v), 0.8);
    const CMatrix rhs = v.adjoint() * matrix_gamma(t, 0.8) * v;
    CHECK(opnorm(CMatrix(lhs - rhs)) <= 1e-10 * opnorm(rhs));
  }

  SUBCASE("rejects non-selfadjoint input") {
    std::mt19937_64 rng(17);
    CHECK_THROWS_AS(matrix_gamma(random_matrix(3, 3, rng), 1.0), std::domain_error);
  }
}

TEST_CASE("finite_diff") {
  SUBCASE("constant field has zero derivative") {
    FieldSample f({Axis{"x", 0.0, 0.1, 9}});
    for (auto& v : f.values) v = CMatrix::Constant(1, 1, Complex(3.5, -1.0));
    const FieldSample d = finite_diff(f, 0, 1);
    for (int k = 1; k < 8; ++k) CHECK(std::abs(d.values[k](0, 0)) <= 1e-14);
  }

  SUBCASE("third derivative of a cubic is exact") {
    FieldSample f({Axis{"x", -0.04, 1e-2, 9}});
    for (int k = 0; k < 9; ++k) {
      const double x = f.axes[0].coord(k);
      f.values[k] = CMatrix::Constant(1, 1, Complex(x * x * x, 0.0));
    }
    const FieldSample d = finite_diff(f, 0, 3);
    for (int k = 2; k < 7; ++k) CHECK(std::abs(d.values[k](0, 0) - 6.0) <= 1e-8);
  }

  SUBCASE("second derivative of sin converges at order two") {
    std::vector<double> hs{1e-2, 5e-3};
    std::vector<double> errs;
    for (double h : hs) {
      const int n = 41;
      FieldSample f({Axis{"x", 0.3, h, n}});
      for (int k = 0; k < n; ++k)
        f.values[k] = CMatrix::Constant(1, 1, Complex(std::sin(f.axes[0].coord(k)), 0.0));
      const FieldSample d = finite_diff(f, 0, 2);
      double err = 0.0;
      for (int k = 1; k + 1 < n; ++k)
        err = std::max(err,
                       std::abs(d.values[k](0, 0) + std::sin(f.axes[0].coord(k))));
      errs.push_back(err);
    }
    const double order = fit_order(hs, errs);
    CHECK(order >= 1.8);
    CHECK(order <= 2.6);
  }

  SUBCASE("stencil needs enough samples") {
    FieldSample f({Axis{"x", 0.0, 0.1, 4}});
    for (auto& v : f.values) v = CMatrix::Zero(1, 1);
    CHECK_THROWS_AS(finite_diff(f, 0, 3), std::invalid_argument);
  }
}

TEST_CASE("opnorm is submultiplicative on random instances") {
  std::mt19937_64 rng(18);
  for (int rep = 0; rep < 10; ++rep) {
    CMatrix a = random_matrix(8, 8, rng), b = random_matrix(8, 8, rng);
    CHECK(opnorm(CMatrix(a * b)) <= opnorm(a) * opnorm(b) * (1.0 + 1e-12));
  }
  CMatrix a = random_matrix(8, 8, rng);
  CHECK(opnorm(CMatrix(a.adjoint().adjoint() - a)) == 0.0);
}
