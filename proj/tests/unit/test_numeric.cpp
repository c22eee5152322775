#include <cmath>

#include "../oracles/oracles.hpp"
#include "doctest.h"
#include "pcz/errors.hpp"
#include "pcz/numeric.hpp"

using namespace pcz;
using P = BivariatePolynomial;

namespace {
const P X = P::x(), Y = P::y();
const P ONE(Rational(1));

FlatTerm flat(int xp, int yp, int p, Rational c = Rational(1)) {
  FlatTerm t;
  t.c = c;
  t.x_power = xp;
  t.y_power = yp;
  t.p = p;
  return t;
}
}  // namespace

TEST_CASE("integrand evaluation") {
  CHECK(eval_integrand(BivariateFunction(X * X + Y * Y), 1, 1) == doctest::Approx(2.0));
  BivariateFunction pure(P(), {flat(0, 0, 2)});
  CHECK(eval_integrand(pure, 0, 0.3) == 0.0);
  CHECK(eval_integrand(pure, 1e-3, 0) == 0.0);
  BivariateFunction g(X * Y * Y, {flat(1, 0, 2)});
  CHECK(eval_integrand(g, 1, 1) == doctest::Approx(1 + std::exp(-1.0)).epsilon(1e-14));
  CHECK(eval_integrand(g, -1, 1) == doctest::Approx(-1 - std::exp(-1.0)).epsilon(1e-14));
}

TEST_CASE("bump functions") {
  auto s = BumpSpec::smooth(1);
  CHECK(s(0, 0) == doctest::Approx(std::exp(-1.0)));
  CHECK(s(1, 0) == 0.0);
  auto b = BumpSpec::box(0.5);
  CHECK(b(0.49, -0.49) == 1.0);
  CHECK(b(0.51, 0) == 0.0);
}

TEST_CASE("sigma = 0 gives the box area") {
  auto q = zeta_quadrature(BivariateFunction(Y * Y - X.pow(3)), BumpSpec::box(1), 0.0);
  CHECK(q.converged);
  CHECK(q.value == doctest::Approx(4.0).epsilon(1e-6));
}

TEST_CASE("radially symmetric integrands match the polar oracle") {
  P r2 = X * X + Y * Y;
  struct Case {
    P f;
    int k;
    std::vector<double> h;
    double sigma;
  };
  std::vector<Case> cases = {
      {r2, 1, {1}, -0.3},
      {r2 * (ONE + r2), 1, {1, 1}, -0.4},
      {r2 * r2, 2, {1}, -0.2},
      {ONE + r2, 0, {1, 1}, 1.5},
      {r2 * (P(Rational(2)) + r2 * r2), 1, {2, 0, 1}, 0.5},
  };
  for (auto& c : cases) {
    CAPTURE(c.f.str());
    auto q = zeta_quadrature(BivariateFunction(c.f), BumpSpec::box(1), c.sigma);
    CHECK(q.converged);
    double want = oracle::radial_box(c.k, c.h, c.sigma, 1.0);
    CHECK(std::abs(q.value - want) <= 1e-3 * std::abs(want));
  }
}

TEST_CASE("cusp converges at -1/2 and not at -0.9") {
  BivariateFunction f(Y * Y - X.pow(3));
  CHECK(zeta_quadrature(f, BumpSpec::box(1), -0.5).converged);
  CHECK_FALSE(zeta_quadrature(f, BumpSpec::box(1), -0.9, threshold_config()).converged);
  CHECK_THROWS_AS(zeta_quadrature(f, BumpSpec::box(1), -1.0), Error);
}

TEST_CASE("simple pole fit recovers a synthetic residue") {
  std::vector<double> s;
  std::vector<QuadratureResult> rows;
  for (int i = 0; i < 8; ++i) {
    double sigma = -0.9 + 0.1 * i;
    QuadratureResult q;
    q.value = 3.0 / (sigma + 1) + 0.5;
    q.converged = true;
    s.push_back(sigma);
    rows.push_back(q);
  }
  auto fit = simple_pole_fit(s, rows, -1.0);
  CHECK(fit.A == doctest::Approx(3.0));
  CHECK(fit.B == doctest::Approx(0.5));
  CHECK(fit.used == 8);
}

TEST_CASE("van der Corput ratio of monomials") {
  for (int k : {2, 3}) {
    double eta = 1;
    for (int j = 2; j <= k; ++j) eta *= j;
    double sigma = -0.2 / k;
    auto mono = [k](double t) { return std::pow(t, k); };
    CHECK(vdc_ratio(mono, k, eta, 0, 1, sigma) == doctest::Approx(oracle::vdc_monomial(k, eta, sigma)).epsilon(1e-6));
    auto rows = vdc_scaling(mono, k, eta, sigma, 10);
    CHECK(rows.size() == 11);
    CHECK(vdc_spread(rows) <= 1.01);
  }
}

TEST_CASE("decomposition without flat terms") {
  auto rep = decomposition_check(1, 0, 2, {}, 4, {-0.3, 0.2});
  CHECK(rep.r_p == doctest::Approx(rep.R));
  CHECK(rep.min_G1 >= rep.c);
  CHECK(rep.min_dmG2 >= rep.mu);
  CHECK(rep.rows.size() == 2);
  for (auto& r : rep.rows) CHECK(r.J.converged);
}
