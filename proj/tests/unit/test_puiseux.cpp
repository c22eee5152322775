#include "doctest.h"
#include "pcz/puiseux.hpp"

using namespace pcz;
using P = BivariatePolynomial;

namespace {
const P X = P::x(), Y = P::y();
}

TEST_CASE("cusp has one real branch of ramification 2") {
  BivariateFunction f(Y * Y - X.pow(3));
  auto fac = newton_puiseux(f, 32);
  REQUIRE(fac.branches.size() == 1);
  const auto& b = fac.branches[0];
  CHECK(b.E == 2);
  CHECK(b.realness == Realness::Real);
  CHECK(fac.weierstrass_degree == 2);
  CHECK(all_roots(fac, 16).size() == 2);
  double res = 1;
  CHECK(reconstruction_check(f, fac, 30, &res));
  CHECK(res < 1e-20);
}

TEST_CASE("x-power, multiplicities and non-real branches") {
  P one(Rational(1));
  BivariateFunction f(X.pow(2) * (Y - X).pow(3) * (Y * Y + X * X) * (one + X));
  auto fac = newton_puiseux(f, 24);
  CHECK(fac.m0 == 2);
  int real = 0, nonreal = 0;
  for (auto& b : fac.branches) {
    if (b.realness == Realness::Real) {
      ++real;
      CHECK(b.multiplicity == 3);
    }
    if (b.realness == Realness::NonReal) ++nonreal;
  }
  CHECK(real == 1);
  CHECK(nonreal >= 1);
  CHECK(reconstruction_check(f, fac, 20));
  CHECK(mu0(f) == 3);
}

TEST_CASE("mu0 reference values") {
  CHECK(mu0(BivariateFunction(Y * Y - X.pow(3))) == 1);
  CHECK(mu0(BivariateFunction(X.pow(4) + Y.pow(4))) == 0);
  CHECK(mu0(BivariateFunction(X * Y.pow(3))) == 3);
  CHECK(mu0(BivariateFunction((X * X - Y * Y).pow(2))) == 2);
  auto r = mu0_range(BivariateFunction(X.pow(6) + X * X * Y * Y + Y.pow(6)));
  CHECK(r.resolved());
  CHECK(r.value() == 0);
}

TEST_CASE("realness certification of single coefficients") {
  CHECK(certify_real(Coeff(Rational(3, 2))) == Realness::Real);
  CHECK(certify_real(Coeff(BallComplex::from_gaussian(Rational(0), Rational(1)))) == Realness::NonReal);
}

TEST_CASE("reconstruction catches a wrong factorization") {
  BivariateFunction f(Y * Y - X.pow(3));
  auto fac = newton_puiseux(f, 32);
  BivariateFunction g(Y * Y - X.pow(3) - X.pow(7));
  CHECK_FALSE(reconstruction_check(g, fac, 30));
}
