#include "doctest.h"
#include "pcz/ball.hpp"
#include "pcz/coeff.hpp"
#include "pcz/errors.hpp"
#include "pcz/function.hpp"
#include "pcz/poly.hpp"
#include "pcz/rational.hpp"
#include "pcz/roots.hpp"
#include "pcz/squarefree.hpp"

using namespace pcz;
using P = BivariatePolynomial;

TEST_CASE("rational parse and arithmetic") {
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse(" -7 ") == Rational(-7));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(-5, 2).floor() == -3);
  CHECK(Rational(-5, 2).ceil() == -2);
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(3, 7).str() == "3/7");
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("abc"), Error);
}

TEST_CASE("ball enclosures contain the exact value") {
  PrecisionScope scope(128);
  BallComplex third = BallComplex::from_rational(Rational(1, 3));
  BallComplex one = third * BallComplex::from_rational(Rational(3));
  CHECK((one - BallComplex::from_rational(Rational(1))).contains_zero());
  BallComplex i = BallComplex::from_gaussian(Rational(0), Rational(1));
  CHECK((i * i + BallComplex::from_rational(Rational(1))).contains_zero());
  CHECK(i.imag_excludes_zero());
  BallComplex w = BallComplex::root_of_unity(1, 6);
  CHECK((w.pow(6) - BallComplex::from_rational(Rational(1))).contains_zero());
}

TEST_CASE("exact root finding with multiplicities") {
  // (z - 1)^2 (z + 1/2) (z^2 + 1)
  QPoly a({Rational(-1), Rational(1)}), b({Rational(1, 2), Rational(1)}), c({Rational(1), Rational(0), Rational(1)});
  QPoly p = a * a * b * c;
  auto roots = roots_exact(p);
  int real = 0, total = 0;
  for (auto& r : roots) {
    total += r.mult;
    if (r.real) ++real;
    if (r.z.is_exact() && r.z.exact() == Rational(1)) CHECK(r.mult == 2);
  }
  CHECK(total == 5);
  CHECK(real == 2);
  CHECK(qpoly_count_real_roots(p, nullptr, nullptr) == 2);
  CHECK(qpoly_root_multiplicity(p, Rational(1)) == 2);
}

TEST_CASE("kth root prefers exact and real values") {
  Coeff r = kth_root(Coeff(Rational(-8, 27)), 3);
  REQUIRE(r.is_exact());
  CHECK(r.exact() == Rational(-2, 3));
  Coeff s = kth_root(Coeff(Rational(2)), 2);
  CHECK((s * s - Coeff(Rational(2))).is_zero());
}

TEST_CASE("bivariate square-free decomposition") {
  P x = P::x(), y = P::y();
  P f = (y - x).pow(3) * (y * y - x.pow(3));
  auto fac = bivariate_squarefree(f);
  int degsum = 0;
  bool cube = false;
  for (auto& s : fac) {
    degsum += s.k * s.g.deg_y();
    cube = cube || (s.k == 3 && s.g.deg_y() == 1);
  }
  CHECK(degsum == 5);
  CHECK(cube);
}

TEST_CASE("polynomial compose and linear change") {
  P x = P::x(), y = P::y();
  P f = y * y - x.pow(3);
  P g = f.compose(x, y + x);
  CHECK(g == (y + x).pow(2) - x.pow(3));
  P h = linear_change(f, Rational(0), Rational(1), Rational(1), Rational(0));
  CHECK(h == x * x - y.pow(3));
}
