#include <random>

#include "../oracles/oracles.hpp"
#include "doctest.h"
#include "pcz/newton.hpp"

using namespace pcz;
using P = BivariatePolynomial;

namespace {
const P X = P::x(), Y = P::y();
}

TEST_CASE("newton distance matches the pairwise oracle on random supports") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> e(0, 9), n(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    P f;
    std::vector<std::pair<int, int>> supp;
    int terms = n(rng);
    for (int i = 0; i < terms; ++i) {
      int a = e(rng), b = e(rng);
      if (a + b == 0) continue;
      f.add_term(a, b, Rational(1));
      supp.push_back({a, b});
    }
    if (supp.empty()) continue;
    CAPTURE(f.str());
    CHECK(newton_distance(newton_polygon(f)) == oracle::newton_distance(supp));
  }
}

TEST_CASE("principal faces") {
  auto np = newton_polygon(Y * Y - X.pow(3));
  Rational d = newton_distance(np);
  CHECK(d == Rational(6, 5));
  CHECK(principal_face(np, d).kind == FaceKind::CompactEdge);

  auto v = newton_polygon(X * X * Y * Y + X.pow(5) + Y.pow(5));
  CHECK(principal_face(v, newton_distance(v)).kind == FaceKind::Vertex);

  auto u = newton_polygon(X * Y.pow(3));
  CHECK(newton_distance(u) == Rational(3));
  CHECK(principal_face(u, Rational(3)).kind == FaceKind::UnboundedEdge);
}

TEST_CASE("nondegeneracy and convenience") {
  auto r = degeneracy_report(BivariateFunction(X.pow(4) + Y.pow(4)));
  CHECK(r.convenient);
  CHECK(r.r_nondegenerate);
  auto s = degeneracy_report(BivariateFunction((Y - X).pow(2) + Y.pow(5)));
  CHECK_FALSE(s.r_nondegenerate);
  auto t = degeneracy_report(BivariateFunction(X * Y.pow(3)));
  CHECK_FALSE(t.convenient);
}

TEST_CASE("adapted coordinates and height") {
  // (y - x)^2 + x^5: not adapted, d = 1; in y - x coordinates d = 10/7.
  BivariateFunction f((Y - X).pow(2) + X.pow(5));
  auto rep = is_adapted(f);
  CHECK_FALSE(rep.adapted);
  CHECK(rep.d == Rational(1));
  CHECK(rep.mult == 2);
  CHECK(height_delta0(f) == Rational(10, 7));

  CHECK(height_delta0(BivariateFunction(Y * Y - X.pow(3))) == Rational(6, 5));
  CHECK(height_delta0(BivariateFunction((X * X - Y * Y).pow(2))) == Rational(2));
}

TEST_CASE("height of smooth and analytic-root cases is the limit") {
  P one(Rational(1));
  CHECK(height_delta0(BivariateFunction(Y + X * X + X * Y)) == Rational(1));
  CHECK(height_delta0(BivariateFunction(X + Y.pow(3))) == Rational(1));
  CHECK(height_delta0(BivariateFunction((Y * (one - X) - X * X).pow(2))) == Rational(2));
  CHECK(height_delta0(BivariateFunction(X.pow(3) * (Y * (one - X) - X * X))) == Rational(3));
}

TEST_CASE("mu0 on a quasi-homogeneous edge") {
  P fk = (Y - X * X).pow(3) * (Y + X * X);
  auto np = newton_polygon(fk);
  REQUIRE(np.edges.size() == 1);
  CHECK(mu0_quasi_homogeneous(fk, np.edges[0]) == 3);
}
