#include <array>

#include "../oracles/oracles.hpp"
#include "doctest.h"
#include "pcz/zeta.hpp"

using namespace pcz;
using P = BivariatePolynomial;
using R = Rational;

namespace {
const P X = P::x(), Y = P::y();
}

TEST_CASE("one-dimensional pole sets") {
  auto p = poles_one_dim(3, 1);
  CHECK(p.largest_member() == R(-2, 3));
  CHECK(p.contains(R(-1)));
  CHECK(p.contains(R(-4, 3)));
  CHECK_FALSE(p.contains(R(-1, 3)));
  CHECK(p.holomorphic_bound == R(-2, 3));
  auto above = p.members_above(R(-2));
  CHECK(above == std::vector<R>{R(-2, 3), R(-1), R(-4, 3), R(-5, 3)});
}

TEST_CASE("lemma_H agrees with the enumerated families") {
  for (auto [a, m, b, p] : {std::array<long, 4>{1, 2, 0, 2}, {3, 1, 2, 4}, {2, 2, 1, 6}}) {
    auto h = poles_lemma_H(a, m, b, p);
    for (auto& s : oracle::lemma_h_members(a, m, b, p, 8)) CHECK_MESSAGE(h.contains(s), s.str());
  }
}

TEST_CASE("lemma_H edge is monotone in p and tends to -1/m when a < m") {
  for (long m : {2, 3, 4}) {
    Rational prev = lemma_H_edge(1, m, 0, 2);
    for (long p = 4; p <= 64; p += 2) {
      Rational e = lemma_H_edge(1, m, 0, p);
      CHECK(e > prev);
      CHECK(e < R(-1, m));
      prev = e;
    }
    CHECK((prev - R(-1, m)).abs() < R(1, 20));
  }
}

TEST_CASE("model Z regions") {
  auto z = poles_model_Z(1, 0, 2);
  CHECK(z.region == R(-1, 2));
  CHECK(z.in_region.empty());
  auto w = poles_model_Z(10, 0, 1);
  CHECK(w.in_region.size() == 9);
  CHECK(w.in_region.front() == R(-1, 10));
}

TEST_CASE("normal crossings combine both coordinate families") {
  auto n = poles_normal_crossings(2, 1, 3, 0);
  CHECK(n.contains(R(-1)));
  CHECK(n.contains(R(-1, 3)));
  CHECK_FALSE(n.contains(R(-1, 2)));
  CHECK(n.largest_member() == R(-1, 3));
}

TEST_CASE("extendibility reports") {
  auto cusp = extendibility_report(BivariateFunction(Y * Y - X.pow(3)), 32);
  REQUIRE(cusp.h0.has_value());
  CHECK(*cusp.h0 == R(5, 6));
  CHECK_FALSE(cusp.m0_lower.has_value());
  CHECK(ext_str(cusp.m0_lower) == "inf");

  auto sq = extendibility_report(BivariateFunction((X * X - Y * Y).pow(2)), 32);
  REQUIRE(sq.m0_lower.has_value());
  CHECK(*sq.m0_lower == R(1, 2));
  CHECK(sq.delta0 == R(2));
}
