#include <algorithm>

#include "../oracles/oracles.hpp"
#include "doctest.h"
#include "pcz/blowup.hpp"
#include "pcz/errors.hpp"

using namespace pcz;
using P = BivariatePolynomial;

namespace {
const P X = P::x(), Y = P::y();

std::vector<int> sorted_N(const ResolutionTree& t) {
  std::vector<int> v;
  for (auto& d : t.divisors) v.push_back(d.N);
  std::sort(v.begin(), v.end());
  return v;
}
}  // namespace

TEST_CASE("cusp resolves with N = 2, 3, 6 and Jacobian orders 1, 2, 4") {
  BivariateFunction f(Y * Y - X.pow(3));
  auto tree = almost_resolve(f, 32);
  CHECK(tree.blowups() == 3);
  CHECK(sorted_N(tree) == std::vector<int>{2, 3, 6});
  std::vector<int> ks;
  for (auto& d : tree.divisors) ks.push_back(d.k);
  std::sort(ks.begin(), ks.end());
  CHECK(ks == std::vector<int>{1, 2, 4});
  std::string why;
  CHECK_MESSAGE(divisor_graph_ok(tree, &why), why);
  for (auto& r : verify_all(f, tree)) CHECK_MESSAGE(r.ok, r.message);
}

TEST_CASE("perturbed divisor exponent fails verification") {
  BivariateFunction f(Y * Y - X.pow(3));
  auto tree = almost_resolve(f, 32);
  REQUIRE_FALSE(tree.points.empty());
  CHECK_THROWS_AS(verify_total_transform(f, tree, PointKind::Distinguished, 0, 1), Error);
}

TEST_CASE("monomial curves follow the Euclid oracle") {
  for (auto [p, q] : {std::pair{2, 5}, {3, 4}, {3, 5}, {2, 7}}) {
    BivariateFunction f(Y.pow(p) - X.pow(q));
    auto tree = almost_resolve(f, 48);
    auto want = oracle::monomial_curve(p, q);
    CAPTURE(p);
    CAPTURE(q);
    CHECK(tree.blowups() == want.blowups);
    auto last = std::max_element(tree.divisors.begin(), tree.divisors.end(),
                                 [](const Divisor& a, const Divisor& b) { return a.N < b.N; });
    REQUIRE(last != tree.divisors.end());
    CHECK(last->N == want.N_last);
    CHECK(last->k == want.k_last);
    CHECK(divisor_graph_ok(tree));
  }
}

TEST_CASE("contact exponents of graph branches") {
  BranchState a, b;
  a.phi = Series::monomial(2, Coeff(Rational(1)), 16);
  b.phi = a.phi + Series::monomial(5, Coeff(Rational(1)), 16);
  auto c = contact_exponent(a, b);
  CHECK(c.kind == ContactValue::Finite);
  CHECK(c.value == 5);
  auto same = contact_exponent(a, a);
  CHECK(same.kind == ContactValue::Infinity);
}

TEST_CASE("separation decrements the total contact") {
  // three lines plus a tangent parabola
  BivariateFunction f(Y * (Y - X) * (Y + X) * (Y - X * X));
  auto tree = graph_tree(f, 32);
  auto log = separate_branches(tree);
  CHECK(log.decrement_checks > 0);
  CHECK(log.blowups >= 1);
  std::string why;
  CHECK_MESSAGE(divisor_graph_ok(tree, &why), why);
}

TEST_CASE("dot export names every divisor") {
  auto tree = almost_resolve(BivariateFunction(Y * Y - X.pow(3)), 32);
  std::string dot = tree_to_dot(tree);
  CHECK(dot.find("graph") != std::string::npos);
  for (auto& d : tree.divisors) CHECK(dot.find("E" + std::to_string(d.id)) != std::string::npos);
}
