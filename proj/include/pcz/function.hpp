#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "pcz/flat.hpp"
#include "pcz/poly.hpp"

namespace pcz {

// Polynomial part plus explicit flat terms. Every invariant except numeric
// evaluation depends on the polynomial part only.
struct BivariateFunction {
  BivariatePolynomial poly;
  std::vector<FlatTerm> flats;
  std::string name;

  BivariateFunction() = default;
  explicit BivariateFunction(BivariatePolynomial p, std::vector<FlatTerm> f = {}, std::string n = {})
      : poly(std::move(p)), flats(std::move(f)), name(std::move(n)) {}

  double eval(double x, double y) const;
  double eval_poly(double x, double y) const;
  bool is_flat() const { return poly.is_zero(); }
  // f(y, x)
  BivariateFunction swapped() const;
  std::string str() const;
};

// Convenience builders used throughout tests and examples.
BivariatePolynomial parse_poly_terms(const std::vector<std::tuple<int, int, Rational>>& terms);
BivariatePolynomial linear_change(const BivariatePolynomial& f, const Rational& a, const Rational& b,
                                  const Rational& c, const Rational& d);  // f(ax+by, cx+dy)

}  // namespace pcz
