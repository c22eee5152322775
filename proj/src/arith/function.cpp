#include "pcz/function.hpp"

#include <cmath>
#include <tuple>

namespace pcz {

double BivariateFunction::eval_poly(double x, double y) const {
  double s = 0;
  for (auto& [e, c] : poly.terms()) s += c.to_double() * std::pow(x, e.first) * std::pow(y, e.second);
  return s;
}

double BivariateFunction::eval(double x, double y) const {
  double s = eval_poly(x, y);
  for (auto& f : flats) s += f.eval(x, y);
  return s;
}

BivariateFunction BivariateFunction::swapped() const {
  // Flat terms are attached to the x variable and are not swapped.
  return BivariateFunction(poly.swapped(), flats, name);
}

std::string BivariateFunction::str() const {
  std::string s = poly.str();
  for (auto& f : flats) s += " + " + f.str();
  return s;
}

BivariatePolynomial parse_poly_terms(const std::vector<std::tuple<int, int, Rational>>& terms) {
  BivariatePolynomial p;
  for (auto& [j, k, c] : terms) p.add_term(j, k, c);
  return p;
}

BivariatePolynomial linear_change(const BivariatePolynomial& f, const Rational& a, const Rational& b,
                                  const Rational& c, const Rational& d) {
  BivariatePolynomial sx, sy;
  sx.add_term(1, 0, a);
  sx.add_term(0, 1, b);
  sy.add_term(1, 0, c);
  sy.add_term(0, 1, d);
  return f.compose(sx, sy);
}

}  // namespace pcz
