#pragma once

#include <vector>

#include "pcz/poly.hpp"

namespace pcz {

// Polynomial in y with coefficients in Q[x]; index = power of y.
using YPoly = std::vector<QPoly>;

YPoly to_ypoly(const BivariatePolynomial& f);
BivariatePolynomial from_ypoly(const YPoly& p);
QPoly ypoly_content(const YPoly& p);
YPoly ypoly_primitive(const YPoly& p);
// Greatest common divisor in Q(x)[y], returned primitive.
YPoly ypoly_gcd(const YPoly& a, const YPoly& b);
// Exact quotient in Q[x][y]; throws AssertionFailed if not exact.
YPoly ypoly_div_exact(const YPoly& a, const YPoly& b);

struct SqfFactor {
  BivariatePolynomial g;  // primitive in y, square-free, positive y-degree
  int k = 1;
};

// f = c * content(x) * prod g_k^k with pairwise coprime square-free g_k and a
// rational constant c.
std::vector<SqfFactor> bivariate_squarefree(const BivariatePolynomial& f, QPoly* content = nullptr);

}  // namespace pcz
