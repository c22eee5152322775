#include <algorithm>

#include "internal.hpp"
#include "pcz/errors.hpp"
#include "pcz/squarefree.hpp"

namespace pcz {

namespace {

// Real, NonReal or Unresolved for the whole factor: real as soon as one orbit is.
Realness factor_realness(const BivariatePolynomial& g) {
  bool y_divides = true;
  for (auto& [e, c] : g.terms())
    if (e.second == 0) {
      y_divides = false;
      break;
    }
  if (y_divides) return Realness::Real;
  Realness best = Realness::NonReal;
  for (mpfr_prec_t prec : precision_schedule()) {
    PrecisionScope scope(prec);
    for (int P : {4, 8, 16, 32, 64}) {
      try {
        auto fb = detail::factor_branches(g, P);
        best = Realness::NonReal;
        for (std::size_t j = 0; j < fb.size(); ++j) {
          auto r = detail::orbit_realness(fb, j);
          if (r.realness == Realness::Real) return Realness::Real;
          if (r.realness == Realness::Unresolved) best = Realness::Unresolved;
        }
        if (best == Realness::NonReal) return best;
      } catch (const PrecisionLow&) {
        best = Realness::Unresolved;
        break;
      }
    }
  }
  return best;
}

}  // namespace

Mu0Result mu0_range(const BivariateFunction& f) {
  if (f.poly.is_zero()) fail(ErrorCode::FlatInput, "polynomial part is zero; mu0 is undefined");
  Mu0Result r;
  if (!f.poly.coeff(0, 0).is_zero()) return r;
  int m0 = f.poly.ord_x();
  r.lower = r.upper = m0;
  BivariatePolynomial red = f.poly.shifted_down(m0, 0);
  auto factors = bivariate_squarefree(red);
  std::sort(factors.begin(), factors.end(), [](const SqfFactor& a, const SqfFactor& b) { return a.k > b.k; });
  for (auto& s : factors) {
    if (s.k <= r.lower) break;
    if (!s.g.coeff(0, 0).is_zero()) continue;
    Realness re = factor_realness(s.g);
    if (re == Realness::Real) {
      r.lower = std::max(r.lower, s.k);
      r.upper = std::max(r.upper, s.k);
      break;
    }
    if (re == Realness::Unresolved) r.upper = std::max(r.upper, s.k);
  }
  return r;
}

int mu0(const BivariateFunction& f) {
  Mu0Result r = mu0_range(f);
  if (!r.resolved())
    fail(ErrorCode::PrecisionExhausted,
         "real branch of multiplicity " + std::to_string(r.upper) + " could not be certified; mu0 in [" +
             std::to_string(r.lower) + ", " + std::to_string(r.upper) + "]");
  return r.value();
}

}  // namespace pcz
