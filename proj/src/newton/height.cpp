#include "pcz/errors.hpp"
#include "pcz/newton.hpp"
#include "pcz/puiseux.hpp"

namespace pcz {

namespace {

struct Shift {
  int ratio;
  Rational c;
};

// The loop never stops when the witness converges to an analytic root
// y = phi(x) of multiplicity m. Confirm phi against the Puiseux branches and
// read d off the rows of height >= m, which are all that survive the limit.
bool analytic_limit(const BivariateFunction& f, const BivariatePolynomial& g, const std::vector<Shift>& shifts, bool swapped,
                    int m, Rational& d) {
  BivariateFunction h = f;
  if (swapped) h.poly = f.poly.swapped();
  int top = shifts.back().ratio;
  Factorization fac = newton_puiseux(h);
  fac = newton_puiseux(h, (top + 2) * fac.N);
  bool found = false;
  for (const auto& br : fac.branches) {
    if (br.E != 1 || br.multiplicity != m || br.realness != Realness::Real) continue;
    if (br.own.len() <= top) continue;
    bool match = true;
    for (int r = 0; r <= top && match; ++r) {
      Rational want(0);
      for (const auto& s : shifts)
        if (s.ratio == r) want = want + s.c;
      try {
        match = (br.own.get(r) - Coeff(want)).is_zero();
      } catch (const PrecisionLow&) {
        match = false;
      }
    }
    if (match) {
      found = true;
      break;
    }
  }
  if (!found) return false;
  BivariatePolynomial oriented = swapped ? g.swapped() : g, upper;
  for (const auto& [e, c] : oriented.terms())
    if (e.second >= m) upper.add_term(e.first, e.second, c);
  if (upper.is_zero()) return false;
  d = newton_distance(newton_polygon(upper));
  return true;
}

}  // namespace

HeightResult height_delta0_full(const BivariateFunction& f, int max_iterations) {
  BivariateFunction g = f;
  HeightResult res;
  Rational last(-1);
  std::vector<Shift> shifts;
  int mult = 0;
  bool swapped = false, steady = true;
  for (int it = 0; it <= max_iterations; ++it) {
    AdaptednessReport rep = is_adapted(g);
    if (rep.d <= last) fail(ErrorCode::AssertionFailed, "Newton distance failed to increase");
    last = rep.d;
    if (rep.adapted) {
      res.delta0 = rep.d;
      res.iterations = it;
      res.adapted_poly = g.poly;
      return res;
    }
    if (it == 0) swapped = rep.swapped;
    steady = steady && rep.swapped == swapped && (it == 0 || rep.mult == mult);
    mult = rep.mult;
    // Move the witness branch onto a coordinate axis.
    BivariatePolynomial shift = BivariatePolynomial::monomial(rep.swapped ? 0 : rep.ratio, rep.swapped ? rep.ratio : 0, rep.witness);
    if (rep.swapped)
      g.poly = g.poly.compose(BivariatePolynomial::x() + shift, BivariatePolynomial::y());
    else
      g.poly = g.poly.compose(BivariatePolynomial::x(), BivariatePolynomial::y() + shift);
    shifts.push_back({rep.ratio, rep.witness});
  }
  Rational d;
  if (steady && analytic_limit(f, g.poly, shifts, swapped, mult, d) && last < d) {
    res.delta0 = d;
    res.iterations = max_iterations + 1;
    res.adapted_poly = g.poly;
    return res;
  }
  throw Error(ErrorCode::IterationLimit, "adapted coordinates not reached; last d = " + last.str());
}

Rational height_delta0(const BivariateFunction& f, int max_iterations) {
  return height_delta0_full(f, max_iterations).delta0;
}

}  // namespace pcz
