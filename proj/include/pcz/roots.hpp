#pragma once

#include <vector>

#include "pcz/ball.hpp"
#include "pcz/coeff.hpp"
#include "pcz/poly.hpp"

namespace pcz {

struct CRoot {
  Coeff z;       // exact when rational
  int mult = 1;  // multiplicity
  bool real = false;  // certified real (imaginary midpoint projected to 0)
};

// All complex roots with multiplicities of a nonzero exact polynomial.
// Multiplicities come from the exact square-free decomposition. Throws
// PrecisionLow if the current precision cannot separate the roots.
std::vector<CRoot> roots_exact(const QPoly& p);

// Roots of a polynomial with ball coefficients. Coalescing root
// approximations are grouped into one multiple root when their cluster is
// tiny at the working precision. coeffs_real asserts that every coefficient
// encloses a real number, which enables certification of real roots.
std::vector<CRoot> roots_ball(const UPoly<Coeff>& p, bool coeffs_real);

// Plain approximations (no enclosure) at the given precision.
std::vector<BallComplex> aberth(const std::vector<BallComplex>& coeffs, mpfr_prec_t prec);

// Principal-branch k-th root of a nonzero coefficient, with an enclosure
// radius. Exact when the argument is a rational perfect power.
Coeff kth_root(const Coeff& w, int k);

}  // namespace pcz
