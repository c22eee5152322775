#pragma once

#include <string>
#include <vector>

#include "pcz/function.hpp"
#include "pcz/series.hpp"

namespace pcz {

enum class Realness { Real, NonReal, Unresolved };
const char* realness_name(Realness r);

// Certificate-free check of a single coefficient: exact rationals are real,
// balls whose imaginary part excludes zero are non-real, anything else is
// unresolved at this precision.
Realness certify_real(const Coeff& c);

// One Galois orbit of roots y = phi(s), x = s^E, of a square-free factor.
struct PuiseuxBranch {
  Series own;             // coefficients in s where x = s^E
  int E = 1;              // ramification of the orbit
  int multiplicity = 1;   // exponent of the square-free factor
  int factor = 0;         // index of the square-free factor
  Realness realness = Realness::Unresolved;
  bool real_chain = false;  // every Newton step used a real root
  // When real: x = sigma * s^E, y = real_param(s) with real coefficients.
  int sigma = 1;
  Series real_param;
  int flat_tag = -1;      // index of an attached flat tail, if any

  // phi in the global parameter t with x = t^N (requires E | N).
  Series in_t(int N, int len) const;
};

struct Factorization {
  int N = 1;
  int m0 = 0;                // power of x dividing f
  int weierstrass_degree = 0;  // number of roots y -> 0 counted with multiplicity
  int T = 64;
  std::vector<PuiseuxBranch> branches;
  Coeff unit_constant;
  std::vector<BivariatePolynomial> factors;  // the square-free factors g_k
  std::vector<int> factor_mult;
};

// Newton-Puiseux factorization of the polynomial part to order T in t.
Factorization newton_puiseux(const BivariateFunction& f, int T = 64);

// All roots phi_j(zeta t^(N/E)) as series in t, each with multiplicity.
struct RootSeries {
  Series y;
  int multiplicity;
  int branch;
};
std::vector<RootSeries> all_roots(const Factorization& fac, int len);

// Weierstrass-divides f(t^N, y) / t^(N m0) by prod (y - phi)^m over
// C[t]/t^(order+1). Returns true when every remainder ball contains 0 and the
// quotient has a nonzero constant term; the largest remainder bound is
// written to max_residual.
bool reconstruction_check(const BivariateFunction& f, const Factorization& fac, int order, double* max_residual = nullptr);

std::vector<int> real_branch_indices(const Factorization& fac);

struct Mu0Result {
  int lower = 0;
  int upper = 0;
  bool resolved() const { return lower == upper; }
  int value() const { return lower; }
};

Mu0Result mu0_range(const BivariateFunction& f);
// Throws PrecisionExhausted when realness cannot be settled.
int mu0(const BivariateFunction& f);

// Escalation schedule used by every ball-arithmetic driver.
const std::vector<mpfr_prec_t>& precision_schedule();

}  // namespace pcz
