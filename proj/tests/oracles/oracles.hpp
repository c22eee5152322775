#pragma once
// Independent reference computations. Nothing here calls into the library
// beyond plain data types.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

#include "pcz/rational.hpp"

namespace oracle {

// Newton distance from the support: the smallest t with (t,t) above the
// convex hull, minimized over pairs of support points.
inline pcz::Rational newton_distance(const std::vector<std::pair<int, int>>& supp) {
  using pcz::Rational;
  Rational best(1000000);
  for (auto& p : supp) best = pcz::min(best, Rational(std::max(p.first, p.second)));
  for (auto& p : supp)
    for (auto& q : supp) {
      // l p + (1-l) q; equal coordinates when l (p1-p2) + (1-l)(q1-q2) = 0
      long dp = p.first - p.second, dq = q.first - q.second;
      if (dp == dq || (dp > 0) == (dq > 0)) continue;
      Rational l(-dq, dp - dq);
      Rational t = l * Rational(p.first) + (Rational(1) - l) * Rational(q.first);
      best = pcz::min(best, t);
    }
  return best;
}

// Integral of |r^(2k) h(r^2)|^sigma over the box [-R,R]^2 in polar
// coordinates, h with positive coefficients (h[0] + h[1] s + ...).
inline double radial_box(int k, const std::vector<double>& h, double sigma, double R) {
  double alpha = 2 * k * sigma + 2;
  auto hv = [&](double s) {
    double v = 0;
    for (std::size_t i = h.size(); i-- > 0;) v = v * s + h[i];
    return v;
  };
  auto simpson = [](auto&& g, double a, double b, int n) {
    double hh = (b - a) / n, s = g(a) + g(b);
    for (int i = 1; i < n; ++i) s += g(a + i * hh) * (i % 2 ? 4 : 2);
    return s * hh / 3;
  };
  // after s = r^alpha the radial integrand is smooth enough for Simpson
  auto radial = [&](double theta) {
    double rho = R / std::cos(theta);
    double top = std::pow(rho, alpha);
    return simpson([&](double s) { return std::pow(hv(std::pow(s, 2 / alpha)), sigma); }, 0.0, top, 4000) / alpha;
  };
  return 8 * simpson(radial, 0.0, M_PI / 4, 800);
}

// r for f = t^k on [0, L]: 1 / ((1 + k sigma) eta^sigma), independent of L.
inline double vdc_monomial(int k, double eta, double sigma) { return 1.0 / ((1 + k * sigma) * std::pow(eta, sigma)); }

// Members -(b+j)/a, -k/m, -(b+j+pk)/(a+pm) for j, k <= n.
inline std::vector<pcz::Rational> lemma_h_members(long a, long m, long b, long p, int n) {
  std::vector<pcz::Rational> out;
  for (int j = 1; j <= n; ++j) out.push_back(pcz::Rational(-(b + j), a));
  for (int k = 1; k <= n; ++k) out.push_back(pcz::Rational(-k, m));
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) out.push_back(pcz::Rational(-(b + j + p * k), a + p * m));
  return out;
}

// Minimal embedded resolution of y^p = x^q (coprime): number of blowups is
// the sum of the Euclid quotients; the last divisor has N = pq and
// Jacobian order p + q - 1.
struct MonomialCurve {
  int blowups = 0;
  long N_last = 0;
  long k_last = 0;
};
inline MonomialCurve monomial_curve(int p, int q) {
  MonomialCurve r;
  int a = std::max(p, q), b = std::min(p, q);
  while (b > 0) {
    r.blowups += a / b;
    int t = a % b;
    a = b;
    b = t;
  }
  r.N_last = static_cast<long>(p) * q;
  r.k_last = p + q - 1;
  return r;
}

}  // namespace oracle
