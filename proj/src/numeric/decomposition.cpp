#include <algorithm>
#include <cmath>
#include <sstream>

#include "internal.hpp"
#include "pcz/errors.hpp"
#include "pcz/numeric.hpp"

namespace pcz {

namespace {

double cutoff(double x, double r) {
  double t = (std::fabs(x) - 0.5 * r) / (0.5 * r);
  if (t <= 0) return 1;
  if (t >= 1) return 0;
  auto psi = [](double s) { return s <= 0 ? 0.0 : std::exp(-1.0 / s); };
  return psi(1 - t) / (psi(1 - t) + psi(t));
}

std::string at(double x, double y) {
  std::ostringstream os;
  os.precision(6);
  os << "(" << x << ", " << y << ")";
  return os.str();
}

}  // namespace

DecompositionReport decomposition_check(int a, int b, int m, const std::vector<FlatTerm>& flats, int p,
                                        const std::vector<double>& sigmas, double margin, const QuadConfig& cfg) {
  if (a < 1 || m < 1 || b < 0) fail(ErrorCode::InvalidArgument, "need a, m >= 1 and b >= 0");
  if (p < 2 || p % 2 != 0) fail(ErrorCode::InvalidArgument, "p must be a positive even integer");
  DecompositionReport rep;
  rep.a = a;
  rep.b = b;
  rep.m = m;
  rep.p = p;
  const double R = rep.R;
  BivariateFunction G(BivariatePolynomial::monomial(a, m), flats);

  // flat part divided by x^a, summed in absolute value at y = 1
  auto gamma = [&](double x) {
    if (x == 0) return 0.0;
    double s = 0;
    for (auto& t : flats) s += std::fabs(t.eval(x, 1.0));
    return s / std::pow(std::fabs(x), a);
  };
  auto bound_ok = [&](double r) {
    for (int j = 1; j <= 64; ++j)
      for (double x : {r * j / 64.0, r * std::pow(1e-3, j / 64.0)})
        for (double sx : {x, -x})
          if (gamma(sx) > 0.5 * std::pow(std::fabs(sx), p * m)) return false;
    return true;
  };
  rep.r_p = 0;
  for (int i = 0; i <= 240; ++i) {
    double r = R * std::pow(2.0, -i / 8.0);
    if (bound_ok(r)) {
      rep.r_p = r;
      break;
    }
  }
  if (rep.r_p == 0) fail(ErrorCode::AssertionFailed, "flat bound gamma(x) <= |x|^(pm)/2 fails on every tried radius");
  const double rp = rep.r_p;

  // G1 = G / (x^a y^m) on U1
  rep.min_G1 = 1e300;
  for (int i = 1; i <= 40; ++i) {
    double x0 = rp * std::pow(1e-3, (i - 1) / 39.0);
    for (double x : {x0, -x0}) {
      double ylo = std::pow(x, p);
      for (int j = 1; j <= 40; ++j) {
        double y = ylo * std::pow(R / ylo, j / 40.0);
        double g1 = G.eval(x, y) / (std::pow(x, a) * std::pow(y, m));
        rep.min_G1 = std::min(rep.min_G1, g1);
        if (!(g1 >= rep.c))
          fail(ErrorCode::AssertionFailed, "G1 >= " + std::to_string(rep.c) + " violated at " + at(x, y));
      }
    }
  }

  // m-th y-derivative of G2 = G / x^a by central differences
  double fact = 1;
  for (int i = 2; i <= m; ++i) fact *= i;
  rep.mu = fact / 2;
  auto G2 = [&](double x, double y) {
    double s = std::pow(y, m);
    if (x != 0)
      for (auto& t : flats) s += t.eval(x, y) / std::pow(x, a);
    return s;
  };
  const double h = 1e-2;
  rep.min_dmG2 = 1e300;
  for (int i = -10; i <= 10; ++i)
    for (int j = -10; j <= 10; ++j) {
      double x = R * i / 10.0, y = R * j / 10.0;
      double d = 0, binom = 1;
      for (int q = 0; q <= m; ++q) {
        d += ((q % 2) ? -binom : binom) * G2(x, y + (0.5 * m - q) * h);
        binom = binom * (m - q) / (q + 1);
      }
      d /= std::pow(h, m);
      rep.min_dmG2 = std::min(rep.min_dmG2, d);
      if (!(d >= rep.mu))
        fail(ErrorCode::AssertionFailed, "d^m G2/dy^m >= " + std::to_string(rep.mu) + " violated at " + at(x, y));
    }

  rep.I2_edge = -double(p + b + 1) / double(m * p + a);
  rep.J_floor = -1.0 / m + margin;
  rep.I2_floor = std::max(rep.I2_edge, -1.0 / m) + margin;
  rep.notes.push_back("quadrant x > 0, y > 0; R = " + std::to_string(R) + ", r_p = " + std::to_string(rp));
  rep.notes.push_back("I2 asserted for sigma > max(-(p+b+1)/(mp+a), -1/m) + margin");

  auto weight_in = [&](double x, double) { return std::pow(x, b) * cutoff(x, rp); };
  auto weight_out = [&](double x, double) { return std::pow(x, b) * (1 - cutoff(x, rp)); };
  for (double s : sigmas) {
    DecompositionRow row;
    row.sigma = s;
    detail::Budget budget;
    budget.cap = cfg.max_evals;
    detail::Region r1{0, 1, rp, [&](double x) { return std::pair<double, double>{std::pow(x, p), R}; }, weight_in};
    detail::Region r2{0, 1, rp, [&](double x) { return std::pair<double, double>{0.0, std::pow(x, p)}; }, weight_in};
    detail::Region rj{0.5 * rp, 1, R - 0.5 * rp, [&](double) { return std::pair<double, double>{0.0, R}; }, weight_out};
    row.I1 = detail::integrate_region(G, s, r1, cfg, budget);
    row.I2 = detail::integrate_region(G, s, r2, cfg, budget);
    row.J = detail::integrate_region(G, s, rj, cfg, budget);
    row.I2_checked = s > rep.I2_floor;
    row.J_checked = s > rep.J_floor;
    if (row.I2_checked && !(row.I2.converged && std::isfinite(row.I2.value)))
      fail(ErrorCode::AssertionFailed, "I2 not bounded at sigma = " + std::to_string(s));
    if (row.J_checked && !(row.J.converged && std::isfinite(row.J.value)))
      fail(ErrorCode::AssertionFailed, "J not bounded at sigma = " + std::to_string(s));
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace pcz
