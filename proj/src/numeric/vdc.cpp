#include <algorithm>
#include <cmath>
#include <limits>

#include "internal.hpp"
#include "pcz/errors.hpp"
#include "pcz/numeric.hpp"

namespace pcz {

namespace {

double power_at(const std::function<double(double)>& f, double t, double width, double sigma) {
  double v = f(t);
  if (v == 0) {
    double tj = t + 1e-7 * width;
    v = f(tj);
    if (v == 0) fail(ErrorCode::SingularSample, "f vanishes at quadrature node " + std::to_string(t));
  }
  return std::pow(std::fabs(v), sigma);
}

}  // namespace

double vdc_ratio(const std::function<double(double)>& f, int k, double eta, double a, double b, double sigma) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "derivative order must be positive");
  if (!(eta > 0)) fail(ErrorCode::InvalidArgument, "eta must be positive");
  if (!(b > a)) fail(ErrorCode::InvalidArgument, "empty interval");
  if (!(sigma < 0 && sigma > -1.0 / k)) fail(ErrorCode::InvalidArgument, "sigma must lie in (-1/k, 0)");
  detail::Budget budget;
  detail::GradeOptions opt;
  opt.tol = 1e-12;
  opt.max_pieces = 200;
  double h = 0.5 * (b - a), integral = 0;
  for (int side = 0; side < 2; ++side) {
    double e = side == 0 ? a : b, dir = side == 0 ? 1.0 : -1.0;
    auto piece = [&](int j) {
      double lo = e + dir * std::ldexp(h, -j - 1), hi = e + dir * std::ldexp(h, -j);
      if (lo > hi) std::swap(lo, hi);
      double w = hi - lo;
      return detail::gl8([&](double t) { return power_at(f, t, w, sigma); }, lo, hi, budget);
    };
    detail::SideResult sr = detail::graded(piece, opt, e, h);
    if (!sr.converged) return std::numeric_limits<double>::infinity();
    integral += sr.value;
  }
  double len = b - a;
  return integral / (std::pow(eta, sigma) * std::pow(len, 1 + k * sigma));
}

std::vector<VdcRow> vdc_scaling(const std::function<double(double)>& f, int k, double eta, double sigma, int levels) {
  std::vector<VdcRow> rows;
  for (int i = 0; i <= levels; ++i) {
    double len = std::ldexp(1.0, -i);
    rows.push_back({i, len, vdc_ratio(f, k, eta, 0.0, len, sigma)});
  }
  return rows;
}

double vdc_spread(const std::vector<VdcRow>& rows) {
  if (rows.empty()) return 1.0;
  double lo = rows.front().r, hi = rows.front().r;
  for (auto& r : rows) {
    lo = std::min(lo, r.r);
    hi = std::max(hi, r.r);
  }
  return hi / lo;
}

}  // namespace pcz
