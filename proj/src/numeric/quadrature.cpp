#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include <Eigen/Dense>
#include <unsupported/Eigen/Polynomials>

#include "internal.hpp"
#include "pcz/errors.hpp"
#include "pcz/numeric.hpp"

namespace pcz {
namespace detail {

const double kGLNodes[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
                            0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
const double kGLWeights[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
                              0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};

void Budget::spend(long n) {
  used += n;
  if (cap > 0 && used > cap) fail(ErrorCode::BudgetExceeded, "evaluation budget of " + std::to_string(cap) + " exhausted");
}

SliceEval::SliceEval(const BivariateFunction& f) : flats_(f.flats) {
  int dy = f.poly.deg_y();
  for (auto& t : f.flats) dy = std::max(dy, t.y_power);
  poly_.assign(dy + 1, {});
  for (auto& [e, c] : f.poly.terms()) {
    auto& row = poly_[e.second];
    if ((int)row.size() <= e.first) row.resize(e.first + 1, 0.0);
    row[e.first] += c.to_double();
  }
  cur_.assign(dy + 1, 0.0);
}

void SliceEval::set_x(double x) {
  for (std::size_t k = 0; k < poly_.size(); ++k) {
    double s = 0;
    for (std::size_t j = poly_[k].size(); j-- > 0;) s = s * x + poly_[k][j];
    cur_[k] = s;
  }
  for (auto& t : flats_) cur_[t.y_power] += t.eval(x, 1.0);
}

std::vector<double> SliceEval::root_real_parts() const {
  std::vector<double> c = cur_;
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  std::vector<double> out;
  std::size_t low = 0;
  while (low < c.size() && c[low] == 0.0) ++low;
  if (low > 0 && low < c.size()) out.push_back(0.0);
  c.erase(c.begin(), c.begin() + std::min(low, c.size()));
  if (c.size() < 2) return out;
  Eigen::VectorXd coeffs(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) coeffs[i] = c[i];
  Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(coeffs);
  for (std::complex<double> z : solver.roots()) {
    for (int it = 0; it < 3; ++it) {
      std::complex<double> v = 0, d = 0;
      for (std::size_t k = c.size(); k-- > 0;) {
        d = d * z + v;
        v = v * z + c[k];
      }
      if (d == 0.0) break;
      std::complex<double> zn = z - v / d;
      if (!std::isfinite(zn.real()) || !std::isfinite(zn.imag())) break;
      z = zn;
    }
    if (std::isfinite(z.real())) out.push_back(z.real());
  }
  return out;
}

double gl8(const std::function<double(double)>& g, double lo, double hi, Budget& budget) {
  budget.spend(8);
  double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo), s = 0;
  for (int i = 0; i < 8; ++i) s += kGLWeights[i] * g(mid + half * kGLNodes[i]);
  return s * half;
}

SideResult graded(const std::function<double(int)>& piece, const GradeOptions& opt, double e, double L) {
  SideResult r;
  std::vector<double> v;
  double sum = 0;
  auto ratio = [&](std::size_t i) {
    double a = std::fabs(v[i]), b = std::fabs(v[i - 1]);
    if (b == 0) return a == 0 ? 0.0 : std::numeric_limits<double>::infinity();
    return a / b;
  };
  double rmax = 0, rmin = 0;
  bool below = false;
  for (int k = 0; k < opt.max_pieces; ++k) {
    double width = std::ldexp(L, -k - 1);
    if (k > 0 && width <= 8 * std::numeric_limits<double>::epsilon() * std::fabs(e)) break;
    double vk = piece(k);
    v.push_back(vk);
    sum += vk;
    r.pieces = k + 1;
    if (!std::isfinite(vk) || !std::isfinite(sum)) {
      r.value = sum;
      r.converged = false;
      r.error = std::numeric_limits<double>::infinity();
      return r;
    }
    if (k < 3) {
      r.trail.push_back(std::fabs(vk));
      continue;
    }
    double r1 = ratio(v.size() - 1), r2 = ratio(v.size() - 2), r3 = ratio(v.size() - 3);
    rmax = std::max({r1, r2, r3});
    rmin = std::min({r1, r2, r3});
    below = rmax < opt.shrink;
    bool stable = rmax - rmin <= 0.01;
    if (below) {
      double tail = vk * rmax / (1 - rmax);
      r.trail.push_back(std::fabs(tail));
      if (std::fabs(tail) <= opt.tol * std::fabs(sum) || (stable && k >= opt.stable_converge)) {
        r.value = sum + tail;
        r.error = std::fabs(tail) * (stable ? 0.05 : 1.0);
        return r;
      }
    } else {
      r.trail.push_back(std::fabs(vk));
      if (stable && k >= opt.stable_diverge) {
        r.value = sum;
        r.converged = false;
        r.error = std::numeric_limits<double>::infinity();
        return r;
      }
    }
  }
  if (v.size() >= 4 && below) {
    double tail = v.back() * rmax / (1 - rmax);
    r.value = sum + tail;
    r.error = std::fabs(tail);
  } else if (v.size() < 4) {
    r.value = sum;
  } else {
    r.value = sum;
    r.converged = false;
    r.error = std::numeric_limits<double>::infinity();
  }
  return r;
}

namespace {

struct InnerResult {
  double value = 0, error = 0;
  bool converged = true;
};

InnerResult inner_integral(SliceEval& S, double x, double sigma, const Region& reg, const GradeOptions& opt,
                           Budget& budget) {
  InnerResult out;
  auto [ylo, yhi] = reg.ylim(x);
  if (!(yhi > ylo)) return out;
  S.set_x(x);
  std::vector<double> bps{ylo, yhi};
  for (double r : S.root_real_parts())
    if (r > ylo && r < yhi) bps.push_back(r);
  std::sort(bps.begin(), bps.end());
  double merge = 1e-13 * (yhi - ylo);
  std::vector<double> pts;
  for (double b : bps)
    if (pts.empty() || b - pts.back() > merge) pts.push_back(b);
  if (pts.back() < yhi) pts.back() = yhi;

  auto g = [&](double y) {
    double v = std::pow(std::fabs(S(y)), sigma);
    double w = reg.weight(x, y);
    return w == 0 ? 0.0 : v * w;
  };
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    double a = pts[i], b = pts[i + 1], h = 0.5 * (b - a);
    for (int side = 0; side < 2; ++side) {
      double e = side == 0 ? a : b;
      double dir = side == 0 ? 1.0 : -1.0;
      auto piece = [&](int k) {
        double t0 = std::ldexp(h, -k - 1), t1 = std::ldexp(h, -k);
        double lo = e + dir * t0, hi = e + dir * t1;
        if (lo > hi) std::swap(lo, hi);
        return gl8(g, lo, hi, budget);
      };
      SideResult sr = graded(piece, opt, e, h);
      out.value += sr.value;
      out.error += sr.error;
      out.converged = out.converged && sr.converged;
    }
  }
  return out;
}

}  // namespace

QuadratureResult integrate_region(const BivariateFunction& f, double sigma, const Region& reg, const QuadConfig& cfg,
                                  Budget& budget) {
  SliceEval S(f);
  GradeOptions inner_opt;
  inner_opt.shrink = cfg.shrink;
  inner_opt.tol = cfg.tol;
  inner_opt.max_pieces = cfg.max_pieces;
  GradeOptions outer_opt = inner_opt;
  outer_opt.max_pieces = cfg.max_levels;
  outer_opt.stable_converge = 16;
  outer_opt.stable_diverge = 12;

  bool inner_ok = true;
  double inner_err = 0;
  long before = budget.used;
  auto shell = [&](int l) {
    double t0 = std::ldexp(reg.L, -l - 1), t1 = std::ldexp(reg.L, -l);
    double total = 0;
    const int panels = 4;
    for (int q = 0; q < panels; ++q) {
      double lo = t0 + (t1 - t0) * q / panels, hi = t0 + (t1 - t0) * (q + 1) / panels;
      double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
      for (int i = 0; i < 8; ++i) {
        double x = reg.x0 + reg.dir * (mid + half * kGLNodes[i]);
        InnerResult ir = inner_integral(S, x, sigma, reg, inner_opt, budget);
        inner_ok = inner_ok && ir.converged;
        inner_err += kGLWeights[i] * half * ir.error;
        total += kGLWeights[i] * half * ir.value;
      }
    }
    return total;
  };
  SideResult sr = graded(shell, outer_opt, reg.x0, reg.L);
  QuadratureResult q;
  q.value = sr.value;
  q.error = sr.error + inner_err;
  q.levels = sr.pieces;
  q.converged = sr.converged && inner_ok;
  q.level_errors = sr.trail;
  q.evals = budget.used - before;
  return q;
}

}  // namespace detail

double BumpSpec::operator()(double x, double y) const {
  if (kind == Kind::IndicatorBox) return (std::fabs(x) <= R && std::fabs(y) <= R) ? 1.0 : 0.0;
  double r2 = (x * x + y * y) / (R * R);
  return r2 < 1 ? std::exp(-1.0 / (1.0 - r2)) : 0.0;
}

std::pair<double, double> BumpSpec::y_range(double x) const {
  if (std::fabs(x) >= R) return {0, 0};
  if (kind == Kind::IndicatorBox) return {-R, R};
  double s = std::sqrt(R * R - x * x);
  return {-s, s};
}

QuadConfig threshold_config() {
  QuadConfig c;
  c.shrink = 0.98;
  return c;
}

double eval_integrand(const BivariateFunction& f, double x, double y) { return f.eval(x, y); }

namespace {

QuadratureResult quadrature_core(const BivariateFunction& f, const BumpSpec& phi, double sigma, const QuadConfig& cfg) {
  if (!(phi.R > 0)) fail(ErrorCode::InvalidArgument, "bump half-width must be positive");
  detail::Budget budget;
  budget.cap = cfg.max_evals;
  QuadratureResult total;
  total.converged = true;
  for (double dir : {1.0, -1.0}) {
    detail::Region reg;
    reg.x0 = 0;
    reg.dir = dir;
    reg.L = phi.R;
    reg.ylim = [&](double x) { return phi.y_range(x); };
    reg.weight = [&](double x, double y) { return phi(x, y); };
    QuadratureResult q = detail::integrate_region(f, sigma, reg, cfg, budget);
    total.value += q.value;
    total.error += q.error;
    total.converged = total.converged && q.converged;
    total.levels = std::max(total.levels, q.levels);
    if (total.level_errors.size() < q.level_errors.size()) total.level_errors.resize(q.level_errors.size(), 0.0);
    for (std::size_t i = 0; i < q.level_errors.size(); ++i) total.level_errors[i] += q.level_errors[i];
  }
  total.evals = budget.used;
  return total;
}

}  // namespace

QuadratureResult zeta_quadrature(const BivariateFunction& f, const BumpSpec& phi, double sigma, const QuadConfig& cfg) {
  if (!(sigma > -1)) fail(ErrorCode::InvalidArgument, "quadrature needs sigma > -1; use convergence_threshold below");
  return quadrature_core(f, phi, sigma, cfg);
}

ThresholdResult convergence_threshold(const BivariateFunction& f, const BumpSpec& phi, double lo, double hi,
                                      const QuadConfig& cfg, double width) {
  if (!(lo < hi)) fail(ErrorCode::InvalidArgument, "threshold bracket needs lo < hi");
  ThresholdResult t;
  auto conv = [&](double s) {
    QuadratureResult q = quadrature_core(f, phi, s, cfg);
    bool c = q.converged;
    t.trail.push_back({s, c});
    t.results.push_back(q);
    ++t.quadratures;
    return c;
  };
  if (!conv(hi)) fail(ErrorCode::InvalidArgument, "quadrature does not converge at the upper end of the bracket");
  if (conv(lo)) fail(ErrorCode::InvalidArgument, "quadrature converges at the lower end of the bracket");
  while (hi - lo > width) {
    double mid = 0.5 * (lo + hi);
    if (conv(mid))
      hi = mid;
    else
      lo = mid;
  }
  t.sigma_star = 0.5 * (lo + hi);
  t.width = hi - lo;
  return t;
}

PoleFit simple_pole_fit(const std::vector<double>& sigma, const std::vector<QuadratureResult>& rows, double pole) {
  PoleFit pf;
  pf.pole = pole;
  // weighted least squares on value = A u + B with u = 1/(sigma - pole), weights 1/value
  double s11 = 0, s12 = 0, s22 = 0, b1 = 0, b2 = 0;
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < sigma.size() && i < rows.size(); ++i) {
    if (!rows[i].converged || rows[i].value == 0 || sigma[i] == pole) continue;
    double u = 1.0 / (sigma[i] - pole), w = 1.0 / rows[i].value;
    s11 += u * u * w * w;
    s12 += u * w * w;
    s22 += w * w;
    b1 += u * rows[i].value * w * w;
    b2 += rows[i].value * w * w;
    pts.push_back({u, rows[i].value});
  }
  pf.used = (int)pts.size();
  double det = s11 * s22 - s12 * s12;
  if (pf.used < 2 || det == 0) return pf;
  pf.A = (b1 * s22 - b2 * s12) / det;
  pf.B = (s11 * b2 - s12 * b1) / det;
  double ss = 0;
  for (auto& [u, v] : pts) {
    double e = (pf.A * u + pf.B - v) / v;
    ss += e * e;
  }
  pf.rms_misfit = std::sqrt(ss / pf.used);
  return pf;
}

}  // namespace pcz
