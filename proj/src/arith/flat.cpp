#include "pcz/flat.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "pcz/errors.hpp"

namespace pcz {

double FlatTerm::log_abs(double x, double y) const {
  if (c.is_zero()) return -std::numeric_limits<double>::infinity();
  if (x == 0.0) return -std::numeric_limits<double>::infinity();
  if (y == 0.0 && y_power > 0) return -std::numeric_limits<double>::infinity();
  double ax = std::fabs(x);
  double l = std::log(std::fabs(c.to_double())) + x_power * std::log(ax) - w / std::pow(ax, p);
  if (y_power > 0) l += y_power * std::log(std::fabs(y));
  return l;
}

double FlatTerm::eval(double x, double y) const {
  double l = log_abs(x, y);
  if (std::isinf(l)) return 0.0;
  double v = std::exp(l);
  if (c.sign() < 0) v = -v;
  if (x_power % 2 != 0 && x < 0) v = -v;
  if (y_power % 2 != 0 && y < 0) v = -v;
  return v;
}

std::string FlatTerm::str() const {
  std::ostringstream os;
  os << c.str();
  if (x_power) os << "*x^" << x_power;
  if (y_power) os << "*y^" << y_power;
  os << "*exp(-" << w << "/|x|^" << p << ")";
  return os.str();
}

FlatSum::FlatSum(std::vector<FlatTerm> t) {
  for (auto& x : t) add(x);
}

void FlatSum::add(const FlatTerm& t) {
  if (t.c.is_zero()) return;
  for (auto it = t_.begin(); it != t_.end(); ++it) {
    if (it->same_shape(t)) {
      it->c += t.c;
      if (it->c.is_zero()) t_.erase(it);
      return;
    }
  }
  t_.push_back(t);
}

FlatSum FlatSum::operator+(const FlatSum& o) const {
  FlatSum r = *this;
  for (auto& t : o.t_) r.add(t);
  return r;
}

FlatSum FlatSum::operator-(const FlatSum& o) const { return *this + o.scaled(Rational(-1)); }

FlatSum FlatSum::operator*(const FlatSum& o) const {
  FlatSum r;
  for (auto& a : t_)
    for (auto& b : o.t_) {
      if (a.p != b.p) fail(ErrorCode::InvalidArgument, "product of flat terms with different p");
      FlatTerm t{a.c * b.c, a.x_power + b.x_power, a.y_power + b.y_power, a.p, a.w + b.w};
      r.add(t);
    }
  return r;
}

FlatSum FlatSum::scaled(const Rational& s) const {
  FlatSum r;
  for (auto t : t_) {
    t.c *= s;
    r.add(t);
  }
  return r;
}

FlatSum FlatSum::pow(int n) const {
  if (n < 1) fail(ErrorCode::InvalidArgument, "flat powers need a positive exponent");
  FlatSum r = *this;
  for (int i = 1; i < n; ++i) r = r * *this;
  return r;
}

FlatSum FlatSum::shifted_x(int k) const {
  FlatSum r;
  for (auto t : t_) {
    t.x_power += k;
    r.add(t);
  }
  return r;
}

double FlatSum::eval(double x, double y) const {
  double s = 0;
  for (auto& t : t_) s += t.eval(x, y);
  return s;
}

std::string FlatSum::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < t_.size(); ++i) os << (i ? " + " : "") << t_[i].str();
  return os.str();
}

FlatSum flat_power_sums(const std::vector<FlatSum>& tails, int alpha) {
  FlatSum r;
  for (auto& t : tails)
    if (!t.is_zero()) r = r + t.pow(alpha);
  return r;
}

std::vector<FlatSum> flat_elementary_symmetric(const std::vector<FlatSum>& tails) {
  int n = static_cast<int>(tails.size());
  std::vector<FlatSum> p(n + 1), e(n + 1);
  for (int k = 1; k <= n; ++k) p[k] = flat_power_sums(tails, k);
  // e_0 = 1 is not flat; e_k for k >= 1 only involves e_0 through p_k.
  for (int k = 1; k <= n; ++k) {
    FlatSum acc = p[k].scaled(Rational(k % 2 == 1 ? 1 : -1));
    for (int i = 1; i < k; ++i) {
      FlatSum term = e[k - i] * p[i];
      acc = acc + term.scaled(Rational((i - 1) % 2 == 0 ? 1 : -1));
    }
    e[k] = acc.scaled(Rational(1, k));
  }
  return std::vector<FlatSum>(e.begin() + 1, e.end());
}

}  // namespace pcz
