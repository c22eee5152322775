#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pcz/coeff.hpp"
#include "pcz/rational.hpp"

namespace pcz {

inline bool structural_zero(const Rational& q) { return q.is_zero(); }
inline bool structural_zero(const Coeff& c) { return c.is_exact() && c.exact().is_zero(); }

using Exp2 = std::pair<int, int>;  // (power of x, power of y)

// Sparse bivariate polynomial sum c_{jk} x^j y^k.
template <class K>
class BiPoly {
 public:
  using Map = std::map<Exp2, K>;

  BiPoly() = default;
  explicit BiPoly(const K& c) { add_term(0, 0, c); }

  static BiPoly monomial(int j, int k, const K& c = K(1)) {
    BiPoly p;
    p.add_term(j, k, c);
    return p;
  }
  static BiPoly x() { return monomial(1, 0); }
  static BiPoly y() { return monomial(0, 1); }

  void add_term(int j, int k, const K& c) {
    if (structural_zero(c)) return;
    auto it = t_.find({j, k});
    if (it == t_.end()) {
      t_.emplace(Exp2{j, k}, c);
      return;
    }
    it->second = it->second + c;
    if (structural_zero(it->second)) t_.erase(it);
  }
  void set_term(int j, int k, const K& c) {
    t_.erase({j, k});
    add_term(j, k, c);
  }
  K coeff(int j, int k) const {
    auto it = t_.find({j, k});
    return it == t_.end() ? K(0) : it->second;
  }

  const Map& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  int deg_x() const {
    int d = -1;
    for (auto& [e, c] : t_) d = std::max(d, e.first);
    return d;
  }
  int deg_y() const {
    int d = -1;
    for (auto& [e, c] : t_) d = std::max(d, e.second);
    return d;
  }
  int total_degree() const {
    int d = -1;
    for (auto& [e, c] : t_) d = std::max(d, e.first + e.second);
    return d;
  }
  int ord_x() const {
    int d = 1 << 30;
    for (auto& [e, c] : t_) d = std::min(d, e.first);
    return t_.empty() ? 0 : d;
  }
  int ord_y() const {
    int d = 1 << 30;
    for (auto& [e, c] : t_) d = std::min(d, e.second);
    return t_.empty() ? 0 : d;
  }

  BiPoly operator+(const BiPoly& o) const {
    BiPoly r = *this;
    for (auto& [e, c] : o.t_) r.add_term(e.first, e.second, c);
    return r;
  }
  BiPoly operator-(const BiPoly& o) const {
    BiPoly r = *this;
    for (auto& [e, c] : o.t_) r.add_term(e.first, e.second, -c);
    return r;
  }
  BiPoly operator-() const {
    BiPoly r;
    for (auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
  }
  BiPoly operator*(const BiPoly& o) const {
    BiPoly r;
    for (auto& [e1, c1] : t_)
      for (auto& [e2, c2] : o.t_) r.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
    return r;
  }
  BiPoly scaled(const K& s) const {
    BiPoly r;
    for (auto& [e, c] : t_) r.add_term(e.first, e.second, c * s);
    return r;
  }
  BiPoly pow(int n) const {
    BiPoly r(K(1)), b = *this;
    while (n > 0) {
      if (n & 1) r = r * b;
      n >>= 1;
      if (n) b = b * b;
    }
    return r;
  }
  BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

  BiPoly dx() const {
    BiPoly r;
    for (auto& [e, c] : t_)
      if (e.first > 0) r.add_term(e.first - 1, e.second, c * K(e.first));
    return r;
  }
  BiPoly dy() const {
    BiPoly r;
    for (auto& [e, c] : t_)
      if (e.second > 0) r.add_term(e.first, e.second - 1, c * K(e.second));
    return r;
  }
  BiPoly swapped() const {
    BiPoly r;
    for (auto& [e, c] : t_) r.add_term(e.second, e.first, c);
    return r;
  }
  // Divide by x^a y^b; terms below are dropped (caller checks divisibility).
  BiPoly shifted_down(int a, int b) const {
    BiPoly r;
    for (auto& [e, c] : t_)
      if (e.first >= a && e.second >= b) r.add_term(e.first - a, e.second - b, c);
    return r;
  }
  BiPoly shifted_up(int a, int b) const {
    BiPoly r;
    for (auto& [e, c] : t_) r.t_.emplace(Exp2{e.first + a, e.second + b}, c);
    return r;
  }
  // Keep terms with x-degree < nx.
  BiPoly truncated_x(int nx) const {
    BiPoly r;
    for (auto& [e, c] : t_)
      if (e.first < nx) r.t_.emplace(e, c);
    return r;
  }

  // f(sx, sy) by Horner-free power tables.
  BiPoly compose(const BiPoly& sx, const BiPoly& sy) const {
    std::vector<BiPoly> px{BiPoly(K(1))}, py{BiPoly(K(1))};
    int dx_ = std::max(deg_x(), 0), dy_ = std::max(deg_y(), 0);
    for (int i = 1; i <= dx_; ++i) px.push_back(px.back() * sx);
    for (int i = 1; i <= dy_; ++i) py.push_back(py.back() * sy);
    BiPoly r;
    for (auto& [e, c] : t_) r += (px[e.first] * py[e.second]).scaled(c);
    return r;
  }

  template <class V>
  V eval(const V& xv, const V& yv) const {
    V r = V(0);
    int dx_ = std::max(deg_x(), 0), dy_ = std::max(deg_y(), 0);
    std::vector<V> px{V(1)}, py{V(1)};
    for (int i = 1; i <= dx_; ++i) px.push_back(px.back() * xv);
    for (int i = 1; i <= dy_; ++i) py.push_back(py.back() * yv);
    for (auto& [e, c] : t_) r = r + px[e.first] * py[e.second] * V(c);
    return r;
  }

  template <class F>
  auto mapped(F f) const -> BiPoly<decltype(f(std::declval<K>()))> {
    BiPoly<decltype(f(std::declval<K>()))> r;
    for (auto& [e, c] : t_) r.add_term(e.first, e.second, f(c));
    return r;
  }

  // Coefficient of y^k as a list indexed by the power of x.
  std::vector<K> y_coeff(int k) const {
    std::vector<K> r(std::max(deg_x(), -1) + 1, K(0));
    for (auto& [e, c] : t_)
      if (e.second == k) r[e.first] = c;
    return r;
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : t_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.str() << ")";
      if (e.first) os << "*x^" << e.first;
      if (e.second) os << "*y^" << e.second;
    }
    return os.str();
  }

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    auto i = a.t_.begin();
    auto j = b.t_.begin();
    for (; i != a.t_.end(); ++i, ++j)
      if (i->first != j->first || !(i->second == j->second)) return false;
    return true;
  }

 private:
  Map t_;
};

using BivariatePolynomial = BiPoly<Rational>;
using CPoly = BiPoly<Coeff>;

inline bool operator==(const Coeff& a, const Coeff& b) {
  return a.is_exact() && b.is_exact() && a.exact() == b.exact();
}

inline CPoly to_cpoly(const BivariatePolynomial& p) {
  return p.mapped([](const Rational& q) { return Coeff(q); });
}

// Dense univariate polynomial, coefficient i multiplies z^i.
template <class K>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<K> c) : c_(std::move(c)) { trim(); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<K>& coeffs() const { return c_; }
  K operator[](int i) const { return i >= 0 && i <= degree() ? c_[i] : K(0); }
  K lead() const { return c_.back(); }

  UPoly operator+(const UPoly& o) const {
    std::vector<K> r(std::max(c_.size(), o.c_.size()), K(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return UPoly(r);
  }
  UPoly operator-(const UPoly& o) const {
    std::vector<K> r(std::max(c_.size(), o.c_.size()), K(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] - o.c_[i];
    return UPoly(r);
  }
  UPoly operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<K> r(c_.size() + o.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return UPoly(r);
  }
  UPoly scaled(const K& s) const {
    std::vector<K> r = c_;
    for (auto& v : r) v = v * s;
    return UPoly(r);
  }
  UPoly derivative() const {
    std::vector<K> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * K(static_cast<long>(i)));
    return UPoly(r);
  }
  template <class V>
  V eval(const V& z) const {
    V r = V(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * z + V(c_[i]);
    return r;
  }

  std::string str() const {
    std::ostringstream os;
    for (int i = degree(); i >= 0; --i) os << "(" << c_[i].str() << ")z^" << i << (i ? " + " : "");
    return c_.empty() ? "0" : os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && structural_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

using QPoly = UPoly<Rational>;

// Exact algorithms over Q.
QPoly qpoly_divrem(const QPoly& a, const QPoly& b, QPoly* rem);
QPoly qpoly_gcd(const QPoly& a, const QPoly& b);
QPoly qpoly_monic(const QPoly& a);
// Yun: a = c * prod f_k^k; returns pairs (f_k, k) with f_k monic squarefree nonconstant.
std::vector<std::pair<QPoly, int>> qpoly_squarefree(const QPoly& a);
// Number of distinct real roots in the open interval (lo, hi); bounds may be
// omitted (nullptr) for infinity.
int qpoly_count_real_roots(const QPoly& a, const Rational* lo, const Rational* hi);
// Distinct rational roots.
std::vector<Rational> qpoly_rational_roots(const QPoly& a);
// Multiplicity of z = r as a root.
int qpoly_root_multiplicity(const QPoly& a, const Rational& r);

}  // namespace pcz
