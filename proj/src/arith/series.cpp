#include "pcz/series.hpp"

#include <sstream>

#include "pcz/errors.hpp"

namespace pcz {

Series Series::constant(const Coeff& c, int len) {
  Series s(len);
  if (len > 0) s.c_[0] = c;
  return s;
}

Series Series::monomial(int k, const Coeff& c, int len) {
  Series s(len);
  if (k < len) s.c_[k] = c;
  return s;
}

Series Series::truncated(int len) const {
  Series s = *this;
  s.c_.resize(static_cast<std::size_t>(std::max(0, std::min(len, this->len()))));
  return s;
}

Series Series::padded(int len) const {
  Series s = *this;
  if (len > this->len()) s.c_.resize(static_cast<std::size_t>(len));
  return s;
}

Series Series::operator+(const Series& o) const {
  int n = std::min(len(), o.len());
  Series r(n);
  for (int i = 0; i < n; ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

Series Series::operator-(const Series& o) const {
  int n = std::min(len(), o.len());
  Series r(n);
  for (int i = 0; i < n; ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

Series Series::operator-() const {
  Series r(len());
  for (int i = 0; i < len(); ++i) r.c_[i] = -c_[i];
  return r;
}

Series Series::operator*(const Series& o) const {
  int n = std::min(len(), o.len());
  Series r(n);
  for (int i = 0; i < n; ++i) {
    if (structural_zero(c_[i])) continue;
    for (int j = 0; i + j < n; ++j) {
      if (structural_zero(o.c_[j])) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  return r;
}

Series Series::scaled(const Coeff& s) const {
  Series r(len());
  for (int i = 0; i < len(); ++i) r.c_[i] = c_[i] * s;
  return r;
}

Series Series::inv() const {
  if (len() == 0) fail(ErrorCode::TruncationUnderflow, "inverse of an empty series");
  if (c_[0].is_zero()) fail(ErrorCode::InvalidArgument, "series inverse needs a unit");
  Coeff b0 = c_[0].inv();
  Series r(len());
  r.c_[0] = b0;
  for (int n = 1; n < len(); ++n) {
    Coeff acc;
    for (int i = 1; i <= n; ++i) {
      if (structural_zero(c_[i])) continue;
      acc += c_[i] * r.c_[n - i];
    }
    r.c_[n] = -(acc * b0);
  }
  return r;
}

int Series::valuation() const {
  for (int i = 0; i < len(); ++i)
    if (!c_[i].is_zero()) return i;
  return len();
}

Series Series::div(const Series& o) const {
  int v = o.valuation();
  if (v >= o.len()) fail(ErrorCode::TruncationUnderflow, "division by a series that vanishes to its truncation order");
  return shift_down(v) * o.shift_down(v).inv();
}

Series Series::shift_down(int k) const {
  if (k > len()) fail(ErrorCode::TruncationUnderflow, "division by t^" + std::to_string(k) + " exceeds truncation order " + std::to_string(len()));
  for (int i = 0; i < k; ++i)
    if (!c_[i].is_zero()) fail(ErrorCode::InvalidArgument, "series not divisible by t^" + std::to_string(k));
  Series r(len() - k);
  for (int i = k; i < len(); ++i) r.c_[i - k] = c_[i];
  return r;
}

Series Series::shift_up(int k) const {
  Series r(len() + k);
  for (int i = 0; i < len(); ++i) r.c_[i + k] = c_[i];
  return r;
}

Series Series::twisted(const Coeff& rho) const {
  Series r(len());
  Coeff p(1);
  for (int i = 0; i < len(); ++i) {
    r.c_[i] = c_[i] * p;
    p = p * rho;
  }
  return r;
}

Series Series::ramified(int k) const {
  Series r(len() * k);
  for (int i = 0; i < len(); ++i) r.c_[i * k] = c_[i];
  return r;
}

Series Series::conj() const {
  Series r(len());
  for (int i = 0; i < len(); ++i) r.c_[i] = c_[i].conj();
  return r;
}

Series Series::derivative() const {
  Series r(std::max(0, len() - 1));
  for (int i = 1; i < len(); ++i) r.c_[i - 1] = c_[i] * Coeff(i);
  return r;
}

Series Series::compose(const Series& g) const {
  int n = std::min(len(), g.len());
  if (n == 0) return Series(0);
  if (!g.c_[0].is_zero()) fail(ErrorCode::InvalidArgument, "compose needs g(0) = 0");
  Series gt = g.truncated(n);
  Series r = Series::constant(c_[n - 1], n);
  for (int i = n - 2; i >= 0; --i) {
    r = r * gt;
    r.c_[0] += c_[i];
  }
  return r;
}

Series Series::reversion() const {
  int n = len();
  if (n < 2 || !c_[0].is_zero() || c_[1].is_zero())
    fail(ErrorCode::InvalidArgument, "reversion needs c0 = 0 and c1 != 0");
  Series t = Series::monomial(1, Coeff(1), n);
  Series h = Series::monomial(1, c_[1].inv(), n);
  Series fp = derivative();
  for (int known = 2; known < 2 * n; known *= 2) {
    // e has valuation >= 2, so the unknown top term of f'(h) never matters.
    Series e = compose(h) - t;
    Series d = fp.compose(h.truncated(n - 1));
    h = h - e * d.inv().padded(n);
    h.c_[0] = Coeff();
  }
  return h.truncated(n);
}

bool Series::all_exact() const {
  for (auto& c : c_)
    if (!c.is_exact()) return false;
  return true;
}

std::string Series::str(int max_terms) const {
  std::ostringstream os;
  int shown = 0;
  for (int i = 0; i < len() && shown < max_terms; ++i) {
    if (structural_zero(c_[i])) continue;
    if (shown++) os << " + ";
    os << c_[i].str() << "*t^" << i;
  }
  if (shown == 0) os << "0";
  os << " + O(t^" << len() << ")";
  return os.str();
}

Series eval_y(const CPoly& G, const Series& Y, int len) {
  int dy = G.deg_y();
  if (dy < 0) return Series(len);
  std::vector<Series> A(dy + 1, Series(len));
  for (auto& [e, c] : G.terms())
    if (e.first < len) A[e.second].at(e.first) += c;
  Series y = Y.truncated(len);
  Series r = A[dy];
  for (int k = dy - 1; k >= 0; --k) r = r * y + A[k];
  return r;
}

}  // namespace pcz
