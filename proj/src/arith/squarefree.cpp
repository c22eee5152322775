#include "pcz/squarefree.hpp"

#include "pcz/errors.hpp"

namespace pcz {

namespace {

void trim(YPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int ydeg(const YPoly& p) { return static_cast<int>(p.size()) - 1; }

YPoly yderiv(const YPoly& p) {
  YPoly r;
  for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i].scaled(Rational(static_cast<long>(i))));
  trim(r);
  return r;
}

YPoly ysub(const YPoly& a, const YPoly& b) {
  YPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
  trim(r);
  return r;
}

// Pseudo-remainder of a by b.
YPoly prem(const YPoly& a, const YPoly& b) {
  YPoly r = a;
  int db = ydeg(b);
  const QPoly& lb = b.back();
  while (ydeg(r) >= db) {
    int dr = ydeg(r);
    QPoly lr = r.back();
    for (auto& c : r) c = c * lb;
    for (int j = 0; j <= db; ++j) r[dr - db + j] = r[dr - db + j] - lr * b[j];
    trim(r);
  }
  return r;
}

// Scale a primitive polynomial so its leading coefficient is monic in x.
YPoly normalized(YPoly p) {
  trim(p);
  if (p.empty()) return p;
  p = ypoly_primitive(p);
  Rational s = p.back().lead().inv();
  for (auto& c : p) c = c.scaled(s);
  return p;
}

}  // namespace

YPoly to_ypoly(const BivariatePolynomial& f) {
  int dy = f.deg_y();
  YPoly r(std::max(dy + 1, 0));
  std::vector<std::vector<Rational>> raw(r.size());
  for (auto& [e, c] : f.terms()) {
    auto& v = raw[e.second];
    if (static_cast<int>(v.size()) <= e.first) v.resize(e.first + 1, Rational(0));
    v[e.first] = c;
  }
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = QPoly(raw[i]);
  trim(r);
  return r;
}

BivariatePolynomial from_ypoly(const YPoly& p) {
  BivariatePolynomial f;
  for (std::size_t k = 0; k < p.size(); ++k)
    for (int j = 0; j <= p[k].degree(); ++j) f.add_term(j, static_cast<int>(k), p[k][j]);
  return f;
}

QPoly ypoly_content(const YPoly& p) {
  QPoly g;
  for (auto& c : p) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? qpoly_monic(c) : qpoly_gcd(g, c);
  }
  return g;
}

YPoly ypoly_primitive(const YPoly& p) {
  QPoly g = ypoly_content(p);
  if (g.is_zero()) return p;
  YPoly r;
  for (auto& c : p) r.push_back(qpoly_divrem(c, g, nullptr));
  trim(r);
  return r;
}

YPoly ypoly_gcd(const YPoly& a0, const YPoly& b0) {
  YPoly a = normalized(a0), b = normalized(b0);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (ydeg(a) < ydeg(b)) std::swap(a, b);
  while (!b.empty()) {
    if (ydeg(b) == 0) return YPoly{QPoly(std::vector<Rational>{Rational(1)})};
    YPoly r = normalized(prem(a, b));
    a = b;
    b = r;
  }
  return normalized(a);
}

YPoly ypoly_div_exact(const YPoly& a, const YPoly& b) {
  YPoly r = a;
  trim(r);
  int db = ydeg(b);
  if (db < 0) fail(ErrorCode::InvalidArgument, "division by zero polynomial");
  YPoly q(std::max(0, ydeg(r) - db + 1));
  while (ydeg(r) >= db) {
    int dr = ydeg(r);
    QPoly rem;
    QPoly f = qpoly_divrem(r.back(), b.back(), &rem);
    if (!rem.is_zero()) fail(ErrorCode::AssertionFailed, "inexact division in Q[x][y]");
    q[dr - db] = f;
    for (int j = 0; j <= db; ++j) r[dr - db + j] = r[dr - db + j] - f * b[j];
    trim(r);
  }
  if (!r.empty()) fail(ErrorCode::AssertionFailed, "nonzero remainder in Q[x][y]");
  trim(q);
  return q;
}

std::vector<SqfFactor> bivariate_squarefree(const BivariatePolynomial& f, QPoly* content) {
  std::vector<SqfFactor> out;
  YPoly p = to_ypoly(f);
  if (p.empty()) fail(ErrorCode::FlatInput, "zero polynomial");
  QPoly cont = ypoly_content(p);
  if (content) *content = cont;
  if (ydeg(p) < 1) return out;
  p = normalized(p);
  YPoly dp = yderiv(p);
  YPoly g = ypoly_gcd(p, dp);
  YPoly c = ypoly_div_exact(p, g);
  YPoly d = ysub(ypoly_div_exact(dp, g), yderiv(c));
  int k = 1;
  while (ydeg(c) >= 1) {
    YPoly h = d.empty() ? c : ypoly_gcd(c, d);
    if (ydeg(h) >= 1) out.push_back({from_ypoly(h), k});
    c = ypoly_div_exact(c, h);
    d = d.empty() ? d : ysub(ypoly_div_exact(d, h), yderiv(c));
    ++k;
  }
  return out;
}

}  // namespace pcz
