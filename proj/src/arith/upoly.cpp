#include <functional>

#include "pcz/errors.hpp"
#include "pcz/poly.hpp"

namespace pcz {

QPoly qpoly_divrem(const QPoly& a, const QPoly& b, QPoly* rem) {
  if (b.is_zero()) fail(ErrorCode::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  int db = b.degree();
  std::vector<Rational> q(std::max(0, a.degree() - db + 1), Rational(0));
  Rational lb = b.lead();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i].is_zero()) continue;
    Rational f = r[i] / lb;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b[j];
  }
  if (rem) {
    r.resize(std::max(0, db));
    *rem = QPoly(r);
  }
  return QPoly(q);
}

QPoly qpoly_monic(const QPoly& a) {
  if (a.is_zero()) return a;
  return a.scaled(a.lead().inv());
}

QPoly qpoly_gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r;
    qpoly_divrem(x, y, &r);
    x = y;
    y = qpoly_monic(r);
  }
  return qpoly_monic(x);
}

std::vector<std::pair<QPoly, int>> qpoly_squarefree(const QPoly& a) {
  std::vector<std::pair<QPoly, int>> out;
  if (a.degree() < 1) return out;
  QPoly f = qpoly_monic(a);
  QPoly fp = f.derivative();
  QPoly g = qpoly_gcd(f, fp);
  QPoly b = qpoly_divrem(f, g, nullptr);
  QPoly c = qpoly_divrem(fp, g, nullptr);
  QPoly d = c - b.derivative();
  int k = 1;
  while (b.degree() >= 1) {
    QPoly h = qpoly_gcd(b, d);
    if (h.degree() >= 1) out.emplace_back(h, k);
    b = qpoly_divrem(b, h, nullptr);
    c = qpoly_divrem(d, h, nullptr);
    d = c - b.derivative();
    ++k;
  }
  return out;
}

namespace {

std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> s{p, p.derivative()};
  while (!s.back().is_zero() && s.back().degree() > 0) {
    QPoly r;
    qpoly_divrem(s[s.size() - 2], s.back(), &r);
    if (r.is_zero()) break;
    s.push_back(r.scaled(Rational(-1)));
  }
  return s;
}

int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int var_at(const std::vector<QPoly>& s, const Rational* x, int inf_sign) {
  std::vector<int> sg;
  for (auto& p : s) {
    if (p.is_zero()) continue;
    if (x) {
      sg.push_back(p.eval(*x).sign());
    } else {
      int ls = p.lead().sign();
      sg.push_back((inf_sign < 0 && p.degree() % 2 == 1) ? -ls : ls);
    }
  }
  return variations(sg);
}

QPoly squarefree_part(const QPoly& a) {
  QPoly g = qpoly_gcd(a, a.derivative());
  return qpoly_divrem(a, g, nullptr);
}

Rational cauchy_bound(const QPoly& p) {
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) m = max(m, (p[i] / p.lead()).abs());
  return m + Rational(1);
}

}  // namespace

int qpoly_count_real_roots(const QPoly& a, const Rational* lo, const Rational* hi) {
  if (a.degree() < 1) return 0;
  QPoly p = squarefree_part(a);
  auto s = sturm_chain(p);
  // V(lo) - V(hi) counts roots in (lo, hi].
  int n = var_at(s, lo, -1) - var_at(s, hi, +1);
  if (hi && p.eval(*hi).is_zero()) --n;
  return n;
}

std::vector<Rational> qpoly_rational_roots(const QPoly& a) {
  std::vector<Rational> out;
  if (a.degree() < 1) return out;
  QPoly p = squarefree_part(a);
  if (p[0].is_zero()) {
    out.push_back(Rational(0));
    std::vector<Rational> c(p.coeffs().begin() + 1, p.coeffs().end());
    p = QPoly(c);
  }
  if (p.degree() < 1) return out;
  // Clear denominators to an integer primitive polynomial.
  mpz_class l = 1;
  for (auto& c : p.coeffs()) l = lcm_z(l, c.den());
  std::vector<Rational> ic;
  mpz_class g = 0;
  for (auto& c : p.coeffs()) {
    Rational v = c * Rational(l);
    ic.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.num().get_mpz_t());
  }
  for (auto& c : ic) c = c / Rational(g);
  QPoly ip(ic);
  Rational an = ip.lead().abs();
  auto s = sturm_chain(ip);
  Rational B = cauchy_bound(ip);
  Rational width_goal = Rational(1) / (Rational(2) * an);
  // Bisect (lo, hi] intervals until isolating and narrow.
  std::function<void(const Rational&, const Rational&)> rec = [&](const Rational& lo, const Rational& hi) {
    int n = var_at(s, &lo, 0) - var_at(s, &hi, 0);
    if (n == 0) return;
    if (n == 1 && hi - lo < width_goal) {
      Rational mid = (lo + hi) / Rational(2);
      Rational t = mid * an;
      mpz_class cands[2] = {t.floor(), t.ceil()};
      for (auto& m : cands) {
        Rational r(m, an.num());
        if (lo < r && r <= hi && ip.eval(r).is_zero()) {
          out.push_back(r);
          return;
        }
      }
      return;
    }
    Rational mid = (lo + hi) / Rational(2);
    rec(lo, mid);
    rec(mid, hi);
  };
  rec(-B, B);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int qpoly_root_multiplicity(const QPoly& a, const Rational& r) {
  int m = 0;
  QPoly p = a;
  QPoly lin(std::vector<Rational>{-r, Rational(1)});
  while (!p.is_zero() && p.eval(r).is_zero()) {
    p = qpoly_divrem(p, lin, nullptr);
    ++m;
  }
  return m;
}

}  // namespace pcz
