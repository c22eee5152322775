#include "pcz/roots.hpp"

#include <cmath>
#include <complex>
#include <numeric>

#include "pcz/errors.hpp"

namespace pcz {

namespace {

using cd = std::complex<double>;

BallComplex eval_ball(const std::vector<BallComplex>& c, const BallComplex& z) {
  BallComplex r = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) r = r * z + c[i];
  return r;
}

std::vector<BallComplex> deriv(const std::vector<BallComplex>& c) {
  std::vector<BallComplex> d;
  for (std::size_t i = 1; i < c.size(); ++i)
    d.push_back(c[i].scaled(Rational(static_cast<long>(i))));
  return d;
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int a) { return p[a] == a ? a : p[a] = find(p[a]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

// Radii of the inclusion discs D(z_i, n |W_i|); a negative value means the
// Weierstrass correction could not be bounded.
std::vector<Mag> inclusion_radii(const std::vector<BallComplex>& c, const std::vector<BallComplex>& z,
                                 std::vector<bool>& bad) {
  int n = static_cast<int>(z.size());
  std::vector<Mag> r(n);
  bad.assign(n, false);
  for (int i = 0; i < n; ++i) {
    try {
      BallComplex den = c.back();
      for (int j = 0; j < n; ++j)
        if (j != i) den = den * (z[i] - z[j]);
      BallComplex w = eval_ball(c, z[i]) * den.inv();
      r[i] = w.abs_upper() * Mag::from_double(n);
    } catch (const PrecisionLow&) {
      bad[i] = true;
    }
  }
  return r;
}

bool discs_meet(const BallComplex& a, const Mag& ra, const BallComplex& b, const Mag& rb) {
  BallComplex x = a.mid(), y = b.mid();
  x.set_radius(ra);
  y.set_radius(rb);
  return x.overlaps(y);
}

}  // namespace

std::vector<BallComplex> aberth(const std::vector<BallComplex>& coeffs, mpfr_prec_t prec) {
  int n = static_cast<int>(coeffs.size()) - 1;
  std::vector<BallComplex> z;
  if (n < 1) return z;
  std::vector<BallComplex> c;
  for (auto& a : coeffs) c.push_back(a.mid().with_prec(prec));
  std::vector<BallComplex> dc = deriv(c);

  // Double-precision stage for a cheap start.
  std::vector<cd> cdv;
  for (auto& a : c) cdv.emplace_back(a.re_d(), a.im_d());
  double R = 0;
  for (int i = 0; i < n; ++i) {
    double q = std::abs(cdv[i] / cdv[n]);
    if (q > 0) R = std::max(R, std::pow(q, 1.0 / (n - i)));
  }
  if (!(R > 0) || !std::isfinite(R)) R = 1;
  std::vector<cd> zd(n);
  for (int k = 0; k < n; ++k) zd[k] = std::polar(R, 2 * M_PI * k / n + 0.7);
  auto pd = [&](cd x) {
    cd r = cdv[n];
    for (int i = n - 1; i >= 0; --i) r = r * x + cdv[i];
    return r;
  };
  auto pdd = [&](cd x) {
    cd r = cdv[n] * double(n);
    for (int i = n - 1; i >= 1; --i) r = r * x + cdv[i] * double(i);
    return r;
  };
  for (int it = 0; it < 500; ++it) {
    double mx = 0;
    for (int i = 0; i < n; ++i) {
      cd p = pd(zd[i]), dp = pdd(zd[i]);
      if (p == cd(0)) continue;
      cd ratio = p / dp;
      cd s = 0;
      for (int j = 0; j < n; ++j)
        if (j != i && zd[i] != zd[j]) s += 1.0 / (zd[i] - zd[j]);
      cd w = ratio / (1.0 - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      zd[i] -= w;
      mx = std::max(mx, std::abs(w) / std::max(1.0, std::abs(zd[i])));
    }
    if (mx < 1e-14) break;
  }
  for (int k = 0; k < n; ++k) {
    if (!std::isfinite(zd[k].real()) || !std::isfinite(zd[k].imag())) zd[k] = std::polar(R, 2 * M_PI * k / n + 0.7);
    z.push_back(BallComplex::from_double(zd[k].real(), zd[k].imag(), prec));
  }

  long target = -static_cast<long>(prec) + 8;
  for (int it = 0; it < 400; ++it) {
    bool done = true;
    for (int i = 0; i < n; ++i) {
      BallComplex p = eval_ball(c, z[i]).mid();
      if (p.abs_upper().is_zero()) continue;
      BallComplex dp = eval_ball(dc, z[i]).mid();
      BallComplex s(prec);
      bool ok = true;
      try {
        for (int j = 0; j < n; ++j)
          if (j != i) s = s + (z[i] - z[j]).mid().inv().mid();
        BallComplex ratio = (p * dp.mid().inv()).mid();
        BallComplex one = BallComplex::from_rational(Rational(1), prec);
        BallComplex w = (ratio * (one - ratio * s).mid().inv()).mid();
        z[i] = (z[i] - w).mid();
        double scale = std::max(0.0, std::log2(std::max(1.0, z[i].mid_abs())));
        if (w.abs_upper().log2() > static_cast<double>(target) + scale) done = false;
      } catch (const PrecisionLow&) {
        ok = false;
      }
      if (!ok) done = false;
    }
    if (done) break;
  }
  return z;
}

std::vector<CRoot> roots_ball(const UPoly<Coeff>& p, bool coeffs_real) {
  std::vector<CRoot> out;
  int n = p.degree();
  if (n < 1) return out;
  mpfr_prec_t prec = default_precision();
  std::vector<BallComplex> c;
  for (auto& a : p.coeffs()) c.push_back(a.to_ball(prec));
  if (c.back().contains_zero()) throw PrecisionLow("leading coefficient not separated from zero");
  std::vector<BallComplex> z = aberth(c, prec);
  std::vector<bool> bad;
  std::vector<Mag> r = inclusion_radii(c, z, bad);
  UnionFind uf(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (bad[i] || bad[j] || discs_meet(z[i], r[i], z[j], r[j])) {
        // Unbounded discs only group with approximations that are close.
        if ((bad[i] || bad[j]) && (z[i] - z[j]).mid_abs() > std::ldexp(1.0, -static_cast<int>(prec) / 8) * std::max(1.0, z[i].mid_abs()))
          continue;
        uf.unite(i, j);
      }
  std::vector<std::vector<int>> comps(n);
  for (int i = 0; i < n; ++i) comps[uf.find(i)].push_back(i);
  double tol = std::ldexp(1.0, -static_cast<int>(prec) / 4);
  for (auto& comp : comps) {
    if (comp.empty()) continue;
    int k = static_cast<int>(comp.size());
    CRoot root;
    root.mult = k;
    if (k == 1 && !bad[comp[0]]) {
      BallComplex b = z[comp[0]].mid();
      b.set_radius(r[comp[0]]);
      root.z = Coeff(b);
    } else {
      // Accept a tight cluster as one root of multiplicity k.
      double cx = 0, cy = 0;
      for (int i : comp) {
        cx += z[i].re_d();
        cy += z[i].im_d();
      }
      cx /= k;
      cy /= k;
      double diam = 0;
      for (int i : comp)
        for (int j : comp) diam = std::max(diam, (z[i] - z[j]).mid_abs());
      if (diam >= tol * std::max(1.0, std::hypot(cx, cy))) throw PrecisionLow("unresolved root cluster");
      std::vector<BallComplex> d = c;
      for (int t = 0; t < k - 1; ++t) d = deriv(d);
      std::vector<BallComplex> dd = deriv(d);
      // Newton on the (k-1)-th derivative, where the root is simple.
      BallComplex zz = z[comp[0]].mid();
      for (int i : comp)
        if (i != comp[0]) zz = zz + z[i].mid();
      zz = zz.scaled(Rational(1, k)).mid();
      for (int it = 0; it < 60; ++it) {
        BallComplex step = (eval_ball(d, zz).mid() * eval_ball(dd, zz).mid().inv()).mid();
        zz = (zz - step).mid();
        if (step.abs_upper().log2() < -static_cast<double>(prec) + 8) break;
      }
      BallComplex num = eval_ball(d, zz);
      BallComplex den = eval_ball(dd, zz);
      double lo = den.abs_lower();
      if (!(lo > 0)) throw PrecisionLow("cluster derivative not separated from zero");
      Mag rad = num.abs_upper() * Mag::from_double(static_cast<double>(n - k + 1) / lo * (1 + 1e-12));
      // The enclosure must also cover the cluster itself.
      for (int i : comp) {
        BallComplex dz = z[i] - zz;
        Mag m = dz.abs_upper();
        if (rad < m) rad = m;
      }
      zz.set_radius(rad);
      root.z = Coeff(zz);
    }
    out.push_back(root);
  }
  if (coeffs_real) {
    // A root whose mirror disc meets no other disc is fixed by conjugation.
    for (std::size_t i = 0; i < out.size(); ++i) {
      const BallComplex& b = out[i].z.ball();
      if (!b.meets_real_axis()) continue;
      BallComplex m = b.conj();
      bool alone = true;
      for (std::size_t j = 0; j < out.size() && alone; ++j)
        if (j != i && m.overlaps(out[j].z.ball())) alone = false;
      if (alone) {
        BallComplex rb = b;
        rb.project_real();
        out[i].z = Coeff(rb);
        out[i].real = true;
      }
    }
  }
  return out;
}

std::vector<CRoot> roots_exact(const QPoly& p) {
  std::vector<CRoot> out;
  if (p.degree() < 1) return out;
  for (auto& [h, k] : qpoly_squarefree(p)) {
    QPoly rest = h;
    for (const Rational& q : qpoly_rational_roots(h)) {
      CRoot r;
      r.z = Coeff(q);
      r.mult = k;
      r.real = true;
      out.push_back(r);
      QPoly lin(std::vector<Rational>{-q, Rational(1)});
      rest = qpoly_divrem(rest, lin, nullptr);
    }
    if (rest.degree() < 1) continue;
    std::vector<Coeff> cc;
    for (auto& q : rest.coeffs()) cc.push_back(Coeff(q));
    auto rs = roots_ball(UPoly<Coeff>(cc), true);
    for (auto& r : rs) {
      if (r.mult != 1) throw PrecisionLow("square-free factor with unseparated roots");
      r.mult = k;
      out.push_back(r);
    }
  }
  return out;
}

namespace {
bool exact_root(const mpz_class& a, int k, mpz_class& out) {
  if (a < 0) {
    if (k % 2 == 0) return false;
    mpz_class pos = -a;
    if (!exact_root(pos, k, out)) return false;
    out = -out;
    return true;
  }
  return mpz_root(out.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(k)) != 0;
}
}  // namespace

Coeff kth_root(const Coeff& w, int k) {
  if (k == 1) return w;
  if (w.is_exact()) {
    mpz_class a, b;
    if (exact_root(w.exact().num(), k, a) && exact_root(w.exact().den(), k, b)) return Coeff(Rational(a, b));
  }
  mpfr_prec_t prec = std::max(w.prec(), default_precision());
  BallComplex wb = w.to_ball(prec);
  mpfr_prec_t wp = prec + 32;
  mpfr_t mod, ang, s, cth;
  mpfr_inits2(wp, mod, ang, s, cth, static_cast<mpfr_ptr>(nullptr));
  mpfr_hypot(mod, wb.re(), wb.im(), MPFR_RNDN);
  mpfr_rootn_ui(mod, mod, static_cast<unsigned long>(k), MPFR_RNDN);
  BallComplex z(prec);
  bool real_neg = mpfr_zero_p(wb.im()) && mpfr_sgn(wb.re()) < 0 && k % 2 == 1;
  bool real_pos = mpfr_zero_p(wb.im()) && mpfr_sgn(wb.re()) > 0;
  if (real_pos || real_neg) {
    if (real_neg) mpfr_neg(mod, mod, MPFR_RNDN);
    z = BallComplex::from_mpfr(mod, nullptr, prec);
  } else {
    mpfr_atan2(ang, wb.im(), wb.re(), MPFR_RNDN);
    mpfr_div_ui(ang, ang, static_cast<unsigned long>(k), MPFR_RNDN);
    mpfr_sin_cos(s, cth, ang, MPFR_RNDN);
    mpfr_mul(s, s, mod, MPFR_RNDN);
    mpfr_mul(cth, cth, mod, MPFR_RNDN);
    z = BallComplex::from_mpfr(cth, s, prec);
  }
  z = z.mid();
  mpfr_clears(mod, ang, s, cth, static_cast<mpfr_ptr>(nullptr));
  // Some root of z^k - w lies within k |h(z)| / |h'(z)|.
  BallComplex h = z.pow(k) - wb;
  BallComplex hp = z.pow(k - 1).scaled(Rational(k));
  double lo = hp.abs_lower();
  if (!(lo > 0)) throw PrecisionLow("k-th root of a ball near zero");
  Mag rad = h.abs_upper() * Mag::from_double(static_cast<double>(k) / lo * (1 + 1e-12));
  z.set_radius(rad);
  return Coeff(z);
}

}  // namespace pcz
