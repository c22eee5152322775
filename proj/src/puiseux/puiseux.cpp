#include <cmath>
#include <numeric>

#include "internal.hpp"
#include "pcz/errors.hpp"
#include "pcz/newton.hpp"
#include "pcz/roots.hpp"
#include "pcz/squarefree.hpp"

namespace pcz {

const char* realness_name(Realness r) {
  switch (r) {
    case Realness::Real: return "REAL";
    case Realness::NonReal: return "NONREAL";
    case Realness::Unresolved: return "UNRESOLVED";
  }
  return "?";
}

Realness certify_real(const Coeff& c) {
  if (c.is_exact()) return Realness::Real;
  if (c.ball().imag_excludes_zero()) return Realness::NonReal;
  return Realness::Unresolved;
}

const std::vector<mpfr_prec_t>& precision_schedule() {
  thread_local std::vector<mpfr_prec_t> s;
  s.clear();
  for (mpfr_prec_t p = std::max<mpfr_prec_t>(default_precision(), 64); p <= 2048; p *= 2) s.push_back(p);
  if (s.empty()) s.push_back(2048);
  return s;
}

Series PuiseuxBranch::in_t(int N, int len) const {
  if (N % E != 0) fail(ErrorCode::InvalidArgument, "ramification does not divide N");
  Series r = own.ramified(N / E);
  if (r.len() < len) fail(ErrorCode::TruncationUnderflow, "branch series shorter than requested order");
  return r.truncated(len);
}

namespace detail {

namespace {

CPoly drop_zeros(const CPoly& G) {
  CPoly r;
  for (auto& [e, c] : G.terms())
    if (!c.is_zero()) r.add_term(e.first, e.second, c);
  return r;
}

// G(s^l1, s^l2 (c + y)) / s^level
CPoly substitute_level(const CPoly& G, int l1, int l2, const Coeff& c, long level) {
  CPoly sx = CPoly::monomial(l1, 0, Coeff(1));
  CPoly sy = CPoly::monomial(l2, 0, c) + CPoly::monomial(l2, 1, Coeff(1));
  CPoly H = G.compose(sx, sy);
  CPoly out;
  for (auto& [e, v] : H.terms()) {
    if (e.first < level) {
      if (!v.is_zero()) throw PrecisionLow("substitution left a term below the edge level");
      continue;
    }
    out.add_term(static_cast<int>(e.first - level), e.second, v);
  }
  return out;
}

Series solve_simple(const CPoly& G1, int P1) {
  CPoly Gt = G1.truncated_x(P1);
  CPoly Gy = Gt.dy();
  Series Y(1);
  for (int k = 2;; k *= 2) {
    int len = std::min(k, P1);
    Series Yp = Y.padded(len);
    Series num = eval_y(Gt, Yp, len);
    Series den = eval_y(Gy, Yp, len);
    Y = Yp - num * den.inv();
    if (len >= P1) break;
  }
  Y.at(0) = Coeff();
  return Y;
}

bool coeff_is_real(const Coeff& c) {
  if (c.is_exact()) return true;
  return mpfr_zero_p(c.ball().im());
}

void rec(const CPoly& G0, int P, bool real_chain, std::vector<RawBranch>& out, int depth) {
  if (depth > 48) throw PrecisionLow("Newton-Puiseux recursion too deep");
  CPoly G = drop_zeros(G0);
  BivariatePolynomial supp;
  for (auto& [e, c] : G.terms()) supp.add_term(e.first, e.second, Rational(1));
  if (supp.is_zero()) throw PrecisionLow("local equation vanished");
  NewtonPolygon np = newton_polygon(supp);
  if (np.vertices.front().x != 0) throw PrecisionLow("local equation divisible by x");
  int n0 = np.vertices.front().y;
  int ky = np.vertices.back().y;
  if (ky > 1) throw PrecisionLow("repeated zero root in a square-free factor");
  int found = 0;
  if (ky == 1) {
    RawBranch z;
    z.y = Series(P);
    z.E = 1;
    z.real_chain = real_chain;
    out.push_back(z);
    found += 1;
  }
  for (const Edge& e : np.edges) {
    int deg = (e.a.y - e.b.y) / e.l1;
    std::vector<Coeff> R(deg + 1);
    bool exact = true;
    for (auto& [ex, c] : G.terms()) {
      if (static_cast<long>(e.l1) * ex.first + static_cast<long>(e.l2) * ex.second != e.level()) continue;
      R[(ex.second - e.b.y) / e.l1] += c;
      exact = exact && c.is_exact();
    }
    std::vector<CRoot> roots;
    if (exact) {
      std::vector<Rational> q;
      for (auto& c : R) q.push_back(c.exact());
      roots = roots_exact(QPoly(q));
    } else {
      roots = roots_ball(UPoly<Coeff>(R), real_chain);
    }
    for (auto& rt : roots) {
      Coeff c = kth_root(rt.z, e.l1);
      bool w_real = rt.z.is_exact() || rt.real;
      bool creal = real_chain && w_real && coeff_is_real(c);
      int P1 = std::max(1, P * e.l1 - e.l2);
      CPoly G1 = substitute_level(G, e.l1, e.l2, c, e.level());
      if (rt.mult == 1) {
        Series Y = solve_simple(G1, P1);
        Y.at(0) = c;
        RawBranch b;
        b.y = Y.shift_up(e.l2);
        b.E = e.l1;
        b.real_chain = creal;
        out.push_back(b);
        found += e.l1;
      } else {
        std::vector<RawBranch> sub;
        rec(G1, P1, creal, sub, depth + 1);
        int cnt = 0;
        for (auto& s : sub) cnt += s.E;
        if (cnt != rt.mult) throw PrecisionLow("root count mismatch below a multiple root");
        for (auto& s : sub) {
          Series Y = s.y;
          Y.at(0) = Y[0] + c;
          RawBranch b;
          b.y = Y.shift_up(s.E * e.l2);
          b.E = e.l1 * s.E;
          b.real_chain = s.real_chain;
          out.push_back(b);
          found += b.E;
        }
      }
    }
  }
  if (found != n0) throw PrecisionLow("Newton-Puiseux root count mismatch");
}

bool overlap(const Coeff& a, const Coeff& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  mpfr_prec_t p = std::max(a.prec(), b.prec());
  return a.to_ball(p).overlaps(b.to_ball(p));
}

bool disjoint_somewhere(const Series& a, const Series& b) {
  int n = std::min(a.len(), b.len());
  for (int i = 0; i < n; ++i)
    if (!overlap(a[i], b[i])) return true;
  return false;
}

bool imag_excluded_somewhere(const Series& a) {
  for (int i = 0; i < a.len(); ++i)
    if (!a[i].is_exact() && a[i].ball().imag_excludes_zero()) return true;
  return false;
}

Coeff rou(long k, long n) {
  k %= n;
  if (k < 0) k += n;
  if (k == 0) return Coeff(1);
  if (2 * k == n) return Coeff(-1);
  return Coeff(BallComplex::root_of_unity(k, n));
}

}  // namespace

std::vector<RawBranch> factor_branches(const BivariatePolynomial& g, int P) {
  std::vector<RawBranch> out;
  rec(to_cpoly(g), P, true, out, 0);
  return out;
}

OrbitReality orbit_realness(const std::vector<RawBranch>& fb, std::size_t j) {
  OrbitReality res;
  const RawBranch& b = fb[j];
  if (b.real_chain) {
    res.realness = Realness::Real;
    res.sigma = 1;
    res.param = b.y;
    for (int i = 0; i < res.param.len(); ++i)
      if (!res.param[i].is_exact()) {
        BallComplex z = res.param[i].ball();
        z.project_real();
        res.param.at(i) = Coeff(z);
      }
    return res;
  }
  int E = b.E;
  bool any_candidate = false;
  for (int m = 0; m < 2 * E; ++m) {
    // x = sigma s^E with sigma = rho^E = (-1)^m.
    Series psi = b.y.twisted(rou(m, 2 * E));
    if (imag_excluded_somewhere(psi)) continue;
    any_candidate = true;
    int sigma = m % 2 == 0 ? 1 : -1;
    Series cpsi = psi.conj();
    bool certified = true;
    for (std::size_t k = 0; k < fb.size() && certified; ++k) {
      int Ek = fb[k].E;
      if (E % Ek != 0) continue;
      for (int mm = 0; mm < Ek && certified; ++mm) {
        long num = 2 * mm + (sigma < 0 ? 1 : 0);
        if (k == j && ((num - m) % (2 * E) + 2 * E) % (2 * E) == 0) continue;
        Series other = fb[k].y.twisted(rou(num, 2 * Ek)).ramified(E / Ek);
        if (!disjoint_somewhere(cpsi, other)) certified = false;
      }
    }
    if (certified) {
      res.realness = Realness::Real;
      res.sigma = sigma;
      res.param = psi;
      for (int i = 0; i < res.param.len(); ++i)
        if (!res.param[i].is_exact()) {
          BallComplex z = res.param[i].ball();
          z.project_real();
          res.param.at(i) = Coeff(z);
        }
      return res;
    }
  }
  res.realness = any_candidate ? Realness::Unresolved : Realness::NonReal;
  return res;
}

}  // namespace detail

namespace {

struct FactorInfo {
  BivariatePolynomial g;
  int k;
  bool through_origin;
};

std::vector<FactorInfo> origin_factors(const BivariatePolynomial& reduced) {
  std::vector<FactorInfo> out;
  for (auto& s : bivariate_squarefree(reduced)) out.push_back({s.g, s.k, s.g.coeff(0, 0).is_zero()});
  return out;
}

}  // namespace

Factorization newton_puiseux(const BivariateFunction& f, int T) {
  if (f.poly.is_zero()) fail(ErrorCode::FlatInput, "polynomial part is zero");
  if (T < 1) fail(ErrorCode::InvalidArgument, "truncation order must be positive");
  Factorization fac;
  fac.T = T;
  fac.m0 = f.poly.ord_x();
  BivariatePolynomial red = f.poly.shifted_down(fac.m0, 0);
  int n = 0;
  for (auto& [e, c] : red.terms())
    if (e.first == 0) {
      n = e.second;
      break;
    }
  fac.weierstrass_degree = n;
  fac.unit_constant = Coeff(f.poly.coeff(fac.m0, n));
  auto factors = origin_factors(red);

  bool done = false;
  for (mpfr_prec_t prec : precision_schedule()) {
    PrecisionScope scope(prec);
    try {
      std::vector<std::vector<detail::RawBranch>> raw(factors.size());
      int N = 1;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (!factors[i].through_origin) continue;
        for (auto& b : detail::factor_branches(factors[i].g, 2)) N = std::lcm(N, b.E);
      }
      int P = (T + N - 1) / N + 1;
      fac.branches.clear();
      fac.factors.clear();
      fac.factor_mult.clear();
      bool unresolved = false;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        fac.factors.push_back(factors[i].g);
        fac.factor_mult.push_back(factors[i].k);
        if (!factors[i].through_origin) continue;
        raw[i] = detail::factor_branches(factors[i].g, P);
        for (std::size_t j = 0; j < raw[i].size(); ++j) {
          PuiseuxBranch pb;
          pb.own = raw[i][j].y;
          pb.E = raw[i][j].E;
          pb.multiplicity = factors[i].k;
          pb.factor = static_cast<int>(i);
          pb.real_chain = raw[i][j].real_chain;
          auto re = detail::orbit_realness(raw[i], j);
          pb.realness = re.realness;
          pb.sigma = re.sigma;
          pb.real_param = re.param;
          if (re.realness == Realness::Unresolved) unresolved = true;
          fac.branches.push_back(pb);
        }
      }
      fac.N = N;
      done = true;
      if (!unresolved) break;
    } catch (const PrecisionLow&) {
      continue;
    }
  }
  if (!done) fail(ErrorCode::PrecisionExhausted, "Newton-Puiseux iteration failed at every precision up to 2048 bits");
  return fac;
}

std::vector<RootSeries> all_roots(const Factorization& fac, int len) {
  std::vector<RootSeries> out;
  for (std::size_t j = 0; j < fac.branches.size(); ++j) {
    const PuiseuxBranch& b = fac.branches[j];
    for (int m = 0; m < b.E; ++m) {
      Series s = m == 0 ? b.own : b.own.twisted(Coeff(BallComplex::root_of_unity(m, b.E)));
      Series r = s.ramified(fac.N / b.E);
      if (r.len() < len) fail(ErrorCode::TruncationUnderflow, "branch series shorter than requested order");
      out.push_back({r.truncated(len), b.multiplicity, static_cast<int>(j)});
    }
  }
  return out;
}

bool reconstruction_check(const BivariateFunction& f, const Factorization& fac, int order, double* max_residual) {
  int len = order + 1;
  int N = fac.N;
  int dy = f.poly.deg_y();
  std::vector<Series> F(dy + 1, Series(len));
  for (auto& [e, c] : f.poly.terms()) {
    int idx = N * (e.first - fac.m0);
    if (idx < len) F[e.second].at(idx) += Coeff(c);
  }
  std::vector<Series> W{Series::constant(Coeff(1), len)};
  for (auto& r : all_roots(fac, len)) {
    for (int m = 0; m < r.multiplicity; ++m) {
      std::vector<Series> nw(W.size() + 1, Series(len));
      for (std::size_t k = 0; k < W.size(); ++k) {
        nw[k + 1] = nw[k + 1] + W[k];
        nw[k] = nw[k] - r.y * W[k];
      }
      W = nw;
    }
  }
  int n = static_cast<int>(W.size()) - 1;
  if (n != fac.weierstrass_degree) fail(ErrorCode::AssertionFailed, "root count differs from the Weierstrass degree");
  std::vector<Series> Q(std::max(0, dy - n + 1), Series(len));
  for (int k = dy; k >= n; --k) {
    Series q = F[k];
    Q[k - n] = q;
    for (int i = 0; i <= n; ++i) F[k - n + i] = F[k - n + i] - q * W[i];
  }
  double worst = 0;
  bool ok = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < F[k].len(); ++i) {
      const Coeff& c = F[k][i];
      if (c.is_exact()) {
        if (!c.exact().is_zero()) {
          ok = false;
          worst = std::max(worst, std::fabs(c.exact().to_double()));
        }
      } else {
        worst = std::max(worst, c.ball().abs_upper().to_double());
        if (!c.ball().contains_zero()) ok = false;
      }
    }
  if (Q.empty() || !Q[0][0].certainly_nonzero()) ok = false;
  if (max_residual) *max_residual = worst;
  return ok;
}

std::vector<int> real_branch_indices(const Factorization& fac) {
  std::vector<int> r{0};
  for (std::size_t j = 0; j < fac.branches.size(); ++j)
    if (fac.branches[j].realness == Realness::Real) r.push_back(static_cast<int>(j) + 1);
  return r;
}

}  // namespace pcz
