#include <cmath>
#include <algorithm>
#include <map>

#include "internal.hpp"
#include "pcz/errors.hpp"

namespace pcz {

using detail::centered;

namespace {

using Grid = std::map<Exp2, Coeff>;

void add_to(Grid& g, int i, int j, const Coeff& c) {
  auto it = g.find({i, j});
  if (it == g.end())
    g.emplace(Exp2{i, j}, c);
  else
    it->second += c;
}

Grid truncate_total(const CPoly& p, int D) {
  Grid g;
  for (auto& [e, c] : p.terms())
    if (e.first + e.second < D) add_to(g, e.first, e.second, c);
  return g;
}

std::vector<std::vector<Rational>> binomials(int n) {
  std::vector<std::vector<Rational>> b(n + 1);
  for (int i = 0; i <= n; ++i) {
    b[i].assign(i + 1, Rational(1));
    for (int k = 1; k < i; ++k) b[i][k] = b[i - 1][k - 1] + b[i - 1][k];
  }
  return b;
}

// G(u, u (v + c)), truncated below total degree D.
Grid subst_v0(const Grid& G, const Coeff& c, int D) {
  Grid r;
  bool zero = c.is_exact() && c.exact().is_zero();
  int maxj = 0;
  for (auto& [e, v] : G) maxj = std::max(maxj, e.second);
  auto B = binomials(maxj);
  std::vector<Coeff> cp{Coeff(1)};
  for (int i = 1; i <= maxj; ++i) cp.push_back(cp.back() * c);
  for (auto& [e, v] : G) {
    int i = e.first, j = e.second;
    if (zero) {
      if (i + 2 * j < D) add_to(r, i + j, j, v);
      continue;
    }
    for (int l = 0; l <= j && i + j + l < D; ++l) add_to(r, i + j, l, v * Coeff(B[j][l]) * cp[j - l]);
  }
  return r;
}

// G((z + c) w, w), truncated below total degree D.
Grid subst_v1(const Grid& G, const Coeff& c, int D) {
  Grid r;
  bool zero = c.is_exact() && c.exact().is_zero();
  int maxi = 0;
  for (auto& [e, v] : G) maxi = std::max(maxi, e.first);
  auto B = binomials(maxi);
  std::vector<Coeff> cp{Coeff(1)};
  for (int i = 1; i <= maxi; ++i) cp.push_back(cp.back() * c);
  for (auto& [e, v] : G) {
    int i = e.first, j = e.second;
    if (zero) {
      if (2 * i + j < D) add_to(r, i, i + j, v);
      continue;
    }
    for (int l = 0; l <= i && l + i + j < D; ++l) add_to(r, l, i + j, v * Coeff(B[i][l]) * cp[i - l]);
  }
  return r;
}

Grid times_monomial(const Grid& G, int a, int b, int D) {
  Grid r;
  for (auto& [e, v] : G)
    if (e.first + a + e.second + b < D) r.emplace(Exp2{e.first + a, e.second + b}, v);
  return r;
}

struct Local {
  Grid G, J;
};

// f and the Jacobian of the chart map, expanded at (pa, pb) of the chart.
Local local_expansion(const BivariateFunction& f, const ResolutionTree& tree, int chart, const Coeff& pa, const Coeff& pb,
                      int DG, int DJ) {
  std::vector<int> path;
  for (int c = chart; c >= 0; c = tree.charts[c].parent) path.push_back(c);
  std::reverse(path.begin(), path.end());
  Local L;
  L.G = truncate_total(to_cpoly(f.poly), DG);
  L.J = {{Exp2{0, 0}, Coeff(1)}};
  for (std::size_t i = 1; i < path.size(); ++i) {
    const Chart& c = tree.charts[path[i]];
    Coeff na = i + 1 < path.size() ? tree.charts[path[i + 1]].ca : pa;
    Coeff nb = i + 1 < path.size() ? tree.charts[path[i + 1]].cb : pb;
    if (c.kind == ChartKind::V0) {
      if (!na.is_zero()) fail(ErrorCode::AssertionFailed, "point off the exceptional divisor in a V0 chart");
      L.G = subst_v0(L.G, nb, DG);
      L.J = times_monomial(subst_v0(L.J, nb, DJ), 1, 0, DJ);
    } else {
      if (!nb.is_zero()) fail(ErrorCode::AssertionFailed, "point off the exceptional divisor in a V1 chart");
      L.G = subst_v1(L.G, na, DG);
      L.J = times_monomial(subst_v1(L.J, na, DJ), 0, 1, DJ);
    }
  }
  if (path.size() == 1 && (!pa.is_zero() || !pb.is_zero())) fail(ErrorCode::AssertionFailed, "base point is not the origin");
  return L;
}

Grid swap_grid(const Grid& G) {
  Grid r;
  for (auto& [e, v] : G) r.emplace(Exp2{e.second, e.first}, v);
  return r;
}

bool vanishes(const Coeff& c) { return c.is_exact() ? c.exact().is_zero() : c.ball().contains_zero(); }

double mag(const Coeff& c) { return c.is_exact() ? std::fabs(c.exact().to_double()) : c.ball().abs_upper().to_double(); }

std::string mono(int i, int j) { return "p^" + std::to_string(i) + " q^" + std::to_string(j); }

// Checks G = p^A q^B (q - psi(p))^m * unit through total degree D. Returns the
// largest remainder bound.
double check_form(const Grid& G, int A, int B, const Series* psi, int m, int D, const std::string& what) {
  if (A < 0 || B < 0) fail(ErrorCode::VerificationFailed, what + ": negative exponent claimed");
  int L = D - A - B;
  std::vector<std::vector<Coeff>> H(std::max(L, 0));
  for (int j = 0; j < L; ++j) H[j].assign(L - j, Coeff());
  for (auto& [e, v] : G) {
    int i = e.first, j = e.second;
    if (i < A || j < B) {
      if (!vanishes(v)) fail(ErrorCode::VerificationFailed, what + ": coefficient of " + mono(i, j) + " is " + v.str() + ", expected 0");
      continue;
    }
    if (i - A + j - B < L) H[j - B][i - A] += v;
  }
  double worst = 0;
  Coeff unit;
  if (psi && m > 0) {
    // W = (q - psi(p))^m as rows in q.
    std::vector<std::vector<Coeff>> W(1, std::vector<Coeff>(L, Coeff()));
    W[0][0] = Coeff(1);
    for (int r = 0; r < m; ++r) {
      std::vector<std::vector<Coeff>> nw(W.size() + 1, std::vector<Coeff>(L, Coeff()));
      for (std::size_t j = 0; j < W.size(); ++j)
        for (int i = 0; i < L; ++i) {
          if (structural_zero(W[j][i])) continue;
          nw[j + 1][i] += W[j][i];
          for (int k = 0; i + k < L; ++k)
            if (!structural_zero(psi->get(k))) nw[j][i + k] -= W[j][i] * psi->get(k);
        }
      W = nw;
    }
    std::vector<Coeff> q0(std::max(L, 1), Coeff());
    for (int j = L - 1; j >= m; --j) {
      const std::vector<Coeff> c = H[j];
      if (j == m) q0 = c;
      for (int l = 0; l < m; ++l) {
        int row = j - m + l;
        for (std::size_t i = 0; i < c.size(); ++i) {
          if (structural_zero(c[i])) continue;
          for (int k = 0; i + k + row < static_cast<std::size_t>(L); ++k)
            if (!structural_zero(W[l][k])) H[row][i + k] -= c[i] * W[l][k];
        }
      }
      H[j].assign(H[j].size(), Coeff());
    }
    for (int j = 0; j < std::min(m, L); ++j)
      for (std::size_t i = 0; i < H[j].size(); ++i) {
        worst = std::max(worst, mag(H[j][i]));
        if (!vanishes(H[j][i]))
          fail(ErrorCode::VerificationFailed, what + ": remainder coefficient of p^" + std::to_string(i) + " q^" + std::to_string(j) +
                                                  " after dividing by the branch is " + H[j][i].str());
      }
    if (L <= m) fail(ErrorCode::VerificationFailed, what + ": truncation too short to see the unit");
    unit = q0[0];
  } else {
    if (L <= 0) fail(ErrorCode::VerificationFailed, what + ": truncation too short to see the unit");
    unit = H[0][0];
  }
  if (!unit.certainly_nonzero()) fail(ErrorCode::VerificationFailed, what + ": unit vanishes at the point (" + unit.str() + ")");
  return worst;
}

Series graph_over_p(const Series& U, const Series& V) {
  Series s = U.reversion();
  return V.truncated(s.len()).compose(s);
}

}  // namespace

VerifyReport verify_total_transform(const BivariateFunction& f, const ResolutionTree& tree, PointKind kind, int index,
                                    int exponent_shift) {
  PrecisionScope scope(tree.prec > 0 ? tree.prec : default_precision());
  VerifyReport rep;
  const int K = 6;
  if (kind == PointKind::Crossing) {
    const CrossingPoint& c = tree.crossings.at(index);
    const Divisor& dx = tree.divisors.at(c.dx);
    const Divisor& dy = tree.divisors.at(c.dy);
    rep.point = "Q" + std::to_string(index) + " = E" + std::to_string(c.dx) + " x E" + std::to_string(c.dy);
    int A = dx.N + exponent_shift, B = dy.N;
    Local L = local_expansion(f, tree, c.chart, Coeff(), Coeff(), A + B + 1, dx.k + dy.k + 1);
    rep.max_residual = check_form(L.G, A, B, nullptr, 0, A + B + 1, rep.point);
    check_form(L.J, dx.k, dy.k, nullptr, 0, dx.k + dy.k + 1, rep.point + " Jacobian");
    rep.order = A + B + 1;
    rep.ok = rep.jacobian_ok = true;
    return rep;
  }
  const DistinguishedPoint& P = tree.points.at(index);
  const ResBranch& br = tree.branches.at(P.branch);
  rep.point = "P" + std::to_string(index) + " (" + br.name + ")";
  Series U = centered(br.X, P.pa), V = centered(br.Y, P.pb);
  int A = 0, m = P.m, M = 0;
  bool swap = false;
  const ResBranch* graph = &br;
  if (P.divisor >= 0) {
    A = tree.divisors[P.divisor].N;
    M = tree.divisors[P.divisor].k;
    swap = P.swapped;
  } else if (P.partner >= 0) {
    const ResBranch& pt = tree.branches[P.partner];
    if (U.valuation() >= U.len()) {
      A = br.mult;
      graph = &pt;
      m = pt.mult;
      U = centered(pt.X, P.pa);
      V = centered(pt.Y, P.pb);
    } else {
      A = pt.mult;
    }
  } else if (U.valuation() >= U.len()) {
    A = br.mult;
    graph = nullptr;
  } else if (U.valuation() != 1) {
    swap = true;
  }
  if (swap) std::swap(U, V);
  A += exponent_shift;
  int D = A + m + K;
  Local L = local_expansion(f, tree, P.chart, P.pa, P.pb, std::max(D, 1), M + 1);
  if (swap) {
    L.G = swap_grid(L.G);
    L.J = swap_grid(L.J);
  }
  if (graph) {
    if (U.valuation() != 1) fail(ErrorCode::VerificationFailed, rep.point + ": branch is not transversal to the divisor");
    Series psi = graph_over_p(U, V);
    if (psi.len() < m + K) fail(ErrorCode::TruncationUnderflow, rep.point + ": branch series too short for verification");
    rep.max_residual = check_form(L.G, A, 0, &psi, m, D, rep.point);
  } else {
    rep.max_residual = check_form(L.G, A, 0, nullptr, 0, D, rep.point);
  }
  check_form(L.J, M, 0, nullptr, 0, M + 1, rep.point + " Jacobian");
  rep.order = D;
  rep.ok = rep.jacobian_ok = true;
  return rep;
}

std::vector<VerifyReport> verify_all(const BivariateFunction& f, const ResolutionTree& tree) {
  std::vector<VerifyReport> out;
  for (std::size_t i = 0; i < tree.points.size(); ++i)
    out.push_back(verify_total_transform(f, tree, PointKind::Distinguished, static_cast<int>(i)));
  for (std::size_t i = 0; i < tree.crossings.size(); ++i)
    out.push_back(verify_total_transform(f, tree, PointKind::Crossing, static_cast<int>(i)));
  return out;
}

}  // namespace pcz
