#include <algorithm>

#include "internal.hpp"
#include "pcz/errors.hpp"

namespace pcz {

using detail::centered;
using detail::imag_is_zero;
using detail::local_divisors;
using detail::point_groups;
using detail::PointGroup;

namespace {

ResolutionTree empty_tree(int T) {
  ResolutionTree t;
  t.T = T;
  t.prec = default_precision();
  Chart base;
  t.charts.push_back(base);
  return t;
}

bool series_is_real(const Series& s) {
  for (int i = 0; i < s.len(); ++i)
    if (!imag_is_zero(s[i])) return false;
  return true;
}

bool identically_zero(const Series& s) { return s.valuation() >= s.len(); }

}  // namespace

ResolutionTree graph_tree(const std::vector<Series>& phis, const std::vector<int>& mults) {
  ResolutionTree t = empty_tree(phis.empty() ? 0 : phis.front().len());
  for (std::size_t i = 0; i < phis.size(); ++i) {
    ResBranch b;
    b.id = static_cast<int>(i);
    b.name = "root " + std::to_string(i);
    b.Y = phis[i];
    b.X = Series::monomial(1, Coeff(1), phis[i].len());
    b.mult = i < mults.size() ? mults[i] : 1;
    b.real = series_is_real(phis[i]);
    b.graph = true;
    t.branches.push_back(b);
  }
  return t;
}

ResolutionTree graph_tree(const BivariateFunction& f, int T) {
  std::string last;
  for (mpfr_prec_t prec : precision_schedule()) {
    PrecisionScope scope(prec);
    try {
      Factorization fac = newton_puiseux(f, T);
      int ram = fac.N % 2 == 1 ? 2 : 1;
      std::vector<Series> phis;
      std::vector<int> mults;
      for (auto& r : all_roots(fac, T)) {
        phis.push_back(ram == 1 ? r.y : r.y.ramified(ram));
        mults.push_back(r.multiplicity);
      }
      ResolutionTree t = graph_tree(phis, mults);
      t.T = T;
      t.m0 = fac.m0;
      if (fac.m0 > 0) t.notes.push_back("x^" + std::to_string(fac.m0) + " factor is not a graph and is left out");
      if (ram == 2) t.notes.push_back("odd ramification doubled");
      return t;
    } catch (const PrecisionLow& e) {
      last = e.what();
    }
  }
  fail(ErrorCode::PrecisionExhausted, "graph branches: " + last);
}

StepLog remove_nonreal_branches(ResolutionTree& tree) {
  StepLog log;
  for (std::size_t id = 0; id < tree.branches.size(); ++id) {
    int guard = 0;
    while (!tree.branches[id].real && !tree.branches[id].detached) {
      const ResBranch& b = tree.branches[id];
      if (!imag_is_zero(b.X[0]) || !imag_is_zero(b.Y[0])) {
        tree.branches[id].detached = true;
        break;
      }
      if (++guard > 4 * tree.T + 8 || b.Y.len() < 2)
        fail(ErrorCode::TruncationUnderflow, "no non-real coefficient of " + b.name + " within the truncation order");
      blow_up_at(tree, b.chart, b.X[0], b.Y[0]);
      ++log.blowups;
    }
  }
  return log;
}

StepLog separate_branches(ResolutionTree& tree) {
  StepLog log;
  auto live = [&]() {
    std::vector<int> v;
    for (auto& b : tree.branches)
      if (!b.detached) v.push_back(b.id);
    return v;
  };
  {
    auto ids = live();
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        ContactValue c = contact_exponent(tree, ids[i], ids[j]);
        if (c.kind == ContactValue::Finite) log.initial_M += c.value;
      }
  }
  for (;;) {
    const PointGroup* target = nullptr;
    auto groups = point_groups(tree);
    for (auto& g : groups) {
      for (std::size_t i = 0; i < g.branches.size() && !target; ++i)
        for (std::size_t j = i + 1; j < g.branches.size(); ++j)
          if (contact_exponent(tree, g.branches[i], g.branches[j]).kind == ContactValue::Finite) {
            target = &g;
            break;
          }
      if (target) break;
    }
    if (!target) break;
    if (log.blowups >= log.initial_M)
      fail(ErrorCode::AssertionFailed, "separation needs more blowups than the initial contact sum " + std::to_string(log.initial_M));
    std::vector<std::tuple<int, int, ContactValue>> before;
    for (std::size_t i = 0; i < target->branches.size(); ++i)
      for (std::size_t j = i + 1; j < target->branches.size(); ++j) {
        int a = target->branches[i], b = target->branches[j];
        before.emplace_back(a, b, contact_exponent(tree, a, b));
      }
    blow_up_at(tree, target->chart, target->pa, target->pb);
    ++log.blowups;
    for (auto& [a, b, c] : before) {
      ContactValue n = contact_exponent(tree, a, b);
      bool ok = false;
      if (c.kind == ContactValue::Infinity) ok = n.kind == ContactValue::Infinity;
      if (c.kind == ContactValue::Finite)
        ok = c.value == 1 ? n.kind == ContactValue::Zero : (n.kind == ContactValue::Finite && n.value == c.value - 1);
      if (!ok)
        fail(ErrorCode::AssertionFailed, "contact of " + tree.branches[a].name + " and " + tree.branches[b].name + " went from " +
                                             c.str() + " to " + n.str() + " in one blowup");
      ++log.decrement_checks;
    }
  }
  return log;
}

namespace {

bool needs_blowup(const ResolutionTree& tree, const PointGroup& g) {
  auto divs = local_divisors(tree, g.chart, g.pa, g.pb);
  if (divs.count() + static_cast<int>(g.branches.size()) >= 3) return true;
  for (int id : g.branches) {
    const ResBranch& b = tree.branches[id];
    Series dx = centered(b.X, g.pa), dy = centered(b.Y, g.pb);
    int ox = dx.valuation(), oy = dy.valuation();
    if (std::min(ox, oy) >= std::min(dx.len(), dy.len())) fail(ErrorCode::TruncationUnderflow, b.name + " vanishes to truncation order");
    if (std::min(ox, oy) >= 2) return true;
    if (divs.on_p >= 0 && ox >= 2) return true;
    if (divs.on_q >= 0 && oy >= 2) return true;
  }
  if (g.branches.size() == 2) {
    const ResBranch& a = tree.branches[g.branches[0]];
    const ResBranch& b = tree.branches[g.branches[1]];
    if (!identically_zero(centered(a.X, g.pa)) && !identically_zero(centered(b.X, g.pa))) return true;
    Coeff cr = a.X.get(1) * b.Y.get(1) - a.Y.get(1) * b.X.get(1);
    if (cr.is_zero()) return true;
  }
  return false;
}

void attach_flat_tags(const BivariateFunction& f, ResolutionTree& tree) {
  if (f.flats.empty()) return;
  auto terms = f.poly.terms();
  if (terms.size() != 1) {
    tree.notes.push_back("flat tags are derived only for a monomial polynomial part");
    return;
  }
  auto [ex, c0] = *terms.begin();
  int a = ex.first, bdeg = ex.second;
  for (auto& P : tree.points) {
    const ResBranch& br = tree.branches[P.branch];
    if (identically_zero(br.X)) continue;  // the x = 0 class
    P.eps.assign(P.m, FlatSum());
    for (auto& ft : f.flats) {
      int k = bdeg - ft.y_power;
      if (k < 1 || k > P.m) continue;
      FlatTerm t = ft;
      t.c = ft.c / c0;
      t.y_power = 0;
      t.x_power = ft.x_power - a + br.flat_offset;
      P.eps[k - 1].add(t);
    }
  }
  for (auto& ft : f.flats)
    if (ft.y_power >= bdeg) {
      tree.notes.push_back("flat term " + ft.str() + " is absorbed into the unit");
    }
}

ResolutionTree resolve_at(const BivariateFunction& f, int T) {
  ResolutionTree tree = empty_tree(T);
  if (!f.poly.coeff(0, 0).is_zero()) {
    tree.notes.push_back("f(0,0) != 0; the zero set misses the origin");
    return tree;
  }
  Factorization fac = newton_puiseux(f, T);
  tree.m0 = fac.m0;
  int len = T + 1;
  if (fac.m0 > 0) {
    ResBranch b;
    b.id = 0;
    b.name = "x=0";
    b.X = Series(len);
    b.Y = Series::monomial(1, Coeff(1), len);
    b.mult = fac.m0;
    tree.branches.push_back(b);
  }
  for (std::size_t j = 0; j < fac.branches.size(); ++j) {
    const PuiseuxBranch& pb = fac.branches[j];
    ResBranch b;
    b.id = static_cast<int>(tree.branches.size());
    b.name = "branch " + std::to_string(j + 1) + " (factor " + std::to_string(pb.factor) + ", E=" + std::to_string(pb.E) + ")";
    b.mult = pb.multiplicity;
    if (pb.realness == Realness::Unresolved) throw PrecisionLow("realness of " + b.name + " is unresolved");
    if (pb.realness == Realness::Real) {
      b.Y = pb.real_param;
      b.X = Series::monomial(pb.E, Coeff(static_cast<long>(pb.sigma)), b.Y.len());
    } else {
      b.Y = pb.own;
      b.X = Series::monomial(pb.E, Coeff(1), b.Y.len());
      b.real = false;
    }
    tree.branches.push_back(b);
  }
  int cap = 8 * T + 64;
  for (int it = 0;; ++it) {
    if (it > cap) fail(ErrorCode::IterationLimit, "non-real branches were not detached");
    const PointGroup* target = nullptr;
    auto groups = point_groups(tree);
    for (auto& g : groups) {
      for (int id : g.branches)
        if (!tree.branches[id].real) target = &g;
      if (target) break;
    }
    if (!target) break;
    blow_up_at(tree, target->chart, target->pa, target->pb);
  }
  for (int it = 0;; ++it) {
    if (it > cap) fail(ErrorCode::IterationLimit, "normal crossings not reached");
    const PointGroup* target = nullptr;
    auto groups = point_groups(tree);
    for (auto& g : groups)
      if (needs_blowup(tree, g)) {
        target = &g;
        break;
      }
    if (!target) break;
    blow_up_at(tree, target->chart, target->pa, target->pb);
  }
  for (auto& g : point_groups(tree)) {
    auto divs = local_divisors(tree, g.chart, g.pa, g.pb);
    for (int id : g.branches) {
      DistinguishedPoint P;
      P.branch = id;
      P.chart = g.chart;
      P.pa = g.pa;
      P.pb = g.pb;
      P.m = tree.branches[id].mult;
      if (divs.count() == 1) {
        P.divisor = divs.on_p >= 0 ? divs.on_p : divs.on_q;
        P.swapped = divs.on_q >= 0;
        P.a = tree.divisors[P.divisor].N;
        P.M = tree.divisors[P.divisor].k;
      } else if (divs.count() == 0) {
        if (g.branches.size() == 2) {
          P.partner = g.branches[0] == id ? g.branches[1] : g.branches[0];
          P.a = tree.branches[P.partner].mult;
        }
      } else {
        fail(ErrorCode::AssertionFailed, "branch " + tree.branches[id].name + " passes through a crossing point");
      }
      tree.points.push_back(P);
    }
  }
  std::sort(tree.points.begin(), tree.points.end(),
            [](const DistinguishedPoint& x, const DistinguishedPoint& y) { return x.branch < y.branch; });
  attach_flat_tags(f, tree);
  int detached = 0;
  for (auto& b : tree.branches) detached += b.detached;
  if (detached) tree.notes.push_back(std::to_string(detached) + " non-real branches detached");
  return tree;
}

}  // namespace

ResolutionTree almost_resolve(const BivariateFunction& f, int T) {
  if (f.poly.is_zero()) fail(ErrorCode::FlatInput, "polynomial part is zero; nothing to resolve");
  if (T < 4) fail(ErrorCode::InvalidArgument, "truncation order too small");
  std::string last;
  for (mpfr_prec_t prec : precision_schedule()) {
    PrecisionScope scope(prec);
    try {
      return resolve_at(f, T);
    } catch (const PrecisionLow& e) {
      last = e.what();
    }
  }
  fail(ErrorCode::PrecisionExhausted, "resolution failed up to 2048 bits: " + last);
}

}  // namespace pcz
