#include <algorithm>

#include "pcz/blowup.hpp"
#include "pcz/errors.hpp"
#include "pcz/newton.hpp"
#include "pcz/puiseux.hpp"
#include "pcz/zeta.hpp"

namespace pcz {

PoleReport extendibility_report(const BivariateFunction& f, int T) {
  if (f.poly.is_zero()) fail(ErrorCode::FlatInput, "polynomial part is zero");
  PoleReport r;
  r.delta0 = height_delta0(f);
  r.h0 = r.delta0.is_zero() ? ExtRational{} : ExtRational{r.delta0.inv()};
  Mu0Result mu = mu0_range(f);
  r.mu0_lower = mu.lower;
  r.mu0_upper = mu.upper;
  if (!mu.resolved()) {
    r.flags.push_back("mu0 unresolved in [" + std::to_string(mu.lower) + ", " + std::to_string(mu.upper) + "]");
    // The weaker bound is the safe one.
    r.m0_lower = mu.upper <= 1 ? ExtRational{} : ExtRational{Rational(1, mu.upper)};
  } else {
    r.m0_lower = mu.value() <= 1 ? ExtRational{} : ExtRational{Rational(1, mu.value())};
  }

  try {
    ResolutionTree tree = almost_resolve(f, T);
    for (std::size_t i = 0; i < tree.points.size(); ++i) {
      const auto& P = tree.points[i];
      if (P.a == 0) continue;
      ModelZ z = poles_model_Z(P.a, P.M, P.m);
      for (auto& fl : z.flags) r.flags.push_back("P" + std::to_string(i) + ": " + fl);
      if (z.progression) {
        auto pr = *z.progression;
        pr.source = "distinguished point P" + std::to_string(i) + " (" + tree.branches[P.branch].name + ")";
        r.progressions.push_back(pr);
      }
    }
    for (std::size_t i = 0; i < tree.crossings.size(); ++i) {
      const auto& c = tree.crossings[i];
      const auto& dx = tree.divisors[c.dx];
      const auto& dy = tree.divisors[c.dy];
      PoleSet ps = poles_normal_crossings(dx.N, dx.k, dy.N, dy.k);
      for (auto& pr : ps.progressions) {
        pr.source = "crossing point E" + std::to_string(c.dx) + " x E" + std::to_string(c.dy) + (pr.source == "crossing:x" ? " along E" + std::to_string(c.dx) : " along E" + std::to_string(c.dy));
        r.progressions.push_back(pr);
      }
    }
    for (auto& d : tree.divisors) {
      PoleSet ps = poles_one_dim(d.N, d.k);
      auto pr = ps.progressions.front();
      pr.source = "divisor E" + std::to_string(d.id);
      r.progressions.push_back(pr);
    }
    if (tree.divisors.empty() && tree.points.empty()) r.flags.push_back("no branches through the origin");
  } catch (const Error& e) {
    r.flags.push_back(std::string("resolution unavailable: ") + error_name(e.code()) + ": " + e.what());
  }

  // Identical progressions from several sources are kept once.
  std::vector<ArithmeticProgression> uniq;
  for (auto& p : r.progressions) {
    bool dup = false;
    for (auto& q : uniq)
      if (q.offset == p.offset && q.step == p.step) {
        q.source += "; " + p.source;
        dup = true;
      }
    if (!dup) uniq.push_back(p);
  }
  r.progressions = uniq;
  if (r.m0_lower) {
    Rational bound = -*r.m0_lower;
    for (auto& p : r.progressions)
      for (auto& s : p.members_above(bound)) r.in_region.push_back(s);
    std::sort(r.in_region.begin(), r.in_region.end(), [](const Rational& a, const Rational& b) { return a > b; });
    r.in_region.erase(std::unique(r.in_region.begin(), r.in_region.end()), r.in_region.end());
  }
  return r;
}

}  // namespace pcz
