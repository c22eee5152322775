#include <algorithm>

#include "pcz/errors.hpp"
#include "pcz/zeta.hpp"

namespace pcz {

std::vector<Rational> ArithmeticProgression::members_above(const Rational& bound) const {
  std::vector<Rational> out;
  for (long j = 1;; ++j) {
    Rational s = member(j);
    if (s <= bound) break;
    if (s < Rational(0)) out.push_back(s);
    if (j > 1000000) fail(ErrorCode::BudgetExceeded, "progression enumeration runaway");
  }
  return out;
}

bool ArithmeticProgression::contains(const Rational& s) const {
  // -(offset + j)/step = s  <=>  j = -s*step - offset, a positive integer
  Rational j = -s * step - offset;
  return j.is_integer() && j >= Rational(1);
}

Rational PoleSet::largest_member() const {
  if (progressions.empty()) fail(ErrorCode::InvalidArgument, "empty pole set");
  Rational best = progressions.front().member(1);
  for (auto& p : progressions) best = max(best, p.member(1));
  return best;
}

bool PoleSet::contains(const Rational& s) const {
  for (auto& p : progressions)
    if (p.contains(s)) return true;
  return false;
}

std::vector<Rational> PoleSet::members_above(const Rational& bound) const {
  std::vector<Rational> all;
  for (auto& p : progressions)
    for (auto& s : p.members_above(bound)) all.push_back(s);
  std::sort(all.begin(), all.end(), [](const Rational& a, const Rational& b) { return a > b; });
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

PoleSet poles_one_dim(long A, long B) {
  if (A < 1 || B < 0) fail(ErrorCode::InvalidArgument, "one-dimensional pieces need A >= 1 and B >= 0");
  PoleSet ps;
  ps.progressions.push_back({Rational(B), Rational(A), "one-dim"});
  ps.holomorphic_bound = Rational(-(B + 1), A);
  return ps;
}

Rational lemma_H_edge(long a, long m, long b, long p) { return Rational(-(b + p + 1), a + p * m); }

PoleSet poles_lemma_H(long a, long m, long b, long p) {
  if (a < 1 || m < 1 || b < 0 || p < 2 || p % 2 != 0) fail(ErrorCode::InvalidArgument, "need a, m >= 1, b >= 0 and even p >= 2");
  PoleSet ps;
  ps.progressions.push_back({Rational(b), Rational(a), "wedge:x"});
  ps.progressions.push_back({Rational(0), Rational(m), "wedge:y"});
  // -(b + j + p k)/(a + p m) with j, k >= 1 lies in the progression with offset b + p.
  ps.progressions.push_back({Rational(b + p), Rational(a + p * m), "wedge:mixed"});
  ps.holomorphic_bound = max(Rational(-(b + 1), a), Rational(-1, m));
  return ps;
}

ModelZ poles_model_Z(long a, long b, long m) {
  if (a < 1 || b < 0 || m < 1) fail(ErrorCode::InvalidArgument, "need a, m >= 1 and b >= 0");
  ModelZ z;
  z.region = Rational(-1, m);
  ArithmeticProgression pr{Rational(b), Rational(a), "model"};
  if (b == 0) {
    z.flags.push_back("b=0: side condition read as holding");
    z.progression = pr;
  } else if (Rational(m) >= Rational(a, b)) {
    z.progression = pr;
  }
  if (z.progression) z.in_region = z.progression->members_above(z.region);
  return z;
}

PoleSet poles_normal_crossings(long a, long c, long b, long d) {
  if (a < 0 || b < 0 || (a == 0 && b == 0)) fail(ErrorCode::InvalidArgument, "need a, b >= 0, not both zero");
  PoleSet ps;
  Rational bound(-1000000);
  if (a > 0) {
    ps.progressions.push_back({Rational(c), Rational(a), "crossing:x"});
    bound = max(bound, Rational(-(c + 1), a));
  }
  if (b > 0) {
    ps.progressions.push_back({Rational(d), Rational(b), "crossing:y"});
    bound = max(bound, Rational(-(d + 1), b));
  }
  ps.holomorphic_bound = bound;
  return ps;
}

std::string ext_str(const ExtRational& r) { return r ? r->str() : "inf"; }

}  // namespace pcz
