#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcz/function.hpp"
#include "pcz/rational.hpp"

namespace pcz {

// Candidate poles {-(offset + j) / step : j = 1, 2, ...}.
struct ArithmeticProgression {
  Rational offset;
  Rational step{1};
  std::string source;

  Rational member(long j) const { return -(offset + Rational(j)) / step; }
  // Members strictly greater than `bound` (and below 0).
  std::vector<Rational> members_above(const Rational& bound) const;
  bool contains(const Rational& s) const;
};

struct PoleSet {
  std::vector<ArithmeticProgression> progressions;
  Rational holomorphic_bound;  // holomorphic for Re(s) > holomorphic_bound
  std::vector<std::string> flags;

  // Largest member of any progression (the candidate nearest to 0).
  Rational largest_member() const;
  bool contains(const Rational& s) const;
  // Every member strictly above `bound`, sorted descending, duplicates merged.
  std::vector<Rational> members_above(const Rational& bound) const;
};

PoleSet poles_one_dim(long A, long B);
PoleSet poles_lemma_H(long a, long m, long b, long p);
// Bound approached by the third family as p grows: -(b + p + 1) / (a + p m).
Rational lemma_H_edge(long a, long m, long b, long p);

struct ModelZ {
  Rational region;  // meromorphic for Re(s) > region
  std::optional<ArithmeticProgression> progression;
  std::vector<Rational> in_region;
  std::vector<std::string> flags;
};
ModelZ poles_model_Z(long a, long b, long m);

PoleSet poles_normal_crossings(long a, long c, long b, long d);

// nullopt means infinity.
using ExtRational = std::optional<Rational>;
std::string ext_str(const ExtRational& r);

struct PoleReport {
  ExtRational h0;
  ExtRational m0_lower;
  std::vector<ArithmeticProgression> progressions;
  std::vector<Rational> in_region;  // members with -m0_lower < s < 0, when m0_lower is finite
  std::vector<std::string> flags;
  int mu0_lower = 0, mu0_upper = 0;
  Rational delta0;
};

PoleReport extendibility_report(const BivariateFunction& f, int T = 64);

}  // namespace pcz
