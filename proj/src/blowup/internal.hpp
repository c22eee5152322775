#pragma once

#include "pcz/blowup.hpp"

namespace pcz::detail {

// Heuristic zero tests on ball coefficients; may throw PrecisionLow.
bool same_coeff(const Coeff& a, const Coeff& b);
bool imag_is_zero(const Coeff& c);
Coeff real_part(const Coeff& c);

// Series minus its value at 0, with the constant term set to an exact zero.
Series centered(const Series& s, const Coeff& at);

// Non-detached branches grouped by point, ordered by (chart, lowest id).
struct PointGroup {
  int chart = 0;
  Coeff pa, pb;
  std::vector<int> branches;
};
std::vector<PointGroup> point_groups(const ResolutionTree& tree);

// Divisors through (pa, pb) of the chart: first the one on p = 0, then q = 0.
struct LocalDivisors {
  int on_p = -1;
  int on_q = -1;
  int count() const { return (on_p >= 0) + (on_q >= 0); }
};
LocalDivisors local_divisors(const ResolutionTree& tree, int chart, const Coeff& pa, const Coeff& pb);

}  // namespace pcz::detail
