#pragma once

#include <string>
#include <vector>

#include "pcz/flat.hpp"
#include "pcz/function.hpp"
#include "pcz/puiseux.hpp"
#include "pcz/series.hpp"

namespace pcz {

enum class ChartKind { Base, V0, V1 };
const char* chart_kind_name(ChartKind k);

// V0: (u,v) -> (u + a, u v + b); V1: (z,w) -> (z w + a, w + b), both into the
// parent chart. xdiv / ydiv are the exceptional divisors visible as p = 0 / q = 0.
struct Chart {
  int id = 0;
  int parent = -1;
  ChartKind kind = ChartKind::Base;
  Coeff ca, cb;  // center in parent coordinates
  int divisor = -1;  // divisor created by the blowup that produced this chart
  int xdiv = -1;
  int ydiv = -1;
};

struct Divisor {
  int id = 0;
  int N = 0;  // order of the total transform of f along the divisor
  int k = 0;  // order of the Jacobian along the divisor
  int parent_chart = -1;
  std::vector<int> charts;             // charts where it is visible
  std::vector<int> met_at_creation;    // divisors through the center
  std::vector<int> meets;              // current intersection graph
};

// One branch of the zero set, parametrized in the coordinates of its home chart.
struct ResBranch {
  int id = 0;
  std::string name;
  Series X, Y;
  int mult = 1;
  bool real = true;
  bool detached = false;
  int chart = 0;
  int meetings = 0;   // blowups whose center lay on the branch
  int flat_offset = 0;
  bool graph = false;  // X = t
};

struct DistinguishedPoint {
  int branch = 0;
  int chart = 0;
  Coeff pa, pb;
  int divisor = -1;       // divisor through the point, if any
  int partner = -1;       // transversal branch used instead of a divisor
  bool swapped = false;   // divisor is q = 0; roles of the coordinates exchange
  int a = 0, m = 1, M = 0;
  std::vector<FlatSum> eps;  // flat coefficient tags eps_1..eps_m
};

struct CrossingPoint {
  int chart = 0;   // the point is (0,0) of this chart
  int dx = -1;     // divisor p = 0
  int dy = -1;     // divisor q = 0
};

struct ResolutionTree {
  int T = 64;
  int m0 = 0;
  long prec = 0;  // ball precision the tree was built at
  std::vector<Chart> charts;
  std::vector<Divisor> divisors;
  std::vector<ResBranch> branches;
  std::vector<DistinguishedPoint> points;
  std::vector<CrossingPoint> crossings;
  std::vector<std::string> notes;
  int blowups() const { return static_cast<int>(divisors.size()); }
};

// Blows up chart `chart` at (a, b); branches there are re-homed.
// Returns the index of the new divisor.
int blow_up_at(ResolutionTree& tree, int chart, const Coeff& a, const Coeff& b);

// Graph-model branch state: y = phi(x) in a V0 chart.
struct BranchState {
  int id = 0;
  Series phi;
  int home = 0;
  int m_count = 0;
  int flat_offset = 0;
};
BranchState strict_transform(const BranchState& b, bool meeting);

struct ContactValue {
  enum Kind { Zero, Finite, Infinity } kind = Zero;
  int value = 0;       // for Finite
  int truncation = 0;  // for Infinity: agreement was only checked this far
  std::string str() const;
};
ContactValue contact_exponent(const BranchState& a, const BranchState& b);
ContactValue contact_exponent(const ResolutionTree& tree, int b1, int b2);

// Graph model: the roots of f(x^N, y) with N even, each as a graph branch.
ResolutionTree graph_tree(const BivariateFunction& f, int T = 64);
ResolutionTree graph_tree(const std::vector<Series>& phis, const std::vector<int>& mults = {});

struct StepLog {
  int blowups = 0;
  int initial_M = 0;  // sum of finite contacts among graph branches
  int decrement_checks = 0;
};
StepLog remove_nonreal_branches(ResolutionTree& tree);
StepLog separate_branches(ResolutionTree& tree);

// Full pipeline on the original coordinates.
ResolutionTree almost_resolve(const BivariateFunction& f, int T = 64);

// Each new divisor meets the divisor it was born on plus at most one more,
// no triple points, and the final graph is a tree. On failure `why` explains.
bool divisor_graph_ok(const ResolutionTree& tree, std::string* why = nullptr);

struct VerifyReport {
  std::string point;
  bool ok = false;
  bool jacobian_ok = false;
  double max_residual = 0;
  int order = 0;
  std::string message;
};
enum class PointKind { Distinguished, Crossing };
// Throws VerificationFailed on mismatch. exponent_shift perturbs the claimed
// divisor exponent (negative control).
VerifyReport verify_total_transform(const BivariateFunction& f, const ResolutionTree& tree, PointKind kind, int index,
                                    int exponent_shift = 0);
std::vector<VerifyReport> verify_all(const BivariateFunction& f, const ResolutionTree& tree);

std::string tree_to_dot(const ResolutionTree& tree);

}  // namespace pcz
