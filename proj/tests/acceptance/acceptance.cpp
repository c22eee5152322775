// Runs the acceptance criteria; `acceptance N` runs only criterion N.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles/oracles.hpp"
#include "../support/random_poly.hpp"
#include "pcz/blowup.hpp"
#include "pcz/errors.hpp"
#include "pcz/newton.hpp"
#include "pcz/numeric.hpp"
#include "pcz/puiseux.hpp"
#include "pcz/zeta.hpp"

using namespace pcz;
using P = BivariatePolynomial;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void check(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail = what;
      pass = false;
    }
  }
};

const P X = P::x(), Y = P::y();

Outcome invariants_table() {
  Outcome o;
  struct Row {
    const char* name;
    BivariateFunction f;
    Rational d, delta0;
    int mu0;
  };
  std::vector<Row> rows = {
      {"y^2-x^3", BivariateFunction(Y * Y - X.pow(3)), Rational(6, 5), Rational(6, 5), 1},
      {"(x^2-y^2)^2", BivariateFunction((X * X - Y * Y).pow(2)), Rational(2), Rational(2), 2},
      {"x^4+y^4", BivariateFunction(X.pow(4) + Y.pow(4)), Rational(2), Rational(2), 0},
      {"x^2y^2", BivariateFunction(X * X * Y * Y), Rational(2), Rational(2), 2},
      {"x^6+x^2y^2+y^6", BivariateFunction(X.pow(6) + X * X * Y * Y + Y.pow(6)), Rational(2), Rational(2), 0},
      {"xy^3", BivariateFunction(X * Y.pow(3)), Rational(3), Rational(3), 3},
  };
  for (auto& r : rows) {
    Rational d = newton_distance(newton_polygon(r.f));
    Rational h = height_delta0(r.f);
    int m = mu0(r.f);
    std::ostringstream os;
    os << r.name << ": got (" << d.str() << ", " << h.str() << ", " << m << ")";
    o.check(d == r.d && h == r.delta0 && m == r.mu0, os.str());
  }
  BivariateFunction flat(Y.pow(4), {FlatTerm{Rational(1), 0, 0, 2, 1}});
  int m = mu0(flat);
  o.check(m == 4, "y^4 + exp(-1/x^2): mu0 = " + std::to_string(m));
  if (o.pass) o.detail = "7 functions exact";
  return o;
}

Outcome property_suite() {
  Outcome o;
  testsupport::PolyGen gen(20240917);
  int convenient_nondeg = 0, with_oracle = 0;
  for (int i = 0; i < 200 && o.pass; ++i) {
    testsupport::Sample s = i % 2 ? gen.product() : gen.sparse();
    BivariateFunction f(s.f);
    Mu0Result mr = mu0_range(f);
    o.check(mr.resolved(), s.label + ": mu0 unresolved");
    if (!o.pass) break;
    int m = mr.value();
    Rational d0 = height_delta0(f);
    o.check(Rational(m) <= d0, s.label + ": mu0 > delta0");
    DegeneracyReport dg = degeneracy_report(f);
    if (dg.convenient && dg.r_nondegenerate) {
      ++convenient_nondeg;
      o.check(m <= 1, s.label + ": convenient and nondegenerate but mu0 = " + std::to_string(m));
    }
    if (s.mu0) {
      ++with_oracle;
      o.check(m == *s.mu0, s.label + ": mu0 " + std::to_string(m) + " vs constructed " + std::to_string(*s.mu0));
    }
    for (int c = 0; c < 5; ++c) {
      auto L = gen.linear_change();
      BivariateFunction g(linear_change(s.f, L[0], L[1], L[2], L[3]));
      int mg = mu0(g);
      o.check(mg == m, s.label + ": mu0 changed under a linear change (" + std::to_string(mg) + ")");
    }
    Factorization fac = newton_puiseux(f, 40);
    double res = 0;
    o.check(reconstruction_check(f, fac, 40, &res), s.label + ": reconstruction residual nonzero");
  }
  if (o.pass)
    o.detail = "200 instances, " + std::to_string(with_oracle) + " with constructed mu0, " +
               std::to_string(convenient_nondeg) + " convenient+nondegenerate";
  return o;
}

Outcome blowup_suite() {
  Outcome o;
  std::vector<std::pair<std::string, P>> curves = {
      {"cusp", Y * Y - X.pow(3)},
      {"(x^2-y^2)^2", (X * X - Y * Y).pow(2)},
      {"x(y-x)(y+x)(y-x-x^2)", X * (Y - X) * (Y + X) * (Y - X - X * X)},
      {"y^3-x^5", Y.pow(3) - X.pow(5)},
      {"y(y-x^2)(y+x^2)", Y * (Y - X * X) * (Y + X * X)},
      {"(y^2-x^3)(y^2-2x^3)", (Y * Y - X.pow(3)) * (Y * Y - X.pow(3).scaled(Rational(2)))},
      {"xy^3", X * Y.pow(3)},
      {"x^4+y^4", X.pow(4) + Y.pow(4)},
      {"(y^2+x^2)(y-x)", (Y * Y + X * X) * (Y - X)},
  };
  int checks = 0;
  for (auto& [name, p] : curves) {
    BivariateFunction f(p);
    ResolutionTree g = graph_tree(f, 40);
    StepLog a = remove_nonreal_branches(g);
    StepLog b = separate_branches(g);
    checks += a.decrement_checks + b.decrement_checks;
    o.check(b.blowups <= b.initial_M || b.initial_M == 0, name + ": more separation blowups than initial contact");

    ResolutionTree t = almost_resolve(f, 40);
    std::string why;
    o.check(divisor_graph_ok(t, &why), name + ": divisor graph " + why);
    try {
      verify_all(f, t);
    } catch (const Error& e) {
      o.check(false, name + ": " + e.what());
    }

    // m_j against the Puiseux multiplicities of the real branches (plus x = 0)
    Factorization fac = newton_puiseux(f, 40);
    std::multiset<int> expect, got;
    for (auto& br : fac.branches)
      if (br.realness == Realness::Real) expect.insert(br.multiplicity);
    if (fac.m0 > 0) expect.insert(fac.m0);
    for (auto& pt : t.points) got.insert(pt.m);
    o.check(expect == got, name + ": distinguished multiplicities differ from Puiseux multiplicities");
  }

  BivariateFunction cusp(Y * Y - X.pow(3));
  ResolutionTree t = almost_resolve(cusp, 64);
  std::multiset<int> N, K;
  for (auto& d : t.divisors) {
    N.insert(d.N);
    K.insert(d.k);
  }
  o.check(N == std::multiset<int>{2, 3, 6} && K == std::multiset<int>{1, 2, 4}, "cusp divisor data");
  bool all_ok = true;
  for (auto& r : verify_all(cusp, t)) all_ok = all_ok && r.ok && r.jacobian_ok;
  o.check(all_ok, "cusp total transform");
  bool caught = false;
  try {
    verify_total_transform(cusp, t, PointKind::Distinguished, 0, 1);
  } catch (const Error& e) {
    caught = e.code() == ErrorCode::VerificationFailed;
  }
  o.check(caught, "cusp negative control accepted");
  for (auto [p, q] : {std::pair{2, 3}, std::pair{3, 5}, std::pair{2, 5}, std::pair{3, 4}}) {
    auto want = oracle::monomial_curve(p, q);
    ResolutionTree m = almost_resolve(BivariateFunction(Y.pow(p) - X.pow(q)), 64);
    int maxN = 0, kAt = 0;
    for (auto& d : m.divisors)
      if (d.N > maxN) maxN = d.N, kAt = d.k;
    o.check(m.blowups() == want.blowups && maxN == want.N_last && kAt == want.k_last,
            "y^" + std::to_string(p) + "-x^" + std::to_string(q) + " resolution data");
  }
  if (o.pass) o.detail = std::to_string(curves.size()) + " curves, " + std::to_string(checks) + " decrement checks";
  return o;
}

Outcome pole_sets() {
  Outcome o;
  using R = Rational;
  auto p1 = poles_one_dim(1, 0);
  o.check(p1.contains(R(-1)) && p1.contains(R(-2)) && p1.holomorphic_bound == R(-1), "one_dim(1,0)");
  auto p2 = poles_one_dim(2, 3);
  o.check(p2.largest_member() == R(-2) && p2.contains(R(-5, 2)) && p2.holomorphic_bound == R(-2), "one_dim(2,3)");
  o.check(poles_one_dim(3, 0).largest_member() == R(-1, 3), "one_dim(3,0)");

  auto h = poles_lemma_H(1, 2, 0, 2);
  o.check(h.contains(R(-1)) && h.contains(R(-1, 2)) && h.contains(R(-3, 5)), "lemma_H(1,0,2,2)");
  Rational prev = lemma_H_edge(1, 2, 0, 2);
  for (int p = 4; p <= 64; p += 2) {
    Rational e = lemma_H_edge(1, 2, 0, p);
    o.check(e > prev && e < R(-1, 2), "edge not monotone at p = " + std::to_string(p));
    prev = e;
  }
  o.check((prev - R(-1, 2)).abs() < R(1, 100), "edge does not approach -1/m");
  auto h2 = poles_lemma_H(2, 3, 1, 4);
  Rational top(-1000);
  for (auto& s : oracle::lemma_h_members(2, 3, 1, 4, 10)) {
    o.check(h2.contains(s), "lemma_H(2,1,3,4) misses " + s.str());
    top = max(top, s);
  }
  o.check(h2.largest_member() == top && top == R(-1, 3) && h2.members_above(R(-1, 3)).empty(),
          "lemma_H(2,1,3,4) least-magnitude member");

  auto z1 = poles_model_Z(1, 0, 2);
  o.check(z1.region == R(-1, 2) && z1.in_region.empty(), "model_Z(1,0,2)");
  auto z2 = poles_model_Z(4, 3, 1);
  o.check(z2.region == R(-1) && z2.in_region.empty(), "model_Z(4,3,1)");
  auto z3 = poles_model_Z(10, 0, 1);
  bool tenth = z3.in_region.size() == 9;
  for (int j = 1; j <= 9 && tenth; ++j) tenth = z3.in_region[j - 1] == R(-j, 10);
  o.check(tenth, "model_Z(10,0,1)");

  auto n1 = poles_normal_crossings(1, 0, 1, 0);
  o.check(n1.contains(R(-1)) && n1.contains(R(-2)) && !n1.contains(R(-1, 2)), "normal_crossings(1,0,1,0)");
  auto n2 = poles_normal_crossings(2, 1, 3, 0);
  o.check(n2.contains(R(-1)) && n2.contains(R(-3, 2)) && n2.contains(R(-1, 3)) && n2.contains(R(-2, 3)) &&
              !n2.contains(R(-1, 2)),
          "normal_crossings(2,1,3,0)");
  auto n3 = poles_normal_crossings(0, 5, 2, 0);
  o.check(n3.progressions.size() == 1 && n3.contains(R(-1, 2)), "normal_crossings(0,.,2,0)");
  if (o.pass) o.detail = "reference cases and p = 2..64 limit";
  return o;
}

Outcome thresholds() {
  Outcome o;
  struct Case {
    std::string name;
    BivariateFunction f;
    double expect, lo, hi;
  };
  std::vector<Case> cases = {
      {"x^2+y^2", BivariateFunction(X * X + Y * Y), -1.0, -1.3, -0.7},
      {"y^2-x^3", BivariateFunction(Y * Y - X.pow(3)), -5.0 / 6, -1.1, -0.6},
      {"xy^2+x e^(-1/|x|)", BivariateFunction(X * Y * Y, {FlatTerm{Rational(1), 1, 0, 1, 1}}), -0.5, -0.8, -0.3},
  };
  std::ostringstream os;
  for (auto& c : cases) {
    ThresholdResult t = convergence_threshold(c.f, BumpSpec::box(1), c.lo, c.hi);
    os << c.name << " " << t.sigma_star << "; ";
    o.check(std::fabs(t.sigma_star - c.expect) <= 0.05, c.name + ": sigma* = " + std::to_string(t.sigma_star));
  }
  if (o.pass) o.detail = os.str();
  return o;
}

Outcome vdc() {
  Outcome o;
  std::ostringstream os;
  for (int k : {2, 3}) {
    double sigma = -0.2 / k, eta = 0.95 * std::tgamma(k + 1.0);
    auto mono = vdc_scaling([k](double t) { return std::pow(t, k); }, k, eta, sigma, 10);
    auto pert = vdc_scaling([k](double t) { return std::pow(t, k) + 1e-6; }, k, eta, sigma, 10);
    double closed = oracle::vdc_monomial(k, eta, sigma);
    for (auto& r : mono) o.check(std::fabs(r.r / closed - 1) < 0.01, "k=" + std::to_string(k) + " off the closed form");
    o.check(vdc_spread(mono) <= 1.01, "k=" + std::to_string(k) + " monomial spread");
    o.check(vdc_spread(pert) <= 3, "k=" + std::to_string(k) + " perturbed spread " + std::to_string(vdc_spread(pert)));
    for (std::size_t i = 0; i < mono.size(); ++i) o.check(pert[i].r <= mono[i].r * 1.05, "perturbation raised r");
    os << "k=" << k << " sigma=" << sigma << " spread " << vdc_spread(mono) << "/" << vdc_spread(pert) << "; ";
  }
  if (o.pass) o.detail = os.str();
  return o;
}

Outcome decomposition() {
  Outcome o;
  try {
    auto rep = decomposition_check(1, 0, 2, {FlatTerm{Rational(1), 1, 0, 2, 1}}, 4, {-0.45, -0.55});
    o.check(rep.rows[0].I2_checked && rep.rows[0].J_checked, "sigma = -0.45 should assert I2 and J");
    o.check(!rep.rows[1].J_checked, "sigma = -0.55 should exempt J");
    o.check(rep.min_G1 >= rep.c && rep.min_dmG2 >= rep.mu, "pointwise bounds");
    std::ostringstream os;
    os << "r_p=" << rep.r_p << " min G1=" << rep.min_G1 << " min d2G2=" << rep.min_dmG2
       << " I2(-0.45)=" << rep.rows[0].I2.value << " J(-0.45)=" << rep.rows[0].J.value;
    if (o.pass) o.detail = os.str();
  } catch (const Error& e) {
    o.check(false, e.what());
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  struct Crit {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  std::vector<Crit> all = {
      {1, "invariants", 1, invariants_table},  {2, "properties", 60, property_suite}, {3, "blowup", 60, blowup_suite},
      {4, "pole sets", 1, pole_sets},          {5, "thresholds", 120, thresholds},    {6, "vdc scaling", 60, vdc},
      {7, "decomposition", 120, decomposition},
  };
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  int failed = 0;
  for (auto& c : all) {
    if (only && c.id != only) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.budget_s) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(c.budget_s) + " s budget)";
    }
    std::printf("[%s] criterion %d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), s);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
