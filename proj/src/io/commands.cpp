#include "pcz/commands.hpp"

#include <cmath>
#include <sstream>

#include "pcz/newton.hpp"

namespace pcz {

namespace {

std::vector<double> grid(double lo, double hi, int steps) {
  std::vector<double> g;
  if (steps <= 1) return {lo};
  for (int i = 0; i < steps; ++i) g.push_back(lo + (hi - lo) * i / (steps - 1));
  return g;
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

Rational expected_threshold(const BivariateFunction& f) {
  Rational d = height_delta0(f);
  if (d.is_zero()) fail(ErrorCode::InvalidArgument, "f does not vanish at the origin; no threshold");
  return -d.inv();
}

BumpSpec bump_of(const ProbeOptions& o) { return o.smooth_bump ? BumpSpec::smooth(o.radius) : BumpSpec::box(o.radius); }

void require_nonflat(const BivariateFunction& f) {
  if (f.poly.is_zero()) fail(ErrorCode::FlatInput, "polynomial part is zero");
}

CommandResult probe_quadrature(const BivariateFunction& f, const ProbeOptions& o) {
  CommandResult r;
  BumpSpec phi = bump_of(o);
  std::vector<double> sig = grid(o.sigma_min.value_or(-0.9), o.sigma_max.value_or(0.0), o.steps ? o.steps : 10);
  r.csv = quadrature_csv_header();
  std::vector<double> done;
  std::vector<QuadratureResult> rows;
  for (double s : sig) {
    QuadratureResult q;
    if (s <= -1) {
      q.value = NAN;
      q.error = INFINITY;
    } else {
      try {
        q = zeta_quadrature(f, phi, s);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExceeded) throw;
        r.error = e.code();
        r.message = e.what();
        break;
      }
    }
    r.csv += quadrature_csv_row(s, q);
    done.push_back(s);
    rows.push_back(q);
  }
  r.out["mode"] = "quadrature";
  r.out["bump"] = o.smooth_bump ? "smooth" : "box";
  r.out["radius"] = o.radius;
  r.out["rows"] = rows.size();
  int nconv = 0;
  for (auto& q : rows) nconv += q.converged;
  r.out["converged_rows"] = nconv;
  Rational d = height_delta0(f);
  if (!d.is_zero()) {
    double pole = -1.0 / d.to_double();
    PoleFit pf = simple_pole_fit(done, rows, pole);
    r.out["pole_fit"] = {{"pole", (-d.inv()).str()},
                         {"A", pf.A},
                         {"B", pf.B},
                         {"rms_misfit", pf.rms_misfit},
                         {"points", pf.used},
                         {"note", "misfit against A/(sigma - pole) + B only; no claim about the singularity type"}};
  }
  if (r.error) r.out["partial"] = true;
  return r;
}

CommandResult probe_threshold(const BivariateFunction& f, const ProbeOptions& o) {
  CommandResult r;
  Rational expected = expected_threshold(f);
  double e = expected.to_double();
  double lo = o.sigma_min.value_or(e - 0.25), hi = o.sigma_max.value_or(std::min(e + 0.25, -0.02));
  ThresholdResult t = convergence_threshold(f, bump_of(o), lo, hi, threshold_config(), o.tol);
  r.csv = quadrature_csv_header();
  for (std::size_t i = 0; i < t.trail.size(); ++i) r.csv += quadrature_csv_row(t.trail[i].first, t.results[i]);
  r.out = {{"sigma_star", t.sigma_star},
           {"width", t.width},
           {"expected", expected.str()},
           {"pass", std::fabs(t.sigma_star - e) <= 0.05},
           {"quadratures", t.quadratures}};
  return r;
}

// f(t, 0) as the one-variable sampler
CommandResult probe_vdc(const BivariateFunction& f, const ProbeOptions& o) {
  CommandResult r;
  int k = 0;
  if (o.k) {
    k = *o.k;
  } else {
    for (auto& [e, c] : f.poly.terms())
      if (e.second == 0 && e.first > 0 && (k == 0 || e.first < k)) k = e.first;
    if (k == 0) fail(ErrorCode::InvalidArgument, "f(t,0) has no positive power; pass --k");
  }
  if (k < 1) fail(ErrorCode::InvalidArgument, "--k must be positive");
  BivariatePolynomial g;
  for (auto& [e, c] : f.poly.terms())
    if (e.second == 0) g.add_term(e.first, 0, c);
  for (int i = 0; i < k; ++i) g = g.dx();
  double eta = 0;
  if (o.eta) {
    eta = *o.eta;
  } else {
    BivariateFunction gd(g);
    double mn = INFINITY;
    for (int i = 0; i <= 256; ++i) mn = std::min(mn, std::fabs(gd.eval_poly(i / 256.0, 0)));
    eta = 0.95 * mn;
  }
  if (!(eta > 0)) fail(ErrorCode::InvalidArgument, "the k-th derivative of f(t,0) vanishes on [0,1]; pass --k");
  double s0 = -0.2 / k;
  std::vector<double> sig = grid(o.sigma_min.value_or(s0), o.sigma_max.value_or(s0), o.steps ? o.steps : 1);
  auto sampler = [&f](double t) { return f.eval(t, 0.0); };
  r.csv = "sigma,i,length,r\n";
  json res = json::array();
  for (double s : sig) {
    auto rows = vdc_scaling(sampler, k, eta, s, o.levels);
    for (auto& row : rows) r.csv += num(s) + "," + std::to_string(row.i) + "," + num(row.length) + "," + num(row.r) + "\n";
    res.push_back({{"sigma", s}, {"spread", vdc_spread(rows)}, {"r0", rows.front().r}});
  }
  r.out = {{"mode", "vdc"}, {"k", k}, {"eta", eta}, {"levels", o.levels}, {"results", res}};
  return r;
}

CommandResult probe_decomposition(const BivariateFunction& f, const ProbeOptions& o) {
  CommandResult r;
  if (f.poly.size() != 1 || !f.poly.terms().begin()->second.is_one())
    fail(ErrorCode::InvalidArgument, "decomposition mode needs the polynomial part x^a y^m with coefficient 1");
  auto [a, m] = f.poly.terms().begin()->first;
  std::vector<double> sig = grid(o.sigma_min.value_or(-0.55), o.sigma_max.value_or(-0.05), o.steps ? o.steps : 6);
  DecompositionReport rep = decomposition_check(a, o.b, m, f.flats, o.p, sig);
  r.csv = "sigma,region,value,error,converged,checked\n";
  for (auto& row : rep.rows) {
    auto line = [&](const char* name, const QuadratureResult& q, bool checked) {
      r.csv += num(row.sigma) + "," + name + "," + num(q.value) + "," + num(q.error) + "," +
               (q.converged ? "true" : "false") + "," + (checked ? "true" : "false") + "\n";
    };
    line("I1", row.I1, false);
    line("I2", row.I2, row.I2_checked);
    line("J", row.J, row.J_checked);
  }
  r.out = {{"mode", "decomposition"},
           {"a", a},
           {"b", o.b},
           {"m", m},
           {"p", o.p},
           {"r_p", rep.r_p},
           {"c", rep.c},
           {"min_G1", rep.min_G1},
           {"mu", rep.mu},
           {"min_dmG2", rep.min_dmG2},
           {"I2_edge", rep.I2_edge},
           {"I2_floor", rep.I2_floor},
           {"J_floor", rep.J_floor},
           {"pass", true},
           {"notes", rep.notes}};
  return r;
}

}  // namespace

CommandResult cmd_invariants(const BivariateFunction& f) {
  CommandResult r;
  r.out = invariants_json(f);
  return r;
}

CommandResult cmd_resolve(const BivariateFunction& f, int trunc) {
  require_nonflat(f);
  CommandResult r;
  ResolutionTree tree = almost_resolve(f, trunc);
  std::vector<VerifyReport> checks;
  bool ok = true;
  auto run = [&](PointKind kind, std::size_t n, const char* label) {
    for (std::size_t i = 0; i < n; ++i) {
      try {
        checks.push_back(verify_total_transform(f, tree, kind, static_cast<int>(i)));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::VerificationFailed) throw;
        VerifyReport v;
        v.point = std::string(label) + std::to_string(i);
        v.message = e.what();
        checks.push_back(v);
        ok = false;
      }
    }
  };
  run(PointKind::Distinguished, tree.points.size(), "P");
  run(PointKind::Crossing, tree.crossings.size(), "C");
  std::string why;
  bool graph = divisor_graph_ok(tree, &why);
  r.out = tree_json(tree, checks, graph, why);
  r.dot = tree_to_dot(tree);
  if (!ok || !graph) {
    r.error = ErrorCode::VerificationFailed;
    r.message = ok ? "divisor graph check failed: " + why : "total transform check failed";
  }
  return r;
}

CommandResult cmd_poles(const BivariateFunction& f, int trunc) {
  require_nonflat(f);
  CommandResult r;
  r.out = pole_report_json(extendibility_report(f, trunc));
  return r;
}

CommandResult cmd_probe(const BivariateFunction& f, const ProbeOptions& opt) {
  if (opt.mode == "decomposition") return probe_decomposition(f, opt);
  if (opt.mode == "vdc") return probe_vdc(f, opt);
  if (opt.mode == "quadrature" || opt.mode == "threshold") require_nonflat(f);
  if (opt.mode == "quadrature") return probe_quadrature(f, opt);
  if (opt.mode == "threshold") return probe_threshold(f, opt);
  fail(ErrorCode::InvalidArgument, "unknown probe mode '" + opt.mode + "'");
}

CommandResult cmd_vdc(const BivariateFunction& f, const ProbeOptions& opt) { return probe_vdc(f, opt); }

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::FlatInput:
      return 2;
    case ErrorCode::VerificationFailed:
    case ErrorCode::AssertionFailed:
      return 3;
    case ErrorCode::PrecisionExhausted:
    case ErrorCode::UnresolvedRealness:
    case ErrorCode::TruncationUnderflow:
      return 4;
    case ErrorCode::BudgetExceeded:
    case ErrorCode::IterationLimit:
      return 5;
    default:
      return 1;
  }
}

}  // namespace pcz
