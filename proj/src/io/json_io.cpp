#include "pcz/json_io.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "pcz/errors.hpp"
#include "pcz/puiseux.hpp"

namespace pcz {

namespace {

Rational coeff_of(const json& v, const std::string& where) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  fail(ErrorCode::ParseError, where + ": coefficient must be a \"num/den\" string or an integer");
}

int int_field(const json& obj, const char* key, const std::string& where, int lo, bool required = true, int dflt = 0) {
  if (!obj.contains(key)) {
    if (required) fail(ErrorCode::ParseError, where + ": missing '" + key + "'");
    return dflt;
  }
  const json& v = obj.at(key);
  if (!v.is_number_integer()) fail(ErrorCode::ParseError, where + ": '" + key + "' must be an integer");
  long x = v.get<long>();
  if (x < lo || x > 1000000) fail(ErrorCode::ParseError, where + ": '" + key + "' out of range");
  return static_cast<int>(x);
}

json exps(int a, int b) { return json::array({a, b}); }

}  // namespace

BivariateFunction parse_function_spec(const json& j) {
  if (!j.is_object()) fail(ErrorCode::ParseError, "function spec must be a JSON object");
  BivariateFunction f;
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail(ErrorCode::ParseError, "'name' must be a string");
    f.name = j["name"].get<std::string>();
  }
  if (j.contains("polynomial")) {
    const json& terms = j["polynomial"];
    if (!terms.is_array()) fail(ErrorCode::ParseError, "'polynomial' must be a list");
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      std::string where = "polynomial[" + std::to_string(i) + "]";
      const json& t = terms[i];
      if (!t.is_object()) fail(ErrorCode::ParseError, where + " must be an object");
      int jj = int_field(t, "j", where, 0), kk = int_field(t, "k", where, 0);
      if (!t.contains("c")) fail(ErrorCode::ParseError, where + ": missing 'c'");
      if (!seen.insert({jj, kk}).second)
        fail(ErrorCode::ParseError, where + ": duplicate monomial (" + std::to_string(jj) + "," + std::to_string(kk) + ")");
      f.poly.add_term(jj, kk, coeff_of(t["c"], where));
    }
  }
  if (j.contains("flat_terms")) {
    const json& terms = j["flat_terms"];
    if (!terms.is_array()) fail(ErrorCode::ParseError, "'flat_terms' must be a list");
    for (std::size_t i = 0; i < terms.size(); ++i) {
      std::string where = "flat_terms[" + std::to_string(i) + "]";
      const json& t = terms[i];
      if (!t.is_object()) fail(ErrorCode::ParseError, where + " must be an object");
      if (!t.contains("c")) fail(ErrorCode::ParseError, where + ": missing 'c'");
      FlatTerm ft;
      ft.c = coeff_of(t["c"], where);
      ft.x_power = int_field(t, "x_power", where, 0);
      ft.y_power = int_field(t, "y_power", where, 0);
      ft.p = int_field(t, "p", where, 1);
      ft.w = int_field(t, "w", where, 1, false, 1);
      if (!ft.c.is_zero()) f.flats.push_back(ft);
    }
  }
  return f;
}

BivariateFunction parse_function_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return parse_function_spec(j);
}

json function_spec_json(const BivariateFunction& f) {
  json j;
  if (!f.name.empty()) j["name"] = f.name;
  j["polynomial"] = json::array();
  for (auto& [e, c] : f.poly.terms()) j["polynomial"].push_back({{"j", e.first}, {"k", e.second}, {"c", c.str()}});
  j["flat_terms"] = json::array();
  for (auto& t : f.flats)
    j["flat_terms"].push_back(
        {{"c", t.c.str()}, {"x_power", t.x_power}, {"y_power", t.y_power}, {"p", t.p}, {"w", t.w}});
  return j;
}

json newton_polygon_json(const NewtonPolygon& np) {
  json j;
  j["vertices"] = json::array();
  for (auto& v : np.vertices) j["vertices"].push_back(exps(v.x, v.y));
  j["edges"] = json::array();
  for (auto& e : np.edges)
    j["edges"].push_back({{"from", exps(e.a.x, e.a.y)}, {"to", exps(e.b.x, e.b.y)}, {"normal", exps(e.l1, e.l2)}});
  return j;
}

json invariants_json(const BivariateFunction& f) {
  if (f.poly.is_zero()) fail(ErrorCode::FlatInput, "polynomial part is zero");
  json j;
  if (!f.name.empty()) j["name"] = f.name;
  NewtonPolygon np = newton_polygon(f);
  j["newton_polygon"] = newton_polygon_json(np);
  j["d"] = newton_distance(np).str();
  j["delta0"] = height_delta0(f).str();
  Mu0Result mu = mu0_range(f);
  if (mu.resolved())
    j["mu0"] = mu.value();
  else
    j["mu0"] = {{"lower", mu.lower}, {"upper", mu.upper}};
  DegeneracyReport dg = degeneracy_report(f);
  j["convenient"] = dg.convenient;
  j["nondegenerate"] = dg.r_nondegenerate;
  AdaptednessReport ad = is_adapted(f);
  j["adapted"] = ad.adapted;
  j["adapted_clause"] = ad.clause;
  return j;
}

json progression_json(const ArithmeticProgression& p) {
  return {{"offset", p.offset.str()}, {"step", p.step.str()}, {"source", p.source}};
}

json pole_report_json(const PoleReport& r) {
  json j;
  j["h0"] = ext_str(r.h0);
  j["m0_lower"] = ext_str(r.m0_lower);
  j["delta0"] = r.delta0.str();
  if (r.mu0_lower == r.mu0_upper)
    j["mu0"] = r.mu0_lower;
  else
    j["mu0"] = {{"lower", r.mu0_lower}, {"upper", r.mu0_upper}};
  j["progressions"] = json::array();
  for (auto& p : r.progressions) j["progressions"].push_back(progression_json(p));
  j["in_region"] = json::array();
  for (auto& s : r.in_region) j["in_region"].push_back(s.str());
  j["flags"] = r.flags;
  return j;
}

json tree_json(const ResolutionTree& t, const std::vector<VerifyReport>& checks, bool graph_ok,
               const std::string& graph_why) {
  json j;
  j["trunc"] = t.T;
  j["m0"] = t.m0;
  j["precision"] = t.prec;
  j["blowups"] = t.blowups();
  j["charts"] = json::array();
  for (auto& c : t.charts)
    j["charts"].push_back({{"id", c.id},
                           {"parent", c.parent},
                           {"kind", chart_kind_name(c.kind)},
                           {"center", json::array({c.ca.str(), c.cb.str()})},
                           {"divisor", c.divisor},
                           {"xdiv", c.xdiv},
                           {"ydiv", c.ydiv}});
  j["divisors"] = json::array();
  for (auto& d : t.divisors)
    j["divisors"].push_back({{"id", d.id},
                             {"N", d.N},
                             {"k", d.k},
                             {"chart", d.parent_chart},
                             {"met_at_creation", d.met_at_creation},
                             {"meets", d.meets}});
  j["branches"] = json::array();
  for (auto& b : t.branches)
    j["branches"].push_back({{"id", b.id},
                             {"name", b.name},
                             {"mult", b.mult},
                             {"real", b.real},
                             {"detached", b.detached},
                             {"chart", b.chart},
                             {"meetings", b.meetings}});
  j["distinguished_points"] = json::array();
  for (auto& p : t.points) {
    json e = json::array();
    for (auto& s : p.eps) e.push_back(s.str());
    j["distinguished_points"].push_back({{"branch", p.branch},
                                         {"chart", p.chart},
                                         {"center", json::array({p.pa.str(), p.pb.str()})},
                                         {"divisor", p.divisor},
                                         {"partner", p.partner},
                                         {"swapped", p.swapped},
                                         {"a", p.a},
                                         {"m", p.m},
                                         {"M", p.M},
                                         {"eps", e}});
  }
  j["crossings"] = json::array();
  for (auto& c : t.crossings) j["crossings"].push_back({{"chart", c.chart}, {"divisors", exps(c.dx, c.dy)}});
  j["verification"] = json::array();
  bool all = true;
  for (auto& v : checks) {
    all = all && v.ok && v.jacobian_ok;
    j["verification"].push_back({{"point", v.point},
                                 {"ok", v.ok},
                                 {"jacobian_ok", v.jacobian_ok},
                                 {"max_residual", v.max_residual},
                                 {"order", v.order},
                                 {"message", v.message}});
  }
  j["verified"] = all;
  j["divisor_graph_ok"] = graph_ok;
  if (!graph_ok) j["divisor_graph_issue"] = graph_why;
  j["notes"] = t.notes;
  return j;
}

json quadrature_json(const QuadratureResult& q) {
  json j = {{"value", q.value}, {"error", q.error}, {"levels", q.levels}, {"converged", q.converged}, {"evals", q.evals}};
  if (!std::isfinite(q.value)) j["value"] = nullptr;
  if (!std::isfinite(q.error)) j["error"] = "inf";
  return j;
}

std::string quadrature_csv_header() { return "sigma,value,error,converged\n"; }

std::string quadrature_csv_row(double sigma, const QuadratureResult& q) {
  std::ostringstream os;
  os.precision(12);
  os << sigma << "," << q.value << "," << q.error << "," << (q.converged ? "true" : "false") << "\n";
  return os.str();
}

}  // namespace pcz
