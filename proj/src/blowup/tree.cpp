#include <algorithm>
#include <queue>
#include <sstream>

#include "internal.hpp"
#include "pcz/errors.hpp"

namespace pcz {

const char* chart_kind_name(ChartKind k) {
  switch (k) {
    case ChartKind::Base: return "base";
    case ChartKind::V0: return "V0";
    case ChartKind::V1: return "V1";
  }
  return "?";
}

namespace detail {

std::vector<PointGroup> point_groups(const ResolutionTree& tree) {
  std::vector<PointGroup> groups;
  for (const ResBranch& b : tree.branches) {
    if (b.detached) continue;
    if (b.X.len() == 0 || b.Y.len() == 0) fail(ErrorCode::TruncationUnderflow, "branch " + b.name + " exhausted its series");
    bool placed = false;
    for (auto& g : groups) {
      if (g.chart != b.chart) continue;
      if (same_coeff(g.pa, b.X[0]) && same_coeff(g.pb, b.Y[0])) {
        g.branches.push_back(b.id);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({b.chart, b.X[0], b.Y[0], {b.id}});
  }
  std::sort(groups.begin(), groups.end(), [](const PointGroup& x, const PointGroup& y) {
    if (x.chart != y.chart) return x.chart < y.chart;
    return x.branches.front() < y.branches.front();
  });
  return groups;
}

LocalDivisors local_divisors(const ResolutionTree& tree, int chart, const Coeff& pa, const Coeff& pb) {
  const Chart& c = tree.charts.at(chart);
  LocalDivisors d;
  if (c.xdiv >= 0 && pa.is_zero()) d.on_p = c.xdiv;
  if (c.ydiv >= 0 && pb.is_zero()) d.on_q = c.ydiv;
  return d;
}

}  // namespace detail

namespace {

void unlink(ResolutionTree& t, int a, int b) {
  auto drop = [](std::vector<int>& v, int x) { v.erase(std::remove(v.begin(), v.end(), x), v.end()); };
  drop(t.divisors[a].meets, b);
  drop(t.divisors[b].meets, a);
}

void link(ResolutionTree& t, int a, int b) {
  t.divisors[a].meets.push_back(b);
  t.divisors[b].meets.push_back(a);
}

}  // namespace

int blow_up_at(ResolutionTree& tree, int chart, const Coeff& a0, const Coeff& b0) {
  using namespace detail;
  if (chart < 0 || chart >= static_cast<int>(tree.charts.size())) fail(ErrorCode::InvalidArgument, "no such chart");
  if (!imag_is_zero(a0) || !imag_is_zero(b0)) fail(ErrorCode::NonRealCenter, "blowup center is not real");
  Coeff a = a0.is_zero() ? Coeff() : real_part(a0);
  Coeff b = b0.is_zero() ? Coeff() : real_part(b0);
  Chart parent = tree.charts[chart];
  LocalDivisors through = local_divisors(tree, chart, a, b);

  int n = static_cast<int>(tree.divisors.size());
  Divisor E;
  E.id = n;
  E.parent_chart = chart;
  E.k = 1;
  for (int d : {through.on_p, through.on_q})
    if (d >= 0) {
      E.k += tree.divisors[d].k;
      E.N += tree.divisors[d].N;
      E.met_at_creation.push_back(d);
    }

  Chart v0, v1;
  v0.id = static_cast<int>(tree.charts.size());
  v1.id = v0.id + 1;
  v0.parent = v1.parent = chart;
  v0.kind = ChartKind::V0;
  v1.kind = ChartKind::V1;
  v0.ca = v1.ca = a;
  v0.cb = v1.cb = b;
  v0.divisor = v1.divisor = n;
  v0.xdiv = n;
  v0.ydiv = through.on_q;
  v1.ydiv = n;
  v1.xdiv = through.on_p;
  E.charts = {v0.id, v1.id};

  std::vector<int> at_center;
  for (ResBranch& br : tree.branches) {
    if (br.chart != chart || br.detached) continue;
    if (!same_coeff(br.X[0], a) || !same_coeff(br.Y[0], b)) continue;
    at_center.push_back(br.id);
  }
  for (int id : at_center) {
    ResBranch& br = tree.branches[id];
    Series dx = centered(br.X, a), dy = centered(br.Y, b);
    int ox = dx.valuation(), oy = dy.valuation();
    if (ox >= dx.len() && oy >= dy.len()) fail(ErrorCode::TruncationUnderflow, "branch " + br.name + " vanishes to truncation order");
    E.N += br.mult * std::min(ox, oy);
    if (ox <= oy) {
      br.Y = dy.div(dx);
      br.X = dx.truncated(br.Y.len());
      br.chart = v0.id;
    } else {
      br.X = dx.div(dy);
      br.Y = dy.truncated(br.X.len());
      br.chart = v1.id;
    }
    br.meetings += 1;
    br.flat_offset -= 1;
    if (!br.real && (!imag_is_zero(br.X[0]) || !imag_is_zero(br.Y[0]))) br.detached = true;
  }

  tree.divisors.push_back(E);
  tree.charts.push_back(v0);
  tree.charts.push_back(v1);
  if (through.on_p >= 0 && through.on_q >= 0) {
    unlink(tree, through.on_p, through.on_q);
    auto& cr = tree.crossings;
    cr.erase(std::remove_if(cr.begin(), cr.end(), [&](const CrossingPoint& c) { return c.chart == chart; }), cr.end());
  }
  if (through.on_p >= 0) {
    link(tree, n, through.on_p);
    tree.divisors[through.on_p].charts.push_back(v1.id);
    tree.crossings.push_back({v1.id, through.on_p, n});
  }
  if (through.on_q >= 0) {
    link(tree, n, through.on_q);
    tree.divisors[through.on_q].charts.push_back(v0.id);
    tree.crossings.push_back({v0.id, n, through.on_q});
  }
  return n;
}

bool divisor_graph_ok(const ResolutionTree& tree, std::string* why) {
  auto bad = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  int n = static_cast<int>(tree.divisors.size());
  for (int i = 0; i < n; ++i) {
    const Divisor& d = tree.divisors[i];
    const auto& met = d.met_at_creation;
    if (i == 0 && !met.empty()) return bad("E0 meets an earlier divisor");
    if (i > 0) {
      if (met.empty() || met.size() > 2) return bad("E" + std::to_string(i) + " meets " + std::to_string(met.size()) + " earlier divisors");
      int pred = tree.charts[d.parent_chart].divisor;
      if (std::find(met.begin(), met.end(), pred) == met.end())
        return bad("E" + std::to_string(i) + " misses the divisor its center lies on");
    }
    for (int j : d.meets) {
      const auto& o = tree.divisors.at(j).meets;
      if (std::count(o.begin(), o.end(), i) != 1) return bad("intersection graph is not symmetric");
    }
  }
  std::size_t edges = 0;
  for (auto& d : tree.divisors) edges += d.meets.size();
  edges /= 2;
  if (n > 0 && edges != static_cast<std::size_t>(n - 1)) return bad("intersection graph has " + std::to_string(edges) + " edges for " + std::to_string(n) + " divisors");
  if (edges != tree.crossings.size()) return bad("crossing points disagree with the intersection graph");
  std::vector<int> seen_chart;
  for (auto& c : tree.crossings) {
    if (std::find(seen_chart.begin(), seen_chart.end(), c.chart) != seen_chart.end()) return bad("two crossings at one point");
    seen_chart.push_back(c.chart);
  }
  if (n > 0) {
    std::vector<bool> vis(n, false);
    std::queue<int> q;
    q.push(0);
    vis[0] = true;
    int cnt = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      ++cnt;
      for (int v : tree.divisors[u].meets)
        if (!vis[v]) {
          vis[v] = true;
          q.push(v);
        }
    }
    if (cnt != n) return bad("intersection graph is disconnected");
  }
  return true;
}

std::string tree_to_dot(const ResolutionTree& tree) {
  std::ostringstream os;
  os << "graph divisors {\n";
  for (auto& d : tree.divisors) os << "  E" << d.id << " [label=\"E" << d.id << "\\nN=" << d.N << " k=" << d.k << "\"];\n";
  for (auto& d : tree.divisors)
    for (int j : d.meets)
      if (d.id < j) os << "  E" << d.id << " -- E" << j << ";\n";
  for (std::size_t i = 0; i < tree.points.size(); ++i) {
    const auto& p = tree.points[i];
    os << "  P" << i << " [shape=box,label=\"" << tree.branches[p.branch].name << "\\na=" << p.a << " m=" << p.m << " M=" << p.M << "\"];\n";
    if (p.divisor >= 0) os << "  P" << i << " -- E" << p.divisor << " [style=dashed];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace pcz
