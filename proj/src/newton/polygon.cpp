#include <algorithm>
#include <map>
#include <numeric>

#include "pcz/errors.hpp"
#include "pcz/newton.hpp"

namespace pcz {

const char* face_kind_name(FaceKind k) {
  switch (k) {
    case FaceKind::Vertex: return "vertex";
    case FaceKind::CompactEdge: return "compact_edge";
    case FaceKind::UnboundedEdge: return "unbounded_edge";
  }
  return "?";
}

NewtonPolygon newton_polygon(const BivariatePolynomial& f) {
  if (f.is_zero()) fail(ErrorCode::FlatInput, "polynomial part is zero; the Newton polygon is empty");
  std::map<int, int> lowest;  // x -> min y
  for (auto& [e, c] : f.terms()) {
    auto it = lowest.find(e.first);
    if (it == lowest.end() || e.second < it->second) lowest[e.first] = e.second;
  }
  std::vector<Pt> pts;
  int miny = 1 << 30;
  for (auto& [x, y] : lowest) {
    // Only points strictly lower than everything to their left can be vertices.
    if (y < miny) {
      pts.push_back({x, y});
      miny = y;
    }
  }
  std::vector<Pt> hull;
  auto cross = [](const Pt& o, const Pt& a, const Pt& b) {
    return static_cast<long>(a.x - o.x) * (b.y - o.y) - static_cast<long>(a.y - o.y) * (b.x - o.x);
  };
  for (auto& p : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  NewtonPolygon np;
  np.vertices = hull;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    Edge e;
    e.a = hull[i];
    e.b = hull[i + 1];
    int dy = e.a.y - e.b.y, dx = e.b.x - e.a.x;
    int g = std::gcd(dy, dx);
    e.l1 = dy / g;
    e.l2 = dx / g;
    np.edges.push_back(e);
  }
  return np;
}

NewtonPolygon newton_polygon(const BivariateFunction& f) { return newton_polygon(f.poly); }

Rational newton_distance(const NewtonPolygon& np) {
  const Pt& v0 = np.vertices.front();
  const Pt& vk = np.vertices.back();
  if (v0.x >= v0.y) return Rational(v0.x);
  if (vk.y >= vk.x) return Rational(vk.y);
  for (auto& v : np.vertices)
    if (v.x == v.y) return Rational(v.x);
  for (auto& e : np.edges)
    if (e.a.x < e.a.y && e.b.x > e.b.y) return Rational(e.level(), e.l1 + e.l2);
  fail(ErrorCode::AssertionFailed, "diagonal misses the Newton polygon");
}

FaceRef principal_face(const NewtonPolygon& np, const Rational& d) {
  const Pt& v0 = np.vertices.front();
  const Pt& vk = np.vertices.back();
  for (std::size_t i = 0; i < np.vertices.size(); ++i) {
    const Pt& v = np.vertices[i];
    if (Rational(v.x) == d && Rational(v.y) == d) return {FaceKind::Vertex, static_cast<int>(i)};
  }
  if (Rational(v0.x) == d && Rational(v0.y) < d) return {FaceKind::UnboundedEdge, 0};
  if (Rational(vk.y) == d && Rational(vk.x) < d) return {FaceKind::UnboundedEdge, 1};
  for (std::size_t i = 0; i < np.edges.size(); ++i) {
    const Edge& e = np.edges[i];
    if (Rational(e.a.x) < d && d < Rational(e.b.x) && Rational(e.level()) == d * Rational(e.l1 + e.l2))
      return {FaceKind::CompactEdge, static_cast<int>(i)};
  }
  fail(ErrorCode::AssertionFailed, "no face contains (d,d)");
}

std::vector<Pt> face_vertices(const NewtonPolygon& np, const FaceRef& face) {
  switch (face.kind) {
    case FaceKind::Vertex: return {np.vertices[face.index]};
    case FaceKind::CompactEdge: return {np.edges[face.index].a, np.edges[face.index].b};
    case FaceKind::UnboundedEdge: return {face.index == 0 ? np.vertices.front() : np.vertices.back()};
  }
  return {};
}

BivariatePolynomial kappa_part(const BivariatePolynomial& f, const NewtonPolygon& np, const FaceRef& face) {
  BivariatePolynomial r;
  if (face.kind == FaceKind::UnboundedEdge) fail(ErrorCode::NonCompactFace, "kappa part of an unbounded face");
  if (face.kind == FaceKind::Vertex) {
    const Pt& v = np.vertices.at(face.index);
    r.add_term(v.x, v.y, f.coeff(v.x, v.y));
    return r;
  }
  const Edge& e = np.edges.at(face.index);
  for (auto& [ex, c] : f.terms())
    if (static_cast<long>(e.l1) * ex.first + static_cast<long>(e.l2) * ex.second == e.level()) r.add_term(ex.first, ex.second, c);
  return r;
}

namespace {

// f_k(s, y) / y^(b.y) as a polynomial in y, for s = +1 or -1.
QPoly edge_slice(const BivariatePolynomial& fk, const Edge& e, int s) {
  std::vector<Rational> c(e.a.y - e.b.y + 1, Rational(0));
  for (auto& [ex, v] : fk.terms()) {
    Rational t = v;
    if (s < 0 && ex.first % 2 == 1) t = -t;
    c[ex.second - e.b.y] += t;
  }
  return QPoly(c);
}

// Largest multiplicity of a real root of q (0 if none).
int max_real_root_mult(const QPoly& q) {
  int best = 0;
  for (auto& [g, k] : qpoly_squarefree(q))
    if (k > best && qpoly_count_real_roots(g, nullptr, nullptr) > 0) best = k;
  return best;
}

}  // namespace

int mu0_quasi_homogeneous(const BivariatePolynomial& fk, const Edge& e) {
  int m = std::max(e.a.x, e.b.y);
  for (int s : {1, -1}) m = std::max(m, max_real_root_mult(edge_slice(fk, e, s)));
  return m;
}

DegeneracyReport degeneracy_report(const BivariateFunction& f) {
  NewtonPolygon np = newton_polygon(f);
  DegeneracyReport r;
  r.convenient = np.convenient();
  for (std::size_t i = 0; i < np.edges.size(); ++i) {
    const Edge& e = np.edges[i];
    BivariatePolynomial fk = kappa_part(f.poly, np, {FaceKind::CompactEdge, static_cast<int>(i)});
    for (int s : {1, -1})
      if (max_real_root_mult(edge_slice(fk, e, s)) >= 2) r.r_nondegenerate = false;
  }
  return r;
}

AdaptednessReport is_adapted(const BivariateFunction& f) {
  NewtonPolygon np = newton_polygon(f);
  AdaptednessReport r;
  r.d = newton_distance(np);
  r.principal_face = principal_face(np, r.d);
  if (r.principal_face.kind == FaceKind::Vertex) {
    r.clause = "vertex";
    return r;
  }
  if (r.principal_face.kind == FaceKind::UnboundedEdge) {
    r.clause = "unbounded-edge";
    return r;
  }
  const Edge& e = np.edges[r.principal_face.index];
  BivariatePolynomial fk = kappa_part(f.poly, np, r.principal_face);
  int mu = mu0_quasi_homogeneous(fk, e);
  if (Rational(mu) <= r.d) {
    r.clause = "edge-mu0";
    return r;
  }
  // A real root of multiplicity above d is unique and hence rational; it
  // lives on an edge with integer slope in one of the two orientations.
  r.adapted = false;
  r.clause = "edge-root";
  bool swap = e.l1 > e.l2;
  Edge ee = e;
  BivariatePolynomial g = fk;
  if (swap) {
    g = fk.swapped();
    ee.a = {e.b.y, e.b.x};
    ee.b = {e.a.y, e.a.x};
    std::swap(ee.l1, ee.l2);
  }
  if (ee.l1 != 1) fail(ErrorCode::AssertionFailed, "non-adapted edge without integer slope");
  QPoly h = edge_slice(g, ee, 1);
  for (auto& [q, k] : qpoly_squarefree(h)) {
    if (Rational(k) <= r.d || qpoly_count_real_roots(q, nullptr, nullptr) == 0) continue;
    auto roots = qpoly_rational_roots(q);
    if (q.degree() != 1 || roots.size() != 1) fail(ErrorCode::AssertionFailed, "witness root is not rational");
    if (k > r.mult) {
      r.mult = k;
      r.witness = roots[0];
    }
  }
  if (r.mult == 0) fail(ErrorCode::AssertionFailed, "no witness root for a non-adapted edge");
  r.ratio = ee.l2;
  r.swapped = swap;
  return r;
}

}  // namespace pcz
