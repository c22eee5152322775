#pragma once

#include <string>
#include <vector>

#include "pcz/coeff.hpp"
#include "pcz/function.hpp"

namespace pcz {

struct Pt {
  int x = 0;  // power of x
  int y = 0;  // power of y
  friend bool operator==(const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }
};

// Compact edge from a to b with a.x < b.x and a.y > b.y. The primitive
// normal (l1, l2) satisfies l1 * x + l2 * y = const along the edge, so roots
// on it behave like y ~ c x^(l2/l1).
struct Edge {
  Pt a, b;
  int l1 = 1, l2 = 1;
  long level() const { return static_cast<long>(l1) * a.x + static_cast<long>(l2) * a.y; }
};

struct NewtonPolygon {
  std::vector<Pt> vertices;  // increasing x, decreasing y
  std::vector<Edge> edges;   // edges[i] joins vertices[i] and vertices[i+1]
  // The two unbounded rays always exist: vertical above vertices.front()
  // and horizontal to the right of vertices.back().
  bool convenient() const { return vertices.front().x == 0 && vertices.back().y == 0; }
};

enum class FaceKind { Vertex, CompactEdge, UnboundedEdge };

struct FaceRef {
  FaceKind kind = FaceKind::Vertex;
  int index = 0;  // vertex index, edge index, or 0 = vertical ray / 1 = horizontal ray
  friend bool operator==(const FaceRef& a, const FaceRef& b) { return a.kind == b.kind && a.index == b.index; }
};

const char* face_kind_name(FaceKind k);

NewtonPolygon newton_polygon(const BivariatePolynomial& f);
NewtonPolygon newton_polygon(const BivariateFunction& f);
Rational newton_distance(const NewtonPolygon& np);
FaceRef principal_face(const NewtonPolygon& np, const Rational& d);
BivariatePolynomial kappa_part(const BivariatePolynomial& f, const NewtonPolygon& np, const FaceRef& face);
// Lattice points of a face (for serialization); rays report their base vertex.
std::vector<Pt> face_vertices(const NewtonPolygon& np, const FaceRef& face);

struct DegeneracyReport {
  bool convenient = false;
  bool r_nondegenerate = true;
};

DegeneracyReport degeneracy_report(const BivariateFunction& f);

struct AdaptednessReport {
  FaceRef principal_face;
  Rational d;
  bool adapted = true;
  // "vertex", "unbounded-edge", "edge-mu0" (clause on mu0 of the face part),
  // or "edge-root" when not adapted.
  std::string clause;
  // Witness when not adapted: a real root c of multiplicity mult on the
  // principal edge; the branch is y = c x^ratio, or x = c y^ratio if swapped.
  Rational witness;
  int ratio = 0;
  int mult = 0;
  bool swapped = false;
};

AdaptednessReport is_adapted(const BivariateFunction& f);

struct HeightResult {
  Rational delta0;
  int iterations = 0;
  BivariatePolynomial adapted_poly;  // f in the final (adapted) coordinates
};

HeightResult height_delta0_full(const BivariateFunction& f, int max_iterations = 32);
Rational height_delta0(const BivariateFunction& f, int max_iterations = 32);

// Exact mu0 of a quasi-homogeneous polynomial supported on one compact edge.
int mu0_quasi_homogeneous(const BivariatePolynomial& fk, const Edge& e);

}  // namespace pcz
