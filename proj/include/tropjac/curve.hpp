#pragma once

// The tropical curve dual to a Newton complex: one vertex per 2-cell, one
// finite edge per interior 1-cell, one ray per boundary 1-cell.

#include <compare>
#include <string>
#include <vector>

#include "tropjac/numeric.hpp"
#include "tropjac/polynomial.hpp"

namespace tropjac {

struct CurveVertex {
  Point2 position;
  int cell = -1;  // dual 2-cell

  friend bool operator==(const CurveVertex&, const CurveVertex&) = default;
};

/// Finite edge E_i. `v` is the designated base vertex V_i; `direction` is the
/// primitive vector pointing from v to w, and position(w) - position(v) equals
/// length * direction.
struct CurveEdge {
  int v = -1;
  int w = -1;
  IntVec2 direction;
  int weight = 1;
  Rat length;
  int dual = -1;  // interior 1-cell

  friend bool operator==(const CurveEdge&, const CurveEdge&) = default;
};

struct CurveRay {
  int vertex = -1;
  IntVec2 direction;
  int weight = 1;
  int dual = -1;  // boundary 1-cell

  friend bool operator==(const CurveRay&, const CurveRay&) = default;
};

struct TropicalCurve {
  NewtonPolygon polygon;
  std::vector<CurveVertex> vertices;
  std::vector<CurveEdge> edges;
  std::vector<CurveRay> rays;

  int num_edges() const { return static_cast<int>(edges.size()); }
  int num_vertices() const { return static_cast<int>(vertices.size()); }

  friend bool operator==(const TropicalCurve&, const TropicalCurve&) = default;
};

/// Corner locus of `f`. Throws DegeneratePolygon.
TropicalCurve build_curve(const TropicalPolynomial& f);
/// Same, reusing an already computed complex.
TropicalCurve build_curve(const NewtonComplex& ncx);

struct BalancingReport {
  bool balanced = true;
  std::vector<int> unbalanced_vertices;

  explicit operator bool() const { return balanced; }
};

BalancingReport check_balancing(const TropicalCurve& curve);

/// All edge and ray weights equal 1.
bool is_reduced(const TropicalCurve& curve);

/// Position on a curve by combinatorial cell plus exact lattice offset.
struct CurvePoint {
  enum class Kind { Vertex, OnEdge, OnRay };

  Kind kind = Kind::Vertex;
  int id = -1;
  Rat offset;  // lattice length from V_i (edges) or from the ray's vertex

  static CurvePoint vertex(int v) { return {Kind::Vertex, v, Rat(0)}; }

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
  friend std::strong_ordering operator<=>(const CurvePoint& p, const CurvePoint& q) {
    if (auto c = p.kind <=> q.kind; c != 0) return c;
    if (auto c = p.id <=> q.id; c != 0) return c;
    return p.offset <=> q.offset;
  }
};

std::string describe(const CurvePoint& p);

/// Builds a normalized point: endpoint offsets collapse to Vertex. Throws
/// NotOnCurve for ids or offsets out of range.
CurvePoint on_edge(const TropicalCurve& curve, int edge, const Rat& offset);
CurvePoint on_ray(const TropicalCurve& curve, int ray, const Rat& offset);

Point2 coordinates(const TropicalCurve& curve, const CurvePoint& p);

/// Exact point location. Throws NotOnCurve.
CurvePoint locate_point(const TropicalCurve& curve, const Point2& p);

/// Adjacency helper: for each vertex, incident edge ids in increasing order.
std::vector<std::vector<int>> incident_edges(const TropicalCurve& curve);

}  // namespace tropjac
