#pragma once

// Max-plus polynomials in two variables and the combinatorics of their
// Newton polygons: hulls, regular subdivisions, genus and mixed volume.

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tropjac/numeric.hpp"

namespace tropjac {

/// max over terms of <exponent, x> + coefficient.
class TropicalPolynomial {
 public:
  using TermMap = std::map<IntVec2, Rat>;

  /// Validates: at least one term, exponents non-negative.
  explicit TropicalPolynomial(TermMap terms);

  const TermMap& terms() const { return terms_; }
  std::vector<IntVec2> support() const;

  Rat evaluate(const Point2& p) const;

  /// The polynomial whose curve is this one translated by `t`.
  TropicalPolynomial translated(const Point2& t) const;

  friend bool operator==(const TropicalPolynomial&, const TropicalPolynomial&) = default;

 private:
  TermMap terms_;
};

/// Parses the polynomial file format:
///
///   # comment
///   convention max
///   <i> <j> <coefficient>
///   ...
///
/// Throws SyntaxError (with line number) or DuplicateExponent.
TropicalPolynomial parse_polynomial(std::string_view text);

std::string format_polynomial(const TropicalPolynomial& f);

inline Rat evaluate(const TropicalPolynomial& f, const Point2& p) { return f.evaluate(p); }

/// Convex hull, counterclockwise, collinear points dropped. Returns fewer
/// than three points for degenerate input.
std::vector<IntVec2> convex_hull(std::span<const IntVec2> points);

/// Euclidean area of a simple polygon given in order (signed: positive for
/// counterclockwise).
Rat signed_area(std::span<const IntVec2> polygon);
Rat signed_area(std::span<const Point2> polygon);

/// Convex lattice polygon, counterclockwise, no three collinear vertices.
struct NewtonPolygon {
  std::vector<IntVec2> vertices;

  Rat area() const { return signed_area(vertices); }
  /// Closed containment.
  bool contains(IntVec2 p) const;
  /// Strict interior.
  bool contains_interior(IntVec2 p) const;
  std::vector<IntVec2> lattice_points() const;

  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;
};

/// Hull of the support. Throws DegeneratePolygon if not 2-dimensional.
NewtonPolygon newton_polygon(const TropicalPolynomial& f);

/// Standard polygons used throughout the corpus.
NewtonPolygon triangle_polygon(int size);
NewtonPolygon rectangle_polygon(int width, int height);

/// Upper face of the lifted point configuration projected to the plane.
struct Cell2 {
  std::vector<IntVec2> corners;  // counterclockwise
  std::vector<IntVec2> points;   // support points lying on the face, sorted
  // Face plane: coefficient = slope.x * i + slope.y * j + offset.
  RatVec2 slope;
  Rat offset;
};

struct Cell1 {
  IntVec2 a;  // a < b lexicographically
  IntVec2 b;
  std::vector<int> cofaces;  // one (boundary) or two (interior) 2-cell ids

  bool is_boundary() const { return cofaces.size() == 1; }
};

/// Regular subdivision of the Newton polygon induced by the coefficients.
struct NewtonComplex {
  NewtonPolygon polygon;
  std::vector<Cell2> cells2;   // sorted by corner list
  std::vector<Cell1> cells1;   // sorted by (a, b)
  std::vector<IntVec2> cells0; // sorted

  int cell1_index(IntVec2 p, IntVec2 q) const;
};

NewtonComplex newton_complex(const TropicalPolynomial& f);

/// Number of 0-cells strictly inside the polygon.
int genus(const NewtonComplex& ncx, const NewtonPolygon& polygon);
inline int genus(const NewtonComplex& ncx) { return genus(ncx, ncx.polygon); }

/// area(P + Q) - area(P) - area(Q). Degenerate inputs count with area 0.
std::int64_t mixed_volume(std::span<const IntVec2> p, std::span<const IntVec2> q);
inline std::int64_t mixed_volume(const NewtonPolygon& p, const NewtonPolygon& q) {
  return mixed_volume(p.vertices, q.vertices);
}

}  // namespace tropjac
