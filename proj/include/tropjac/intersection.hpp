#pragma once

// Stable intersection of plane tropical curves, divisors on a carrier curve,
// and the moment sum of a balanced curve across a closed region boundary.

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "tropjac/curve.hpp"
#include "tropjac/homology.hpp"

namespace tropjac {

using CurveHandle = std::shared_ptr<const TropicalCurve>;

inline CurveHandle share(TropicalCurve curve) { return std::make_shared<const TropicalCurve>(std::move(curve)); }

/// Integer formal sum of normalized points on a fixed carrier curve.
class Divisor {
 public:
  using Terms = std::map<CurvePoint, std::int64_t>;

  explicit Divisor(CurveHandle carrier) : carrier_(std::move(carrier)) {}

  const CurveHandle& carrier() const { return carrier_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::int64_t degree() const;

  /// Adds coeff * p; zero coefficients are pruned.
  Divisor& add(const CurvePoint& p, std::int64_t coeff);

  Divisor& operator+=(const Divisor& other);
  Divisor& operator-=(const Divisor& other);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator-(const Divisor& a);

  /// Same terms on an equal carrier.
  friend bool operator==(const Divisor& a, const Divisor& b);

 private:
  void require_same_carrier(const Divisor& other) const;

  CurveHandle carrier_;
  Terms terms_;
};

inline Divisor divisor_add(const Divisor& a, const Divisor& b) { return a + b; }
inline Divisor divisor_negate(const Divisor& a) { return -a; }
inline std::int64_t degree(const Divisor& d) { return d.degree(); }

bool same_carrier(const TropicalCurve& a, const TropicalCurve& b);

/// Edge or ray of a curve.
struct CellRef {
  enum class Kind { Edge, Ray };
  Kind kind = Kind::Edge;
  int id = -1;

  friend bool operator==(const CellRef&, const CellRef&) = default;
  friend auto operator<=>(const CellRef&, const CellRef&) = default;
};

/// Proper crossing of a cell of C with a cell of L (after shifting L by
/// eps * shift). Offsets are lattice parameters along each cell.
struct IntersectionPoint {
  Point2 location;       // standard part
  Point2 location_drift; // coefficient of eps
  int multiplicity = 0;
  CellRef on_c;
  CellRef on_l;
  EpsRat offset_c;
  EpsRat offset_l;
};

/// All crossings of C with L translated by eps * shift (shift may be zero for
/// an unperturbed computation). Throws NotTransversal if cells overlap or a
/// vertex of one curve lies on the other.
std::vector<IntersectionPoint> transversal_intersection(const TropicalCurve& c, const TropicalCurve& l,
                                                        IntVec2 shift = {});

/// The deterministic candidate sequence (1,2), (1,3), (2,5), (3,7), ...
IntVec2 shift_candidate(std::size_t index);

/// First candidate not parallel to any cell of either curve whose shifted
/// configuration is transversal. `skip` accepted candidates are passed over.
IntVec2 choose_generic_shift(const TropicalCurve& c, const TropicalCurve& l, std::size_t skip = 0);

/// C . L as a divisor on C.
Divisor stable_intersection(const CurveHandle& c, const TropicalCurve& l, IntVec2 shift);
Divisor stable_intersection(const CurveHandle& c, const TropicalCurve& l);

/// Sum over crossings P of the region boundary with cells of L of
/// cross(w_L * u_out, P), with u_out oriented out of the region. Zero for a
/// balanced L. Throws NotTransversal or VertexOnBoundary.
Rat moment_balance_check(std::span<const Point2> region, const TropicalCurve& l);
inline Rat moment_balance_check(const TropicalCurve& /*c*/, const Cycle& cycle, const TropicalCurve& l) {
  return moment_balance_check(cycle.region, l);
}

}  // namespace tropjac
