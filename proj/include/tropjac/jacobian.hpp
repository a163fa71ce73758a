#pragma once

// The Jacobian of a reduced plane tropical curve as the torus R^g / Q Z^g.
//
// Coordinates: a PathVector records, for each finite edge E_i, the net signed
// lattice length travelled along E_i (positive when moving away from V_i).
// Cycle j pairs with a path vector through its incidence row gamma[j]; the
// resulting map phi: R^N -> R^g sends the cycle vectors a_k to the columns of
// the period matrix Q, and the Abel-Jacobi image of a divisor is the sum of
// phi(path from the base vertex) taken modulo Q Z^g. Rays contribute through
// their vertex.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tropjac/homology.hpp"
#include "tropjac/intersection.hpp"
#include "tropjac/random.hpp"

namespace tropjac {

struct PathVector {
  std::vector<Rat> x;

  PathVector() = default;
  explicit PathVector(std::size_t n) : x(n) {}

  std::size_t size() const { return x.size(); }

  PathVector& operator+=(const PathVector& o);
  PathVector& operator-=(const PathVector& o);
  friend PathVector operator+(PathVector a, const PathVector& b) { return a += b; }
  friend PathVector operator-(PathVector a, const PathVector& b) { return a -= b; }
  friend PathVector operator*(const Rat& k, PathVector a);
  friend bool operator==(const PathVector&, const PathVector&) = default;
};

using RatVector = std::vector<Rat>;
using RatMatrix = std::vector<std::vector<Rat>>;
using IncidenceMatrix = std::vector<std::vector<int>>;

struct PeriodMatrix {
  RatMatrix q;

  int genus() const { return static_cast<int>(q.size()); }
  bool symmetric() const;
  /// Determinants of the leading k x k blocks, k = 1..g.
  std::vector<Rat> leading_minors() const;
  Rat determinant() const;
  bool positive_definite() const;
  /// Exact solve of Q t = v. Throws SingularPeriodMatrix.
  RatVector solve(std::span<const Rat> v) const;
  RatVector apply(std::span<const Rat> t) const;

  friend bool operator==(const PeriodMatrix&, const PeriodMatrix&) = default;
};

/// Canonical element of R^g / Q Z^g: representative = Q t with t in [0,1)^g.
struct JacobianPoint {
  RatVector representative;
  RatVector coordinates;  // t

  bool is_zero() const;
  friend bool operator==(const JacobianPoint& a, const JacobianPoint& b) {
    return a.representative == b.representative;
  }
};

std::string format_vector(std::span<const Rat> v);

// Formula-level building blocks, usable on synthetic incidence data.

/// (a_j)_i = gamma[j][i] * length_i.
std::vector<PathVector> cycle_vectors(const IncidenceMatrix& gamma, std::span<const Rat> lengths);
/// Q[j][k] = sum_i gamma[j][i] gamma[k][i] length_i.
PeriodMatrix period_matrix(const IncidenceMatrix& gamma, std::span<const Rat> lengths);
/// phi(x)[j] = sum_i gamma[j][i] x_i.
RatVector phi(const PathVector& x, const IncidenceMatrix& gamma);

std::vector<Rat> edge_lengths(const TropicalCurve& curve);

// Curve-level operations. All require a reduced curve (NotReduced otherwise).

std::vector<PathVector> cycle_vectors(const TropicalCurve& curve, const CycleBasis& basis);
PeriodMatrix period_matrix(const TropicalCurve& curve, const CycleBasis& basis);
inline RatVector phi(const PathVector& x, const CycleBasis& basis) { return phi(x, basis.gamma); }

/// Path vector of P relative to the tree root: tree path to the carrier
/// vertex plus the partial offset on P's edge. Points on rays map to their
/// vertex.
PathVector path_vector(const TropicalCurve& curve, const SpanningTree& tree, const CurvePoint& p);

/// Path vector of an explicit walk given as (edge id, +1 if traversed from V_i).
PathVector walk_vector(const TropicalCurve& curve, std::span<const std::pair<int, int>> walk);

JacobianPoint reduce_mod_lattice(std::span<const Rat> v, const PeriodMatrix& q);

void require_reduced(const TropicalCurve& curve);

/// Precomputed Jacobian data for one curve and one spanning tree.
class Jacobian {
 public:
  explicit Jacobian(CurveHandle curve, TreeOptions options = {});

  const CurveHandle& curve() const { return curve_; }
  const SpanningTree& tree() const { return tree_; }
  const CycleBasis& basis() const { return basis_; }
  const PeriodMatrix& period() const { return period_; }
  int genus() const { return basis_.genus(); }
  int base_vertex() const { return tree_.root; }

  PathVector path_vector(const CurvePoint& p) const;
  RatVector phi(const PathVector& x) const { return tropjac::phi(x, basis_.gamma); }
  /// Unreduced sum of coeff * phi(path_vector(P)).
  RatVector lift(const Divisor& d) const;
  JacobianPoint abel_jacobi(const Divisor& d) const;
  bool equivalent(const Divisor& d, const Divisor& e) const;

 private:
  CurveHandle curve_;
  SpanningTree tree_;
  CycleBasis basis_;
  PeriodMatrix period_;
  std::vector<PathVector> vertex_paths_;
};

JacobianPoint abel_jacobi(const TropicalCurve& curve, const CycleBasis& basis, const SpanningTree& tree,
                          const Divisor& d);

/// deg D = deg D' and AJ(D - D') = 0.
bool linearly_equivalent(const CurveHandle& curve, const Divisor& d, const Divisor& e);

/// (P' - P) - (Q' - Q) for four points on edge `edge` given by offsets from
/// V_i. Throws HypothesisViolated unless offset(P') - offset(P) equals
/// offset(Q') - offset(Q) and all offsets lie on the edge.
Divisor translation_pair_divisor(const CurveHandle& curve, int edge, const Rat& p, const Rat& p_prime,
                                 const Rat& q, const Rat& q_prime);

/// Random coefficients on every lattice point of `polygon`.
TropicalPolynomial random_polynomial(const NewtonPolygon& polygon, SampleStream& rng);

struct SigmaConstancyReport {
  bool constant = true;
  std::vector<JacobianPoint> values;
  std::vector<std::int64_t> degrees;
  std::optional<std::size_t> first_mismatch;
};

/// AJ(C . L) over `samples` random L with Newton polygon `polygon`.
SigmaConstancyReport verify_sigma_constancy(const Jacobian& jac, const NewtonPolygon& polygon, int samples,
                                            std::uint64_t seed);
SigmaConstancyReport verify_sigma_constancy(const CurveHandle& curve, const NewtonPolygon& polygon, int samples,
                                            std::uint64_t seed);

struct JacobianSummary {
  int genus = 0;
  PeriodMatrix period;
  Rat determinant;
  std::vector<Rat> minors;
  bool positive_definite = false;
};

JacobianSummary jacobian_summary(const CurveHandle& curve);

}  // namespace tropjac
