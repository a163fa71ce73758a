#pragma once

// Exact scalars and planar primitives. Nothing in the library rounds: every
// coordinate, length and matrix entry is a reduced rational.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "tropjac/error.hpp"

namespace tropjac {

/// Arbitrary-precision rational in canonical form (reduced, positive
/// denominator).
class Rat {
 public:
  Rat() = default;
  Rat(std::int64_t n);  // NOLINT(google-explicit-constructor)
  Rat(std::int64_t num, std::int64_t den);
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "p" or "p/q" with an optional leading sign. No decimals.
  static Rat parse(std::string_view text);

  std::string str() const { return q_.get_str(); }
  double to_double() const { return q_.get_d(); }

  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// Largest integer <= *this.
  Rat floor() const;
  /// *this - floor(*this), in [0, 1).
  Rat frac() const { return *this - floor(); }
  Rat abs() const { return sign() < 0 ? -*this : *this; }

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

/// Integer lattice vector.
struct IntVec2 {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const IntVec2&, const IntVec2&) = default;
  friend auto operator<=>(const IntVec2&, const IntVec2&) = default;
  friend IntVec2 operator+(IntVec2 u, IntVec2 v) { return {u.a + v.a, u.b + v.b}; }
  friend IntVec2 operator-(IntVec2 u, IntVec2 v) { return {u.a - v.a, u.b - v.b}; }
  friend IntVec2 operator-(IntVec2 u) { return {-u.a, -u.b}; }
  friend IntVec2 operator*(std::int64_t k, IntVec2 u) { return {k * u.a, k * u.b}; }
};

std::ostream& operator<<(std::ostream& os, const IntVec2& v);

/// Exact rational point; also used for rational displacement vectors.
struct Point2 {
  Rat x;
  Rat y;

  Point2() = default;
  Point2(Rat x_, Rat y_) : x(std::move(x_)), y(std::move(y_)) {}
  explicit Point2(IntVec2 v) : x(v.a), y(v.b) {}

  bool is_zero() const { return x.is_zero() && y.is_zero(); }

  friend bool operator==(const Point2&, const Point2&) = default;
  friend std::strong_ordering operator<=>(const Point2& p, const Point2& q) {
    if (auto c = p.x <=> q.x; c != 0) return c;
    return p.y <=> q.y;
  }
  friend Point2 operator+(const Point2& p, const Point2& q) { return {p.x + q.x, p.y + q.y}; }
  friend Point2 operator-(const Point2& p, const Point2& q) { return {p.x - q.x, p.y - q.y}; }
  friend Point2 operator*(const Rat& k, const Point2& p) { return {k * p.x, k * p.y}; }
};

using RatVec2 = Point2;

std::ostream& operator<<(std::ostream& os, const Point2& p);

/// First-order infinitesimal number std + inf*eps with eps^2 = 0, ordered
/// lexicographically.
struct EpsRat {
  Rat std;
  Rat inf;

  EpsRat() = default;
  EpsRat(Rat s) : std(std::move(s)) {}  // NOLINT(google-explicit-constructor)
  EpsRat(Rat s, Rat i) : std(std::move(s)), inf(std::move(i)) {}

  int sign() const { return std.sign() != 0 ? std.sign() : inf.sign(); }
  bool is_zero() const { return std.is_zero() && inf.is_zero(); }

  friend EpsRat operator+(const EpsRat& a, const EpsRat& b) { return {a.std + b.std, a.inf + b.inf}; }
  friend EpsRat operator-(const EpsRat& a, const EpsRat& b) { return {a.std - b.std, a.inf - b.inf}; }
  friend EpsRat operator-(const EpsRat& a) { return {-a.std, -a.inf}; }
  friend EpsRat operator*(const EpsRat& a, const EpsRat& b) {
    return {a.std * b.std, a.std * b.inf + a.inf * b.std};
  }
  /// Division by a standard (non-infinitesimal) nonzero scalar.
  friend EpsRat operator/(const EpsRat& a, const Rat& k) { return {a.std / k, a.inf / k}; }

  friend bool operator==(const EpsRat&, const EpsRat&) = default;
  friend std::strong_ordering operator<=>(const EpsRat& a, const EpsRat& b) {
    if (auto c = a.std <=> b.std; c != 0) return c;
    return a.inf <=> b.inf;
  }
};

std::ostream& operator<<(std::ostream& os, const EpsRat& e);

std::strong_ordering eps_compare(const EpsRat& a, const EpsRat& b);

/// v / gcd(|a|,|b|). Throws ZeroVector on (0,0).
IntVec2 primitive_vector(IntVec2 v);

Rat cross(const RatVec2& u, const RatVec2& v);
Rat dot(const RatVec2& u, const RatVec2& v);
std::int64_t cross(IntVec2 u, IntVec2 v);
std::int64_t dot(IntVec2 u, IntVec2 v);

/// Splits a nonzero rational vector as t * primitive with t > 0.
struct LatticeDecomposition {
  Rat length;
  IntVec2 direction;
};
LatticeDecomposition lattice_decompose(const RatVec2& d);

/// Lattice length of the segment [p, q]; zero iff p == q.
Rat lattice_length(const Point2& p, const Point2& q);

/// Lattice length of an integer segment, i.e. gcd(|a|,|b|).
std::int64_t lattice_length(IntVec2 v);

}  // namespace tropjac
