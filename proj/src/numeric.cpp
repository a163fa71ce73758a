#include "tropjac/numeric.hpp"

#include <cctype>
#include <numeric>

namespace tropjac {

Rat::Rat(std::int64_t n) : q_(static_cast<long>(n)) {}

Rat::Rat(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  q_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::SyntaxError, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::SyntaxError, "zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rat(mpq_class(n, d));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  q_ /= o.q_;
  return *this;
}

Rat Rat::floor() const {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return Rat(mpq_class(f));
}

std::ostream& operator<<(std::ostream& os, const IntVec2& v) { return os << '(' << v.a << ',' << v.b << ')'; }

std::ostream& operator<<(std::ostream& os, const Point2& p) { return os << '(' << p.x << ',' << p.y << ')'; }

std::ostream& operator<<(std::ostream& os, const EpsRat& e) { return os << e.std << '+' << e.inf << "e"; }

std::strong_ordering eps_compare(const EpsRat& a, const EpsRat& b) { return a <=> b; }

IntVec2 primitive_vector(IntVec2 v) {
  if (v.a == 0 && v.b == 0) throw Error(ErrorCode::ZeroVector, "primitive_vector of (0,0)");
  const std::int64_t g = std::gcd(v.a, v.b);
  return {v.a / g, v.b / g};
}

Rat cross(const RatVec2& u, const RatVec2& v) { return u.x * v.y - u.y * v.x; }
Rat dot(const RatVec2& u, const RatVec2& v) { return u.x * v.x + u.y * v.y; }
std::int64_t cross(IntVec2 u, IntVec2 v) { return u.a * v.b - u.b * v.a; }
std::int64_t dot(IntVec2 u, IntVec2 v) { return u.a * v.a + u.b * v.b; }

LatticeDecomposition lattice_decompose(const RatVec2& d) {
  if (d.is_zero()) throw Error(ErrorCode::ZeroVector, "lattice_decompose of zero vector");
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), d.x.raw().get_den_mpz_t(), d.y.raw().get_den_mpz_t());
  const mpz_class mx = d.x.num() * (l / d.x.den());
  const mpz_class my = d.y.num() * (l / d.y.den());
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), mx.get_mpz_t(), my.get_mpz_t());
  const mpz_class px = mx / g;
  const mpz_class py = my / g;
  if (!px.fits_slong_p() || !py.fits_slong_p()) {
    throw std::overflow_error("lattice_decompose: direction exceeds 64 bits");
  }
  return {Rat(mpq_class(g, l)), IntVec2{px.get_si(), py.get_si()}};
}

Rat lattice_length(const Point2& p, const Point2& q) {
  const RatVec2 d = q - p;
  if (d.is_zero()) return Rat(0);
  return lattice_decompose(d).length;
}

std::int64_t lattice_length(IntVec2 v) { return std::gcd(v.a, v.b); }

}  // namespace tropjac
