#include "tropjac/intersection.hpp"

#include <optional>
#include <sstream>

namespace tropjac {

std::int64_t Divisor::degree() const {
  std::int64_t d = 0;
  for (const auto& [p, c] : terms_) d += c;
  return d;
}

Divisor& Divisor::add(const CurvePoint& p, std::int64_t coeff) {
  if (coeff == 0) return *this;
  auto [it, inserted] = terms_.emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

bool same_carrier(const TropicalCurve& a, const TropicalCurve& b) { return &a == &b || a == b; }

void Divisor::require_same_carrier(const Divisor& other) const {
  if (!same_carrier(*carrier_, *other.carrier_)) {
    throw Error(ErrorCode::CarrierMismatch, "divisors live on different curves");
  }
}

Divisor& Divisor::operator+=(const Divisor& other) {
  require_same_carrier(other);
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& other) {
  require_same_carrier(other);
  for (const auto& [p, c] : other.terms_) add(p, -c);
  return *this;
}

Divisor operator-(const Divisor& a) {
  Divisor out(a.carrier_);
  for (const auto& [p, c] : a.terms_) out.terms_.emplace(p, -c);
  return out;
}

bool operator==(const Divisor& a, const Divisor& b) {
  return same_carrier(*a.carrier_, *b.carrier_) && a.terms_ == b.terms_;
}

namespace {

struct EpsPoint {
  EpsRat x;
  EpsRat y;
};

EpsRat cross(const EpsPoint& u, IntVec2 v) { return u.x * EpsRat(Rat(v.b)) - u.y * EpsRat(Rat(v.a)); }
EpsRat dot(const EpsPoint& u, IntVec2 v) { return u.x * EpsRat(Rat(v.a)) + u.y * EpsRat(Rat(v.b)); }

struct CellView {
  CellRef ref;
  EpsPoint base;
  IntVec2 dir;
  int weight = 1;
  std::optional<Rat> length;  // empty for rays
};

std::vector<CellView> cells_of(const TropicalCurve& curve, IntVec2 shift) {
  std::vector<CellView> out;
  const auto lift = [&](const Point2& p) {
    return EpsPoint{EpsRat(p.x, Rat(shift.a)), EpsRat(p.y, Rat(shift.b))};
  };
  for (std::size_t i = 0; i < curve.edges.size(); ++i) {
    const auto& e = curve.edges[i];
    out.push_back({{CellRef::Kind::Edge, static_cast<int>(i)}, lift(curve.vertices[e.v].position), e.direction,
                   e.weight, e.length});
  }
  for (std::size_t i = 0; i < curve.rays.size(); ++i) {
    const auto& r = curve.rays[i];
    out.push_back({{CellRef::Kind::Ray, static_cast<int>(i)}, lift(curve.vertices[r.vertex].position), r.direction,
                   r.weight, std::nullopt});
  }
  return out;
}

[[noreturn]] void not_transversal(const CellView& a, const CellView& b, const char* why) {
  const auto name = [](const CellRef& r) {
    return std::string(r.kind == CellRef::Kind::Edge ? "edge " : "ray ") + std::to_string(r.id);
  };
  throw Error(ErrorCode::NotTransversal, name(a.ref) + " of C and " + name(b.ref) + " of L: " + why);
}

// Closed parameter interval [lo, hi] with hi empty for +infinity.
struct Interval {
  EpsRat lo;
  std::optional<EpsRat> hi;
};

bool intervals_meet(const Interval& a, const Interval& b) {
  if (a.hi && *a.hi < b.lo) return false;
  if (b.hi && *b.hi < a.lo) return false;
  return true;
}

}  // namespace

std::vector<IntersectionPoint> transversal_intersection(const TropicalCurve& c, const TropicalCurve& l,
                                                        IntVec2 shift) {
  const auto cc = cells_of(c, {});
  const auto lc = cells_of(l, shift);
  std::vector<IntersectionPoint> out;
  for (const auto& a : cc) {
    for (const auto& b : lc) {
      const EpsPoint w{b.base.x - a.base.x, b.base.y - a.base.y};
      const std::int64_t det = cross(a.dir, b.dir);
      if (det == 0) {
        if (!cross(w, a.dir).is_zero()) continue;
        // Collinear: compare parameter ranges along a.dir (b.dir is +-a.dir).
        const EpsRat start = dot(w, a.dir) / Rat(dot(a.dir, a.dir));
        Interval ia{EpsRat(Rat(0)), a.length ? std::optional<EpsRat>(EpsRat(*a.length)) : std::nullopt};
        Interval ib;
        const bool same = dot(a.dir, b.dir) > 0;
        if (b.length) {
          const EpsRat end = same ? start + EpsRat(*b.length) : start - EpsRat(*b.length);
          ib = same ? Interval{start, end} : Interval{end, start};
        } else if (same) {
          ib = Interval{start, std::nullopt};
        } else {
          // (-inf, start]: meets ia iff start >= 0.
          if (start.sign() >= 0) not_transversal(a, b, "collinear cells overlap");
          continue;
        }
        if (intervals_meet(ia, ib)) not_transversal(a, b, "collinear cells overlap");
        continue;
      }
      const Rat rdet(det);
      const EpsRat s = cross(w, b.dir) / rdet;
      const EpsRat t = cross(w, a.dir) / rdet;
      if (s.sign() < 0 || t.sign() < 0) continue;
      if (a.length && s > EpsRat(*a.length)) continue;
      if (b.length && t > EpsRat(*b.length)) continue;
      if (s.is_zero() || t.is_zero() || (a.length && s == EpsRat(*a.length)) ||
          (b.length && t == EpsRat(*b.length))) {
        not_transversal(a, b, "crossing at a vertex");
      }
      IntersectionPoint ip;
      ip.location = Point2{a.base.x.std + s.std * Rat(a.dir.a), a.base.y.std + s.std * Rat(a.dir.b)};
      ip.location_drift = Point2{s.inf * Rat(a.dir.a), s.inf * Rat(a.dir.b)};
      ip.multiplicity = a.weight * b.weight * static_cast<int>(det < 0 ? -det : det);
      ip.on_c = a.ref;
      ip.on_l = b.ref;
      ip.offset_c = s;
      ip.offset_l = t;
      out.push_back(std::move(ip));
    }
  }
  return out;
}

IntVec2 shift_candidate(std::size_t index) {
  if (index == 0) return {1, 2};
  const auto k = static_cast<std::int64_t>(index);
  return {k, 2 * k + 1};
}

IntVec2 choose_generic_shift(const TropicalCurve& c, const TropicalCurve& l, std::size_t skip) {
  std::vector<IntVec2> dirs;
  for (const auto* curve : {&c, &l}) {
    for (const auto& e : curve->edges) dirs.push_back(e.direction);
    for (const auto& r : curve->rays) dirs.push_back(r.direction);
  }
  constexpr std::size_t kMaxCandidates = 1'000'000;
  for (std::size_t i = 0; i < kMaxCandidates; ++i) {
    const IntVec2 v = shift_candidate(i);
    bool parallel = false;
    for (const auto& d : dirs) parallel = parallel || cross(v, d) == 0;
    if (parallel) continue;
    try {
      transversal_intersection(c, l, v);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::NotTransversal) throw;
      continue;
    }
    if (skip == 0) return v;
    --skip;
  }
  throw Error(ErrorCode::ExhaustedShiftSequence, "no generic shift found");
}

Divisor stable_intersection(const CurveHandle& c, const TropicalCurve& l, IntVec2 shift) {
  Divisor d(c);
  for (const auto& ip : transversal_intersection(*c, l, shift)) {
    const Rat& s = ip.offset_c.std;
    const CurvePoint p = ip.on_c.kind == CellRef::Kind::Edge ? on_edge(*c, ip.on_c.id, s) : on_ray(*c, ip.on_c.id, s);
    d.add(p, ip.multiplicity);
  }
  return d;
}

Divisor stable_intersection(const CurveHandle& c, const TropicalCurve& l) {
  return stable_intersection(c, l, choose_generic_shift(*c, l));
}

Rat moment_balance_check(std::span<const Point2> region, const TropicalCurve& l) {
  for (const auto& v : l.vertices) {
    if (on_boundary(region, v.position)) {
      std::ostringstream os;
      os << "vertex " << v.position << " of L lies on the region boundary";
      throw Error(ErrorCode::VertexOnBoundary, os.str());
    }
  }
  const auto cells = cells_of(l, {});
  Rat total;
  const std::size_t n = region.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Point2& a = region[k];
    const Point2 d = region[(k + 1) % n] - a;
    for (const auto& cell : cells) {
      const Point2 q{cell.base.x.std, cell.base.y.std};
      const Point2 e(cell.dir);
      const Point2 w = q - a;
      const Rat det = cross(d, e);
      if (det.is_zero()) {
        if (!cross(w, d).is_zero()) continue;
        // Collinear with the boundary segment: overlap is never transversal.
        const Rat dd = dot(d, d);
        const Rat start = dot(w, d) / dd;
        const Rat step = dot(e, d) / dd;
        Rat lo = start, hi = start;
        bool unbounded = !cell.length;
        if (cell.length) (step.sign() > 0 ? hi : lo) += step * *cell.length;
        const bool meets = unbounded ? (step.sign() > 0 ? start <= Rat(1) : start >= Rat(0))
                                     : !(hi < Rat(0) || lo > Rat(1));
        if (meets) throw Error(ErrorCode::NotTransversal, "cell of L runs along the region boundary");
        continue;
      }
      const Rat s = cross(w, e) / det;  // along the boundary segment, in [0, 1]
      const Rat t = cross(w, d) / det;  // along the cell of L
      if (s.sign() < 0 || s > Rat(1) || t.sign() < 0) continue;
      if (cell.length && t > *cell.length) continue;
      if (s.is_zero() || s == Rat(1)) {
        throw Error(ErrorCode::NotTransversal, "L crosses the region boundary at a corner");
      }
      const Point2 p = a + s * d;
      // Leaving a counterclockwise region means crossing to the right of d.
      const bool exits = cross(e, d).sign() > 0;
      const Point2 out = exits ? e : Point2{-e.x, -e.y};
      total += cross(Rat(cell.weight) * out, p);
    }
  }
  return total;
}

}  // namespace tropjac
