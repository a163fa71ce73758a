#pragma once

// Independent reference computations for the tests. None of these route
// through the library's hull, duality or stable-intersection code.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "tropjac/curve.hpp"
#include "tropjac/polynomial.hpp"

namespace oracle {

using tropjac::IntVec2;
using tropjac::Point2;
using tropjac::Rat;

/// Corner-locus vertices by solving every triple of terms for a three-way tie
/// and keeping ties that attain the maximum. Maps vertex -> maximizing exponents.
inline std::map<Point2, std::set<IntVec2>> corner_vertices(const tropjac::TropicalPolynomial& f) {
  std::vector<std::pair<IntVec2, Rat>> terms(f.terms().begin(), f.terms().end());
  std::map<Point2, std::set<IntVec2>> out;
  const std::size_t n = terms.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto& [a, ca] = terms[i];
        const auto& [b, cb] = terms[j];
        const auto& [c, cc] = terms[k];
        // (a-b).p = cb - ca ; (a-c).p = cc - ca
        const Rat m11(a.a - b.a), m12(a.b - b.b), m21(a.a - c.a), m22(a.b - c.b);
        const Rat det = m11 * m22 - m12 * m21;
        if (det.is_zero()) continue;
        const Rat r1 = cb - ca, r2 = cc - ca;
        const Point2 p{(r1 * m22 - m12 * r2) / det, (m11 * r2 - r1 * m21) / det};
        const Rat top = f.evaluate(p);
        if (Rat(a.a) * p.x + Rat(a.b) * p.y + ca != top) continue;
        std::set<IntVec2> arg;
        for (const auto& [e, ce] : terms) {
          if (Rat(e.a) * p.x + Rat(e.b) * p.y + ce == top) arg.insert(e);
        }
        out[p] = arg;
      }
    }
  }
  return out;
}

/// Twice the area of the hull of a point set, via gift wrapping + shoelace.
inline Rat hull_area(std::vector<IntVec2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return Rat(0);
  std::vector<IntVec2> hull;
  std::size_t start = 0;
  std::size_t cur = start;
  do {
    hull.push_back(pts[cur]);
    std::size_t next = (cur + 1) % pts.size();
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const IntVec2 u = pts[next] - pts[cur];
      const IntVec2 v = pts[k] - pts[cur];
      const auto c = u.a * v.b - u.b * v.a;
      if (c < 0 || (c == 0 && v.a * v.a + v.b * v.b > u.a * u.a + u.b * u.b)) next = k;
    }
    cur = next;
  } while (cur != start && hull.size() <= pts.size());
  std::int64_t twice = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& p = hull[i];
    const auto& q = hull[(i + 1) % hull.size()];
    twice += p.a * q.b - p.b * q.a;
  }
  return Rat(twice < 0 ? -twice : twice, 2);
}

/// Mixed volume from areas of hulls of all pairwise lattice-point sums.
inline Rat mixed_volume(const std::vector<IntVec2>& p, const std::vector<IntVec2>& q) {
  std::vector<IntVec2> sums;
  for (const auto& a : p) {
    for (const auto& b : q) sums.push_back(a + b);
  }
  return hull_area(sums) - hull_area(p) - hull_area(q);
}

/// Bounded faces of the finite graph of a curve, by rotation-system face
/// walking. Each face is the set of edge ids on its boundary.
inline std::vector<std::set<int>> bounded_faces(const tropjac::TropicalCurve& curve) {
  const int nv = curve.num_vertices();
  struct Half {
    int edge, from, to;
    IntVec2 dir;
  };
  std::vector<Half> halves;
  for (int e = 0; e < curve.num_edges(); ++e) {
    const auto& ed = curve.edges[e];
    halves.push_back({e, ed.v, ed.w, ed.direction});
    halves.push_back({e, ed.w, ed.v, -ed.direction});
  }
  const auto half_plane = [](IntVec2 d) { return d.b > 0 || (d.b == 0 && d.a > 0) ? 0 : 1; };
  const auto angle_less = [&](IntVec2 u, IntVec2 v) {
    if (half_plane(u) != half_plane(v)) return half_plane(u) < half_plane(v);
    return u.a * v.b - u.b * v.a > 0;
  };
  std::vector<std::vector<int>> around(nv);  // outgoing halves sorted counterclockwise
  for (int h = 0; h < static_cast<int>(halves.size()); ++h) around[halves[h].from].push_back(h);
  for (auto& list : around) {
    std::sort(list.begin(), list.end(), [&](int a, int b) { return angle_less(halves[a].dir, halves[b].dir); });
  }
  std::vector<bool> used(halves.size(), false);
  std::vector<std::set<int>> faces;
  for (int start = 0; start < static_cast<int>(halves.size()); ++start) {
    if (used[start]) continue;
    std::set<int> edges;
    std::vector<Point2> poly;
    int h = start;
    while (!used[h]) {
      used[h] = true;
      edges.insert(halves[h].edge);
      poly.push_back(curve.vertices[halves[h].from].position);
      // At the head, the twin of h; the next half is the one clockwise from it
      // so that the face lies to the left.
      const int twin = h ^ 1;
      const auto& list = around[halves[h].to];
      const auto pos = std::find(list.begin(), list.end(), twin) - list.begin();
      h = list[(pos + static_cast<long>(list.size()) - 1) % static_cast<long>(list.size())];
    }
    Rat twice;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const auto& p = poly[i];
      const auto& q = poly[(i + 1) % poly.size()];
      twice += p.x * q.y - p.y * q.x;
    }
    if (twice.sign() > 0) faces.push_back(std::move(edges));
  }
  return faces;
}

/// Crossings of C with L translated by eps * v for a concrete small rational
/// eps, with plain segment arithmetic. Returns (point, multiplicity) pairs.
inline std::vector<std::pair<Point2, int>> crossings_at(const tropjac::TropicalCurve& c,
                                                        const tropjac::TropicalCurve& l, IntVec2 v,
                                                        const Rat& eps) {
  struct Seg {
    Point2 p;
    IntVec2 d;
    bool bounded;
    Rat len;
    int w;
  };
  const auto segs = [](const tropjac::TropicalCurve& curve, const Point2& shift) {
    std::vector<Seg> out;
    for (const auto& e : curve.edges) out.push_back({curve.vertices[e.v].position + shift, e.direction, true, e.length, e.weight});
    for (const auto& r : curve.rays) out.push_back({curve.vertices[r.vertex].position + shift, r.direction, false, Rat(0), r.weight});
    return out;
  };
  std::vector<std::pair<Point2, int>> out;
  for (const auto& a : segs(c, Point2{})) {
    for (const auto& b : segs(l, eps * Point2(v))) {
      const Rat det(a.d.a * b.d.b - a.d.b * b.d.a);
      if (det.is_zero()) continue;
      const Point2 w = b.p - a.p;
      const Rat s = (w.x * Rat(b.d.b) - w.y * Rat(b.d.a)) / det;
      const Rat t = (w.x * Rat(a.d.b) - w.y * Rat(a.d.a)) / det;
      if (s.sign() < 0 || t.sign() < 0 || (a.bounded && s > a.len) || (b.bounded && t > b.len)) continue;
      const auto m = a.d.a * b.d.b - a.d.b * b.d.a;
      out.emplace_back(a.p + s * Point2(a.d), a.w * b.w * static_cast<int>(m < 0 ? -m : m));
    }
  }
  return out;
}

}  // namespace oracle
