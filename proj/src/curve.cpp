#include "tropjac/curve.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace tropjac {

namespace {

void require_connected(const TropicalCurve& curve) {
  if (curve.vertices.empty()) throw Error(ErrorCode::DisconnectedCurve, "curve has no vertices");
  const auto adj = incident_edges(curve);
  std::vector<bool> seen(curve.vertices.size(), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (int e : adj[x]) {
      const int y = curve.edges[e].v == x ? curve.edges[e].w : curve.edges[e].v;
      if (!seen[y]) {
        seen[y] = true;
        q.push(y);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw Error(ErrorCode::DisconnectedCurve, "curve is not connected");
  }
}

}  // namespace

TropicalCurve build_curve(const TropicalPolynomial& f) { return build_curve(newton_complex(f)); }

TropicalCurve build_curve(const NewtonComplex& ncx) {
  TropicalCurve curve;
  curve.polygon = ncx.polygon;
  for (std::size_t c = 0; c < ncx.cells2.size(); ++c) {
    // All terms of the cell tie at p = -slope, and every other term is lower.
    const auto& cell = ncx.cells2[c];
    curve.vertices.push_back({Point2{-cell.slope.x, -cell.slope.y}, static_cast<int>(c)});
  }
  for (std::size_t k = 0; k < ncx.cells1.size(); ++k) {
    const auto& seg = ncx.cells1[k];
    const int weight = static_cast<int>(lattice_length(seg.b - seg.a));
    if (seg.is_boundary()) {
      const auto& corners = ncx.cells2[seg.cofaces[0]].corners;
      IntVec2 d{};
      for (std::size_t m = 0; m < corners.size(); ++m) {
        const IntVec2 p = corners[m];
        const IntVec2 q = corners[(m + 1) % corners.size()];
        if ((p == seg.a && q == seg.b) || (p == seg.b && q == seg.a)) d = q - p;
      }
      // Outward normal of a counterclockwise boundary segment.
      curve.rays.push_back({seg.cofaces[0], primitive_vector({d.b, -d.a}), weight, static_cast<int>(k)});
    } else {
      CurveEdge e;
      e.v = seg.cofaces[0];
      e.w = seg.cofaces[1];
      const auto dec = lattice_decompose(curve.vertices[e.w].position - curve.vertices[e.v].position);
      e.direction = dec.direction;
      e.length = dec.length;
      e.weight = weight;
      e.dual = static_cast<int>(k);
      curve.edges.push_back(std::move(e));
    }
  }
  require_connected(curve);
  return curve;
}

BalancingReport check_balancing(const TropicalCurve& curve) {
  std::vector<IntVec2> sums(curve.vertices.size());
  for (const auto& e : curve.edges) {
    sums[e.v] = sums[e.v] + e.weight * e.direction;
    sums[e.w] = sums[e.w] - e.weight * e.direction;
  }
  for (const auto& r : curve.rays) sums[r.vertex] = sums[r.vertex] + r.weight * r.direction;
  BalancingReport report;
  for (std::size_t v = 0; v < sums.size(); ++v) {
    if (sums[v] != IntVec2{}) {
      report.balanced = false;
      report.unbalanced_vertices.push_back(static_cast<int>(v));
    }
  }
  return report;
}

bool is_reduced(const TropicalCurve& curve) {
  return std::all_of(curve.edges.begin(), curve.edges.end(), [](const auto& e) { return e.weight == 1; }) &&
         std::all_of(curve.rays.begin(), curve.rays.end(), [](const auto& r) { return r.weight == 1; });
}

std::string describe(const CurvePoint& p) {
  std::ostringstream os;
  switch (p.kind) {
    case CurvePoint::Kind::Vertex: os << "vertex " << p.id; break;
    case CurvePoint::Kind::OnEdge: os << "edge " << p.id << ' ' << p.offset; break;
    case CurvePoint::Kind::OnRay: os << "ray " << p.id << ' ' << p.offset; break;
  }
  return os.str();
}

CurvePoint on_edge(const TropicalCurve& curve, int edge, const Rat& offset) {
  if (edge < 0 || edge >= curve.num_edges()) {
    throw Error(ErrorCode::NotOnCurve, "edge id " + std::to_string(edge) + " out of range");
  }
  const auto& e = curve.edges[edge];
  if (offset.sign() < 0 || offset > e.length) {
    throw Error(ErrorCode::NotOnCurve, "offset " + offset.str() + " outside edge " + std::to_string(edge));
  }
  if (offset.is_zero()) return CurvePoint::vertex(e.v);
  if (offset == e.length) return CurvePoint::vertex(e.w);
  return {CurvePoint::Kind::OnEdge, edge, offset};
}

CurvePoint on_ray(const TropicalCurve& curve, int ray, const Rat& offset) {
  if (ray < 0 || ray >= static_cast<int>(curve.rays.size())) {
    throw Error(ErrorCode::NotOnCurve, "ray id " + std::to_string(ray) + " out of range");
  }
  if (offset.sign() < 0) throw Error(ErrorCode::NotOnCurve, "negative ray offset");
  if (offset.is_zero()) return CurvePoint::vertex(curve.rays[ray].vertex);
  return {CurvePoint::Kind::OnRay, ray, offset};
}

Point2 coordinates(const TropicalCurve& curve, const CurvePoint& p) {
  switch (p.kind) {
    case CurvePoint::Kind::Vertex:
      return curve.vertices.at(p.id).position;
    case CurvePoint::Kind::OnEdge: {
      const auto& e = curve.edges.at(p.id);
      return curve.vertices[e.v].position + p.offset * Point2(e.direction);
    }
    case CurvePoint::Kind::OnRay: {
      const auto& r = curve.rays.at(p.id);
      return curve.vertices[r.vertex].position + p.offset * Point2(r.direction);
    }
  }
  return {};
}

CurvePoint locate_point(const TropicalCurve& curve, const Point2& p) {
  for (std::size_t v = 0; v < curve.vertices.size(); ++v) {
    if (curve.vertices[v].position == p) return CurvePoint::vertex(static_cast<int>(v));
  }
  // True with t > 0 when p = base + t * u.
  const auto param = [&](const Point2& base, IntVec2 u, Rat& t) {
    const Point2 d = p - base;
    const Point2 du(u);
    if (!cross(d, du).is_zero()) return false;
    t = dot(d, du) / dot(du, du);
    return t.sign() > 0;
  };
  Rat t;
  for (std::size_t i = 0; i < curve.edges.size(); ++i) {
    const auto& e = curve.edges[i];
    if (param(curve.vertices[e.v].position, e.direction, t) && t < e.length) {
      return {CurvePoint::Kind::OnEdge, static_cast<int>(i), t};
    }
  }
  for (std::size_t i = 0; i < curve.rays.size(); ++i) {
    const auto& r = curve.rays[i];
    if (param(curve.vertices[r.vertex].position, r.direction, t)) {
      return {CurvePoint::Kind::OnRay, static_cast<int>(i), t};
    }
  }
  std::ostringstream os;
  os << "point " << p << " is not on the curve";
  throw Error(ErrorCode::NotOnCurve, os.str());
}

std::vector<std::vector<int>> incident_edges(const TropicalCurve& curve) {
  std::vector<std::vector<int>> adj(curve.vertices.size());
  for (std::size_t i = 0; i < curve.edges.size(); ++i) {
    adj[curve.edges[i].v].push_back(static_cast<int>(i));
    adj[curve.edges[i].w].push_back(static_cast<int>(i));
  }
  return adj;
}

}  // namespace tropjac
