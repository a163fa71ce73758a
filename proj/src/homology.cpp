#include "tropjac/homology.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace tropjac {

SpanningTree spanning_tree(const TropicalCurve& curve, TreeOptions options) {
  const int nv = curve.num_vertices();
  if (options.root < 0 || options.root >= nv) {
    throw Error(ErrorCode::DisconnectedCurve, "tree root out of range");
  }
  auto adj = incident_edges(curve);
  if (options.reverse_edge_order) {
    for (auto& list : adj) std::reverse(list.begin(), list.end());
  }
  SpanningTree tree;
  tree.root = options.root;
  tree.parent_edge.assign(nv, -1);
  tree.parent.assign(nv, -1);
  tree.depth.assign(nv, -1);
  std::vector<bool> in_tree(curve.edges.size(), false);

  std::queue<int> q;
  q.push(options.root);
  tree.depth[options.root] = 0;
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (int e : adj[x]) {
      const int y = curve.edges[e].v == x ? curve.edges[e].w : curve.edges[e].v;
      if (tree.depth[y] >= 0) continue;
      tree.depth[y] = tree.depth[x] + 1;
      tree.parent[y] = x;
      tree.parent_edge[y] = e;
      in_tree[e] = true;
      q.push(y);
    }
  }
  if (std::find(tree.depth.begin(), tree.depth.end(), -1) != tree.depth.end()) {
    throw Error(ErrorCode::DisconnectedCurve, "curve graph is not connected");
  }
  for (std::size_t e = 0; e < curve.edges.size(); ++e) {
    (in_tree[e] ? tree.tree_edges : tree.non_tree_edges).push_back(static_cast<int>(e));
  }
  tree.edge_order = tree.non_tree_edges;
  tree.edge_order.insert(tree.edge_order.end(), tree.tree_edges.begin(), tree.tree_edges.end());
  return tree;
}

std::vector<std::pair<int, int>> tree_path(const TropicalCurve& curve, const SpanningTree& tree, int from, int to) {
  std::vector<std::pair<int, int>> up;    // from -> lca
  std::vector<std::pair<int, int>> down;  // to -> lca, reversed later
  int a = from;
  int b = to;
  const auto step = [&](int& x, std::vector<std::pair<int, int>>& out) {
    const int e = tree.parent_edge[x];
    out.emplace_back(e, curve.edges[e].v == x ? +1 : -1);
    x = tree.parent[x];
  };
  while (tree.depth[a] > tree.depth[b]) step(a, up);
  while (tree.depth[b] > tree.depth[a]) step(b, down);
  while (a != b) {
    step(a, up);
    step(b, down);
  }
  for (auto it = down.rbegin(); it != down.rend(); ++it) up.emplace_back(it->first, -it->second);
  return up;
}

CycleBasis fundamental_cycles(const TropicalCurve& curve, const SpanningTree& tree) {
  CycleBasis basis;
  basis.num_edges = curve.num_edges();
  for (int j : tree.non_tree_edges) {
    const auto& e = curve.edges[j];
    Cycle cycle;
    cycle.generator = j;
    cycle.edges.emplace_back(j, +1);
    for (const auto& step : tree_path(curve, tree, e.w, e.v)) cycle.edges.push_back(step);

    int x = e.v;
    for (const auto& [id, sign] : cycle.edges) {
      cycle.walk.push_back(x);
      x = sign > 0 ? curve.edges[id].w : curve.edges[id].v;
    }
    std::vector<Point2> pts;
    for (int v : cycle.walk) pts.push_back(curve.vertices[v].position);
    cycle.walk_is_ccw = signed_area(pts).sign() > 0;
    cycle.region = cycle_region(pts);

    std::vector<int> row(curve.edges.size(), 0);
    for (const auto& [id, sign] : cycle.edges) row[id] += sign;
    basis.gamma.push_back(std::move(row));
    basis.cycles.push_back(std::move(cycle));
  }
  return basis;
}

int h1_rank(const TropicalCurve& curve) { return curve.num_edges() - curve.num_vertices() + 1; }

namespace {

int orient(const Point2& a, const Point2& b, const Point2& c) { return cross(b - a, c - a).sign(); }

bool on_segment(const Point2& a, const Point2& b, const Point2& p) {
  if (orient(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool segments_meet(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  const int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b);
}

}  // namespace

std::vector<Point2> cycle_region(std::span<const Point2> cycle) {
  const std::size_t n = cycle.size();
  if (n < 3) throw Error(ErrorCode::NonSimpleCycle, "cycle has fewer than three corners");
  std::set<Point2> distinct(cycle.begin(), cycle.end());
  if (distinct.size() != n) throw Error(ErrorCode::NonSimpleCycle, "cycle revisits a point");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the closing segment
      if (segments_meet(cycle[i], cycle[(i + 1) % n], cycle[j], cycle[(j + 1) % n])) {
        throw Error(ErrorCode::NonSimpleCycle, "cycle self-intersects");
      }
    }
  }
  const Rat area = signed_area(cycle);
  if (area.is_zero()) throw Error(ErrorCode::NonSimpleCycle, "cycle bounds zero area");
  std::vector<Point2> out(cycle.begin(), cycle.end());
  if (area.sign() < 0) std::reverse(out.begin(), out.end());
  return out;
}

bool on_boundary(std::span<const Point2> polygon, const Point2& p) {
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    if (on_segment(polygon[i], polygon[(i + 1) % polygon.size()], p)) return true;
  }
  return false;
}

bool strictly_inside(std::span<const Point2> polygon, const Point2& p) {
  if (on_boundary(polygon, p)) return false;
  // Crossing parity with a horizontal ray towards +x (half-open rule).
  bool inside = false;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point2& a = polygon[i];
    const Point2& b = polygon[(i + 1) % polygon.size()];
    if ((a.y > p.y) != (b.y > p.y)) {
      const Rat x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (x > p.x) inside = !inside;
    }
  }
  return inside;
}

}  // namespace tropjac
