#pragma once

// Spanning trees and fundamental cycles of a tropical curve's finite graph.

#include <span>
#include <vector>

#include "tropjac/curve.hpp"

namespace tropjac {

struct TreeOptions {
  int root = 0;
  bool reverse_edge_order = false;
};

/// Breadth-first spanning tree. Non-tree edges E_1..E_g come first in
/// `edge_order`; `non_tree_edges[j]` is the original id of E_{j+1}.
struct SpanningTree {
  int root = 0;
  std::vector<int> tree_edges;
  std::vector<int> non_tree_edges;
  std::vector<int> edge_order;
  std::vector<int> parent_edge;  // per vertex, -1 at the root
  std::vector<int> parent;       // per vertex, -1 at the root
  std::vector<int> depth;

  int genus() const { return static_cast<int>(non_tree_edges.size()); }
};

SpanningTree spanning_tree(const TropicalCurve& curve, TreeOptions options = {});

/// Tree path between two vertices as (edge id, +1 if traversed from V_i).
std::vector<std::pair<int, int>> tree_path(const TropicalCurve& curve, const SpanningTree& tree, int from, int to);

struct Cycle {
  int generator = -1;                       // non-tree edge id
  std::vector<int> walk;                    // closed vertex walk, first vertex is V of the generator
  std::vector<std::pair<int, int>> edges;   // (edge id, sign) in walk order
  std::vector<Point2> region;               // bounded region, counterclockwise
  bool walk_is_ccw = true;                  // orientation of `walk` (and of gamma)
};

/// gamma[j][i] is +1 if cycle j runs along E_i from V_i, -1 against, 0 off the
/// cycle. Columns are original edge ids; gamma[j][non_tree_edges[k]] = delta_jk.
struct CycleBasis {
  int num_edges = 0;
  std::vector<std::vector<int>> gamma;
  std::vector<Cycle> cycles;

  int genus() const { return static_cast<int>(cycles.size()); }
};

CycleBasis fundamental_cycles(const TropicalCurve& curve, const SpanningTree& tree);

int h1_rank(const TropicalCurve& curve);

/// Closed simple polygon, returned counterclockwise. Throws NonSimpleCycle.
std::vector<Point2> cycle_region(std::span<const Point2> cycle);

/// Strict interior test for a simple polygon; boundary points are outside.
bool strictly_inside(std::span<const Point2> polygon, const Point2& p);
bool on_boundary(std::span<const Point2> polygon, const Point2& p);

}  // namespace tropjac
