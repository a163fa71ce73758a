#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "tropjac/corpus.hpp"
#include "tropjac/homology.hpp"

using namespace tropjac;

namespace {

TropicalCurve line_curve() { return build_curve(parse_polynomial("convention max\n0 0 0\n1 0 0\n0 1 0\n")); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::IoError;
}

// Boundary of a cycle as a vertex chain: sum over edges of sign * (w - v).
std::vector<int> boundary(const TropicalCurve& c, const std::vector<int>& row) {
  std::vector<int> out(c.vertices.size(), 0);
  for (int i = 0; i < c.num_edges(); ++i) {
    out[c.edges[i].w] += row[i];
    out[c.edges[i].v] -= row[i];
  }
  return out;
}

}  // namespace

TEST_CASE("line has an empty cycle basis") {
  const auto c = line_curve();
  const auto tree = spanning_tree(c);
  CHECK(tree.genus() == 0);
  CHECK(h1_rank(c) == 0);
  CHECK(fundamental_cycles(c, tree).genus() == 0);
}

TEST_CASE("cubic cycle") {
  const auto c = build_curve(paraboloid_polynomial(triangle_polygon(3)));
  const auto tree = spanning_tree(c);
  REQUIRE(tree.genus() == 1);
  CHECK(static_cast<int>(tree.tree_edges.size()) == c.num_vertices() - 1);
  CHECK(tree.edge_order.front() == tree.non_tree_edges[0]);
  const auto basis = fundamental_cycles(c, tree);
  REQUIRE(basis.genus() == 1);
  const auto faces = oracle::bounded_faces(c);
  REQUIRE(faces.size() == 1);
  std::set<int> on_cycle;
  for (int i = 0; i < c.num_edges(); ++i) {
    if (basis.gamma[0][i] != 0) on_cycle.insert(i);
  }
  CHECK(on_cycle == faces[0]);
  CHECK(on_cycle.size() == 4);
  const auto& region = basis.cycles[0].region;
  CHECK(signed_area(region) == Rat(4));
  CHECK(strictly_inside(region, Point2{Rat(2), Rat(2)}));
  CHECK_FALSE(strictly_inside(region, Point2{Rat(1), Rat(2)}));
  CHECK(on_boundary(region, Point2{Rat(1), Rat(2)}));
}

TEST_CASE("quartic and the corpus: cycles against the face oracle") {
  for (const auto& entry : builtin_corpus()) {
    const auto& c = *entry.curve;
    for (const auto& options : {TreeOptions{}, TreeOptions{c.num_vertices() - 1, true}}) {
      const auto tree = spanning_tree(c, options);
      const auto basis = fundamental_cycles(c, tree);
      CHECK(basis.genus() == h1_rank(c));
      CHECK(basis.genus() == genus(newton_complex(entry.polynomial)));
      CHECK(oracle::bounded_faces(c).size() == static_cast<std::size_t>(basis.genus()));
      for (int j = 0; j < basis.genus(); ++j) {
        for (int k = 0; k < basis.genus(); ++k) {
          CHECK(basis.gamma[j][tree.non_tree_edges[k]] == (j == k ? 1 : 0));
        }
        for (int x : boundary(c, basis.gamma[j])) CHECK(x == 0);
        const auto& cyc = basis.cycles[j];
        CHECK(signed_area(cyc.region) > Rat(0));
        CHECK(cyc.walk.front() == c.edges[cyc.generator].v);
        CHECK(cyc.edges.front() == std::pair<int, int>{cyc.generator, 1});
      }
    }
  }
  const auto quartic = build_curve(paraboloid_polynomial(triangle_polygon(4)));
  CHECK(h1_rank(quartic) == 3);
}

TEST_CASE("genus two curve") {
  const auto c = build_curve(paraboloid_polynomial(rectangle_polygon(3, 2)));
  CHECK(h1_rank(c) == 2);
  CHECK(oracle::bounded_faces(c).size() == 2);
}

TEST_CASE("tree paths") {
  const auto c = build_curve(paraboloid_polynomial(triangle_polygon(4)));
  const auto tree = spanning_tree(c);
  for (int a = 0; a < c.num_vertices(); ++a) {
    for (int b = 0; b < c.num_vertices(); ++b) {
      const auto path = tree_path(c, tree, a, b);
      int at = a;
      for (const auto& [e, s] : path) {
        CHECK(std::find(tree.tree_edges.begin(), tree.tree_edges.end(), e) != tree.tree_edges.end());
        CHECK(at == (s > 0 ? c.edges[e].v : c.edges[e].w));
        at = s > 0 ? c.edges[e].w : c.edges[e].v;
      }
      CHECK(at == b);
    }
  }
}

TEST_CASE("cycle_region") {
  const std::vector<Point2> cw{{Rat(0), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}, {Rat(1), Rat(0)}};
  const auto region = cycle_region(cw);
  CHECK(signed_area(region) == Rat(1));
  CHECK(strictly_inside(region, Point2{Rat(1, 2), Rat(1, 2)}));
  CHECK_FALSE(strictly_inside(region, Point2{Rat(1), Rat(1, 2)}));
  CHECK_FALSE(strictly_inside(region, Point2{Rat(2), Rat(1, 2)}));
  const std::vector<Point2> bowtie{{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  CHECK(code_of([&] { cycle_region(bowtie); }) == ErrorCode::NonSimpleCycle);
  const std::vector<Point2> repeat{{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(0)}, {Rat(0), Rat(1)}};
  CHECK(code_of([&] { cycle_region(repeat); }) == ErrorCode::NonSimpleCycle);
  const std::vector<Point2> flat{{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(2), Rat(0)}};
  CHECK(code_of([&] { cycle_region(flat); }) == ErrorCode::NonSimpleCycle);
}
