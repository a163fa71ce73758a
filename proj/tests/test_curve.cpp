#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "tropjac/corpus.hpp"
#include "tropjac/curve.hpp"

using namespace tropjac;

namespace {

TropicalPolynomial poly(const char* body) { return parse_polynomial(std::string("convention max\n") + body); }

std::vector<IntVec2> ray_directions(const TropicalCurve& c) {
  std::vector<IntVec2> out;
  for (const auto& r : c.rays) out.push_back(r.direction);
  std::sort(out.begin(), out.end());
  return out;
}

Point2 P(Rat x, Rat y) { return {std::move(x), std::move(y)}; }

}  // namespace

TEST_CASE("standard line") {
  const auto c = build_curve(poly("0 0 0\n1 0 0\n0 1 0\n"));
  REQUIRE(c.num_vertices() == 1);
  CHECK(c.vertices[0].position == P(0, 0));
  CHECK(c.edges.empty());
  CHECK(ray_directions(c) == std::vector<IntVec2>{{-1, 0}, {0, -1}, {1, 1}});
  CHECK(check_balancing(c).balanced);
  CHECK(is_reduced(c));
}

TEST_CASE("translated line") {
  // max(x - 2, y - 1, 0)
  const auto c = build_curve(poly("1 0 -2\n0 1 -1\n0 0 0\n"));
  REQUIRE(c.num_vertices() == 1);
  CHECK(c.vertices[0].position == P(2, 1));
  CHECK(ray_directions(c) == std::vector<IntVec2>{{-1, 0}, {0, -1}, {1, 1}});
  const auto t = build_curve(poly("0 0 0\n1 0 0\n0 1 0\n").translated(P(2, 1)));
  CHECK(t == c);
}

TEST_CASE("paraboloid cubic against the corner oracle") {
  const auto f = paraboloid_polynomial(triangle_polygon(3));
  const auto c = build_curve(f);
  const auto oracle = oracle::corner_vertices(f);
  REQUIRE(c.num_vertices() == static_cast<int>(oracle.size()));
  for (const auto& v : c.vertices) CHECK(oracle.count(v.position) == 1);
  // Frozen oracle output.
  std::vector<Point2> positions;
  for (const auto& v : c.vertices) positions.push_back(v.position);
  std::sort(positions.begin(), positions.end());
  CHECK(positions == std::vector<Point2>{P(1, 1), P(1, 3), P(1, 5), P(3, 1), P(3, 3), P(5, 1)});
  CHECK(c.num_edges() == 6);
  CHECK(c.rays.size() == 9);
  for (const auto& e : c.edges) {
    CHECK(e.length == Rat(2));
    CHECK(c.vertices[e.w].position - c.vertices[e.v].position == e.length * Point2(e.direction));
  }
  CHECK(check_balancing(c).balanced);
}

TEST_CASE("balancing detects a broken vertex") {
  auto c = build_curve(poly("0 0 0\n1 0 0\n0 1 0\n"));
  // Keep only the rays (-1,0) and (0,-1).
  std::erase_if(c.rays, [](const CurveRay& r) { return r.direction == IntVec2{1, 1}; });
  const auto report = check_balancing(c);
  CHECK_FALSE(report.balanced);
  CHECK(report.unbalanced_vertices == std::vector<int>{0});
  auto heavy = build_curve(poly("0 0 0\n1 0 0\n0 1 0\n"));
  heavy.rays[0].weight = 2;
  CHECK_FALSE(check_balancing(heavy).balanced);
}

TEST_CASE("weights and reducedness") {
  const auto doubled = build_curve(poly("2 0 0\n0 2 0\n0 0 0\n"));
  CHECK(check_balancing(doubled).balanced);
  CHECK_FALSE(is_reduced(doubled));
  for (const auto& r : doubled.rays) CHECK(r.weight == 2);
  for (const auto& entry : builtin_corpus()) CHECK(is_reduced(*entry.curve));
}

TEST_CASE("point location") {
  const auto line = build_curve(poly("0 0 0\n1 0 0\n0 1 0\n"));
  CHECK(locate_point(line, P(0, 0)) == CurvePoint::vertex(0));
  const auto p = locate_point(line, P(Rat(-5, 2), 0));
  CHECK(p.kind == CurvePoint::Kind::OnRay);
  CHECK(line.rays[p.id].direction == IntVec2{-1, 0});
  CHECK(p.offset == Rat(5, 2));
  const auto q = locate_point(line, P(3, 3));
  CHECK(q.kind == CurvePoint::Kind::OnRay);
  CHECK(q.offset == Rat(3));
  try {
    locate_point(line, P(1, 0));
    FAIL("expected NotOnCurve");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotOnCurve);
  }

  const auto cubic = build_curve(paraboloid_polynomial(triangle_polygon(3)));
  CHECK_THROWS_AS(locate_point(cubic, P(2, 2)), Error);
  CHECK_THROWS_AS(on_edge(cubic, 0, Rat(3)), Error);
  CHECK_THROWS_AS(on_ray(cubic, 0, Rat(-1)), Error);
  CHECK(on_edge(cubic, 0, Rat(0)) == CurvePoint::vertex(cubic.edges[0].v));
  CHECK(on_edge(cubic, 0, Rat(2)) == CurvePoint::vertex(cubic.edges[0].w));
  for (int e = 0; e < cubic.num_edges(); ++e) {
    for (const Rat& t : {Rat(1, 3), Rat(1), Rat(7, 4)}) {
      const auto pt = on_edge(cubic, e, t);
      CHECK(locate_point(cubic, coordinates(cubic, pt)) == pt);
    }
  }
  for (int r = 0; r < static_cast<int>(cubic.rays.size()); ++r) {
    const auto pt = on_ray(cubic, r, Rat(9, 2));
    CHECK(locate_point(cubic, coordinates(cubic, pt)) == pt);
  }
  CHECK(describe(on_edge(cubic, 1, Rat(1, 2))) == "edge 1 1/2");
}

TEST_CASE("duality counts over the corpus") {
  for (const auto& entry : builtin_corpus()) {
    const auto ncx = newton_complex(entry.polynomial);
    const auto& c = *entry.curve;
    std::size_t interior = 0, boundary = 0;
    for (const auto& s : ncx.cells1) (s.is_boundary() ? boundary : interior) += 1;
    CHECK(c.vertices.size() == ncx.cells2.size());
    CHECK(c.edges.size() == interior);
    CHECK(c.rays.size() == boundary);
    for (const auto& e : c.edges) {
      const auto& s = ncx.cells1[e.dual];
      CHECK(dot(e.direction, s.b - s.a) == 0);
      CHECK(e.weight == lattice_length(s.b - s.a));
    }
  }
}
