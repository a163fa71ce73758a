#include <doctest.h>

#include "tropjac/numeric.hpp"
#include "tropjac/random.hpp"

using namespace tropjac;

TEST_CASE("rationals are canonical") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(3, -6).str() == "-1/2");
  CHECK(Rat::parse("-6/4") == Rat(-3, 2));
  CHECK(Rat::parse("+7") == Rat(7));
  CHECK(Rat(-7, 2).floor() == Rat(-4));
  CHECK(Rat(-7, 2).frac() == Rat(1, 2));
  CHECK_THROWS_AS(Rat::parse("1.5"), Error);
  CHECK_THROWS_AS(Rat::parse("3/0"), Error);
  CHECK_THROWS_AS(Rat::parse(""), Error);
}

TEST_CASE("primitive_vector") {
  CHECK(primitive_vector({2, 4}) == IntVec2{1, 2});
  CHECK(primitive_vector({0, -3}) == IntVec2{0, -1});
  CHECK(primitive_vector({-6, 4}) == IntVec2{-3, 2});
  try {
    primitive_vector({0, 0});
    FAIL("expected ZeroVector");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroVector);
  }
}

TEST_CASE("cross") {
  CHECK(cross(Point2{Rat(1), Rat(0)}, Point2{Rat(0), Rat(1)}) == Rat(1));
  CHECK(cross(Point2{Rat(1), Rat(1)}, Point2{Rat(1), Rat(-1)}) == Rat(-2));
  CHECK(cross(Point2{Rat(2), Rat(4)}, Point2{Rat(1), Rat(2)}) == Rat(0));
}

TEST_CASE("lattice_length") {
  const Point2 o{Rat(0), Rat(0)};
  CHECK(lattice_length(o, Point2{Rat(3), Rat(6)}) == Rat(3));
  CHECK(lattice_length(o, Point2{Rat(1, 2), Rat(0)}) == Rat(1, 2));
  CHECK(lattice_length(Point2{Rat(1), Rat(1)}, Point2{Rat(1), Rat(1)}) == Rat(0));
  CHECK(lattice_length(o, Point2{Rat(2, 3), Rat(-1, 2)}) == Rat(1, 6));
}

TEST_CASE("eps_compare") {
  CHECK(eps_compare(EpsRat(Rat(0), Rat(1)), EpsRat(Rat(0))) == std::strong_ordering::greater);
  CHECK(eps_compare(EpsRat(Rat(1), Rat(-5)), EpsRat(Rat(0))) == std::strong_ordering::greater);
  CHECK(eps_compare(EpsRat(Rat(2), Rat(3)), EpsRat(Rat(2), Rat(3))) == std::strong_ordering::equal);
  CHECK(EpsRat(Rat(0), Rat(-1)).sign() < 0);
}

TEST_CASE("lattice decomposition reconstructs the displacement") {
  for (std::uint64_t k = 0; k < 200; ++k) {
    SampleStream rng(1, "numeric", k);
    const Point2 p{rng.rational(10, 7), rng.rational(10, 7)};
    const Point2 q{rng.rational(10, 7), rng.rational(10, 7)};
    if (p == q) continue;
    const Point2 d = q - p;
    const Rat len = lattice_length(p, q);
    const IntVec2 dir = lattice_decompose(d).direction;
    CHECK(len.sign() > 0);
    CHECK(primitive_vector(dir) == dir);
    CHECK(len * Point2(dir) == d);
  }
}

TEST_CASE("cross is bilinear and antisymmetric") {
  for (std::uint64_t k = 0; k < 200; ++k) {
    SampleStream rng(2, "cross", k);
    const IntVec2 u{rng.uniform(-50, 50), rng.uniform(-50, 50)};
    const IntVec2 v{rng.uniform(-50, 50), rng.uniform(-50, 50)};
    const IntVec2 w{rng.uniform(-50, 50), rng.uniform(-50, 50)};
    const std::int64_t a = rng.uniform(-9, 9);
    CHECK(cross(u, v) == -cross(v, u));
    CHECK(cross(a * u + w, v) == a * cross(u, v) + cross(w, v));
    CHECK(cross(Point2(u), Point2(v)) == Rat(cross(u, v)));
  }
}

TEST_CASE("EpsRat restricted to standard parts agrees with Rat") {
  for (std::uint64_t k = 0; k < 200; ++k) {
    SampleStream rng(3, "eps", k);
    const Rat a = rng.rational(20, 9), b = rng.rational(20, 9);
    CHECK((EpsRat(a) + EpsRat(b)) == EpsRat(a + b));
    CHECK((EpsRat(a) - EpsRat(b)) == EpsRat(a - b));
    CHECK((EpsRat(a) * EpsRat(b)) == EpsRat(a * b));
    CHECK((EpsRat(a) <=> EpsRat(b)) == (a <=> b));
  }
  // eps^2 = 0
  CHECK(EpsRat(Rat(0), Rat(1)) * EpsRat(Rat(0), Rat(1)) == EpsRat(Rat(0)));
}

TEST_CASE("sample streams are reproducible and independent") {
  SampleStream a(7, "x", 3), b(7, "x", 3), c(7, "y", 3);
  const auto va = a.next();
  CHECK(va == b.next());
  CHECK(va != c.next());
}
