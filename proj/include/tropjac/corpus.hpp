#pragma once

#include <string>
#include <vector>

#include "tropjac/intersection.hpp"
#include "tropjac/polynomial.hpp"

namespace tropjac {

struct CorpusCurve {
  std::string name;
  TropicalPolynomial polynomial;
  CurveHandle curve;
};

/// c_ij = -(i^2 + j^2) on every lattice point of `polygon`.
TropicalPolynomial paraboloid_polynomial(const NewtonPolygon& polygon);

/// Built-in reduced curves: triangles of size 1..4 and rectangles up to 3x3,
/// each with the paraboloid lift, a perturbed paraboloid and a random concave
/// quadratic lift. Fixed content (independent of any run seed).
std::vector<CorpusCurve> builtin_corpus();

CorpusCurve make_corpus_curve(std::string name, TropicalPolynomial polynomial);

}  // namespace tropjac
