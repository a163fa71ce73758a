#include "tropjac/corpus.hpp"

#include "tropjac/random.hpp"

namespace tropjac {

namespace {

constexpr std::uint64_t kCorpusSeed = 20061227;

// |r| <= 1/5: below half the strict-concavity margin of both lift families,
// so every lattice point stays a vertex of the upper hull and all cells are
// unimodular or unit squares.
Rat small_perturbation(SampleStream& rng) { return rng.rational(1, 9) / Rat(5); }

TropicalPolynomial perturbed_paraboloid(const NewtonPolygon& polygon, SampleStream& rng) {
  TropicalPolynomial::TermMap terms;
  for (const auto& p : polygon.lattice_points()) {
    terms.emplace(p, Rat(-(p.a * p.a + p.b * p.b)) + small_perturbation(rng));
  }
  return TropicalPolynomial(std::move(terms));
}

// -(a i^2 + b j^2 + c i j) with a, b in [1, 3] and |c| < 1 is bounded below by
// (i^2 + j^2) / 2 on the lattice.
TropicalPolynomial concave_lift(const NewtonPolygon& polygon, SampleStream& rng) {
  const Rat a = Rat(1) + (rng.rational(1, 8) + Rat(1));
  const Rat b = Rat(1) + (rng.rational(1, 8) + Rat(1));
  const Rat c = rng.rational(1, 8) * Rat(9, 10);
  TropicalPolynomial::TermMap terms;
  for (const auto& p : polygon.lattice_points()) {
    const Rat i(p.a), j(p.b);
    terms.emplace(p, -(a * i * i + b * j * j + c * i * j) + small_perturbation(rng));
  }
  return TropicalPolynomial(std::move(terms));
}

}  // namespace

TropicalPolynomial paraboloid_polynomial(const NewtonPolygon& polygon) {
  TropicalPolynomial::TermMap terms;
  for (const auto& p : polygon.lattice_points()) terms.emplace(p, Rat(-(p.a * p.a + p.b * p.b)));
  return TropicalPolynomial(std::move(terms));
}

CorpusCurve make_corpus_curve(std::string name, TropicalPolynomial polynomial) {
  CurveHandle curve = share(build_curve(polynomial));
  return {std::move(name), std::move(polynomial), std::move(curve)};
}

std::vector<CorpusCurve> builtin_corpus() {
  std::vector<std::pair<std::string, NewtonPolygon>> shapes;
  for (int d = 1; d <= 4; ++d) shapes.emplace_back("triangle" + std::to_string(d), triangle_polygon(d));
  for (auto [w, h] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}}) {
    shapes.emplace_back("rect" + std::to_string(w) + "x" + std::to_string(h), rectangle_polygon(w, h));
  }
  std::vector<CorpusCurve> out;
  std::uint64_t index = 0;
  for (const auto& [name, polygon] : shapes) {
    out.push_back(make_corpus_curve(name + "/paraboloid", paraboloid_polynomial(polygon)));
    SampleStream perturb(kCorpusSeed, "corpus-perturbed", index);
    out.push_back(make_corpus_curve(name + "/perturbed", perturbed_paraboloid(polygon, perturb)));
    SampleStream concave(kCorpusSeed, "corpus-concave", index);
    out.push_back(make_corpus_curve(name + "/concave", concave_lift(polygon, concave)));
    ++index;
  }
  return out;
}

}  // namespace tropjac
