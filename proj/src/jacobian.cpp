#include "tropjac/jacobian.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tropjac {

PathVector& PathVector::operator+=(const PathVector& o) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += o.x[i];
  return *this;
}

PathVector& PathVector::operator-=(const PathVector& o) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] -= o.x[i];
  return *this;
}

PathVector operator*(const Rat& k, PathVector a) {
  for (auto& v : a.x) v *= k;
  return a;
}

namespace {

Rat determinant(RatMatrix m) {
  const std::size_t n = m.size();
  Rat det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c].is_zero()) ++pivot;
    if (pivot == n) return Rat(0);
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      const Rat f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

}  // namespace

bool PeriodMatrix::symmetric() const {
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (q[i][j] != q[j][i]) return false;
    }
  }
  return true;
}

std::vector<Rat> PeriodMatrix::leading_minors() const {
  std::vector<Rat> out;
  for (std::size_t k = 1; k <= q.size(); ++k) {
    RatMatrix block(k);
    for (std::size_t i = 0; i < k; ++i) block[i].assign(q[i].begin(), q[i].begin() + static_cast<long>(k));
    out.push_back(tropjac::determinant(std::move(block)));
  }
  return out;
}

Rat PeriodMatrix::determinant() const { return tropjac::determinant(q); }

bool PeriodMatrix::positive_definite() const {
  const auto minors = leading_minors();
  return symmetric() && std::all_of(minors.begin(), minors.end(), [](const Rat& m) { return m.sign() > 0; });
}

RatVector PeriodMatrix::solve(std::span<const Rat> v) const {
  const std::size_t n = q.size();
  if (v.size() != n) throw std::invalid_argument("PeriodMatrix::solve: size mismatch");
  RatMatrix m = q;
  RatVector b(v.begin(), v.end());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c].is_zero()) ++pivot;
    if (pivot == n) throw Error(ErrorCode::SingularPeriodMatrix, "period matrix is singular");
    std::swap(m[pivot], m[c]);
    std::swap(b[pivot], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      const Rat f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= m[i][i];
  return b;
}

RatVector PeriodMatrix::apply(std::span<const Rat> t) const {
  RatVector out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t k = 0; k < t.size(); ++k) out[i] += q[i][k] * t[k];
  }
  return out;
}

bool JacobianPoint::is_zero() const {
  return std::all_of(representative.begin(), representative.end(), [](const Rat& r) { return r.is_zero(); });
}

std::string format_vector(std::span<const Rat> v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ']';
  return os.str();
}

std::vector<PathVector> cycle_vectors(const IncidenceMatrix& gamma, std::span<const Rat> lengths) {
  std::vector<PathVector> out;
  for (const auto& row : gamma) {
    PathVector a(lengths.size());
    for (std::size_t i = 0; i < lengths.size(); ++i) a.x[i] = Rat(row[i]) * lengths[i];
    out.push_back(std::move(a));
  }
  return out;
}

PeriodMatrix period_matrix(const IncidenceMatrix& gamma, std::span<const Rat> lengths) {
  const std::size_t g = gamma.size();
  PeriodMatrix pm;
  pm.q.assign(g, RatVector(g));
  for (std::size_t j = 0; j < g; ++j) {
    for (std::size_t k = 0; k < g; ++k) {
      for (std::size_t i = 0; i < lengths.size(); ++i) {
        const int s = gamma[j][i] * gamma[k][i];
        if (s != 0) pm.q[j][k] += Rat(s) * lengths[i];
      }
    }
  }
  return pm;
}

RatVector phi(const PathVector& x, const IncidenceMatrix& gamma) {
  RatVector out(gamma.size());
  for (std::size_t j = 0; j < gamma.size(); ++j) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (gamma[j][i] != 0) out[j] += Rat(gamma[j][i]) * x.x[i];
    }
  }
  return out;
}

std::vector<Rat> edge_lengths(const TropicalCurve& curve) {
  std::vector<Rat> out;
  for (const auto& e : curve.edges) out.push_back(e.length);
  return out;
}

void require_reduced(const TropicalCurve& curve) {
  if (!is_reduced(curve)) throw Error(ErrorCode::NotReduced, "curve has an edge or ray of weight > 1");
}

std::vector<PathVector> cycle_vectors(const TropicalCurve& curve, const CycleBasis& basis) {
  require_reduced(curve);
  return cycle_vectors(basis.gamma, edge_lengths(curve));
}

PeriodMatrix period_matrix(const TropicalCurve& curve, const CycleBasis& basis) {
  require_reduced(curve);
  return period_matrix(basis.gamma, edge_lengths(curve));
}

namespace {

std::vector<PathVector> tree_vertex_paths(const TropicalCurve& curve, const SpanningTree& tree) {
  const std::size_t n = curve.vertices.size();
  std::vector<PathVector> paths(n, PathVector(curve.edges.size()));
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return tree.depth[a] < tree.depth[b]; });
  for (int v : order) {
    const int e = tree.parent_edge[v];
    if (e < 0) continue;
    paths[v] = paths[tree.parent[v]];
    const auto& edge = curve.edges[e];
    paths[v].x[e] += edge.v == tree.parent[v] ? edge.length : -edge.length;
  }
  return paths;
}

PathVector point_path(const TropicalCurve& curve, const std::vector<PathVector>& vertex_paths,
                      const CurvePoint& p) {
  switch (p.kind) {
    case CurvePoint::Kind::Vertex:
      return vertex_paths.at(p.id);
    case CurvePoint::Kind::OnEdge: {
      PathVector out = vertex_paths.at(curve.edges.at(p.id).v);
      out.x[p.id] += p.offset;
      return out;
    }
    case CurvePoint::Kind::OnRay:
      return vertex_paths.at(curve.rays.at(p.id).vertex);
  }
  return {};
}

}  // namespace

PathVector path_vector(const TropicalCurve& curve, const SpanningTree& tree, const CurvePoint& p) {
  return point_path(curve, tree_vertex_paths(curve, tree), p);
}

PathVector walk_vector(const TropicalCurve& curve, std::span<const std::pair<int, int>> walk) {
  PathVector out(curve.edges.size());
  for (const auto& [e, sign] : walk) out.x[e] += Rat(sign) * curve.edges[e].length;
  return out;
}

JacobianPoint reduce_mod_lattice(std::span<const Rat> v, const PeriodMatrix& q) {
  JacobianPoint out;
  out.coordinates = q.solve(v);
  for (auto& t : out.coordinates) t = t.frac();
  out.representative = q.apply(out.coordinates);
  return out;
}

Jacobian::Jacobian(CurveHandle curve, TreeOptions options) : curve_(std::move(curve)) {
  require_reduced(*curve_);
  tree_ = spanning_tree(*curve_, options);
  basis_ = fundamental_cycles(*curve_, tree_);
  period_ = tropjac::period_matrix(basis_.gamma, edge_lengths(*curve_));
  vertex_paths_ = tree_vertex_paths(*curve_, tree_);
}

PathVector Jacobian::path_vector(const CurvePoint& p) const { return point_path(*curve_, vertex_paths_, p); }

RatVector Jacobian::lift(const Divisor& d) const {
  if (!same_carrier(*d.carrier(), *curve_)) {
    throw Error(ErrorCode::CarrierMismatch, "divisor is not on this curve");
  }
  RatVector sum(genus());
  for (const auto& [p, c] : d.terms()) {
    const RatVector v = phi(path_vector(p));
    for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += Rat(c) * v[j];
  }
  return sum;
}

JacobianPoint Jacobian::abel_jacobi(const Divisor& d) const { return reduce_mod_lattice(lift(d), period_); }

bool Jacobian::equivalent(const Divisor& d, const Divisor& e) const {
  return d.degree() == e.degree() && abel_jacobi(d - e).is_zero();
}

JacobianPoint abel_jacobi(const TropicalCurve& curve, const CycleBasis& basis, const SpanningTree& tree,
                          const Divisor& d) {
  require_reduced(curve);
  if (!same_carrier(*d.carrier(), curve)) throw Error(ErrorCode::CarrierMismatch, "divisor is not on this curve");
  const auto paths = tree_vertex_paths(curve, tree);
  RatVector sum(basis.genus());
  for (const auto& [p, c] : d.terms()) {
    const RatVector v = phi(point_path(curve, paths, p), basis.gamma);
    for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += Rat(c) * v[j];
  }
  return reduce_mod_lattice(sum, period_matrix(basis.gamma, edge_lengths(curve)));
}

bool linearly_equivalent(const CurveHandle& curve, const Divisor& d, const Divisor& e) {
  return Jacobian(curve).equivalent(d, e);
}

Divisor translation_pair_divisor(const CurveHandle& curve, int edge, const Rat& p, const Rat& p_prime,
                                 const Rat& q, const Rat& q_prime) {
  if (edge < 0 || edge >= curve->num_edges()) {
    throw Error(ErrorCode::HypothesisViolated, "edge id out of range");
  }
  const Rat& len = curve->edges[edge].length;
  for (const Rat* r : {&p, &p_prime, &q, &q_prime}) {
    if (r->sign() < 0 || *r > len) throw Error(ErrorCode::HypothesisViolated, "offset outside the edge");
  }
  if (p_prime - p != q_prime - q) {
    throw Error(ErrorCode::HypothesisViolated, "PP' and QQ' are different translations");
  }
  Divisor d(curve);
  d.add(on_edge(*curve, edge, p_prime), 1);
  d.add(on_edge(*curve, edge, p), -1);
  d.add(on_edge(*curve, edge, q_prime), -1);
  d.add(on_edge(*curve, edge, q), 1);
  return d;
}

TropicalPolynomial random_polynomial(const NewtonPolygon& polygon, SampleStream& rng) {
  TropicalPolynomial::TermMap terms;
  for (const auto& p : polygon.lattice_points()) terms.emplace(p, rng.rational(8, 6));
  return TropicalPolynomial(std::move(terms));
}

SigmaConstancyReport verify_sigma_constancy(const Jacobian& jac, const NewtonPolygon& polygon, int samples,
                                            std::uint64_t seed) {
  if (samples <= 0) throw Error(ErrorCode::ConfigError, "sample count must be positive");
  SigmaConstancyReport report;
  for (int k = 0; k < samples; ++k) {
    SampleStream rng(seed, "sigma", static_cast<std::uint64_t>(k));
    const TropicalCurve l = build_curve(random_polynomial(polygon, rng));
    const Divisor d = stable_intersection(jac.curve(), l);
    report.degrees.push_back(d.degree());
    report.values.push_back(jac.abel_jacobi(d));
    if (report.constant && !(report.values.back() == report.values.front())) {
      report.constant = false;
      report.first_mismatch = static_cast<std::size_t>(k);
    }
  }
  return report;
}

SigmaConstancyReport verify_sigma_constancy(const CurveHandle& curve, const NewtonPolygon& polygon, int samples,
                                            std::uint64_t seed) {
  return verify_sigma_constancy(Jacobian(curve), polygon, samples, seed);
}

JacobianSummary jacobian_summary(const CurveHandle& curve) {
  const Jacobian jac(curve);
  JacobianSummary s;
  s.genus = jac.genus();
  s.period = jac.period();
  s.determinant = s.period.determinant();
  s.minors = s.period.leading_minors();
  s.positive_definite = s.period.positive_definite();
  return s;
}

}  // namespace tropjac
