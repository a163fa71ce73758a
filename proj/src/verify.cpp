#include "tropjac/verify.hpp"

#include <algorithm>
#include <sstream>

namespace tropjac {

namespace {

constexpr std::size_t kMaxWitnesses = 8;

template <typename Fn>
void guarded(CheckResult& result, const std::string& label, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    result.fail(label + ": " + e.what());
  }
}

Rat unit_rational(SampleStream& rng) { return Rat(rng.uniform(0, 997), 997); }

std::vector<const CorpusCurve*> with_genus(const std::vector<CorpusCurve>& corpus) {
  std::vector<const CorpusCurve*> out;
  for (const auto& c : corpus) {
    if (is_reduced(*c.curve) && h1_rank(*c.curve) >= 1) out.push_back(&c);
  }
  return out;
}

std::string str(const Divisor& d) {
  std::ostringstream os;
  for (const auto& [p, c] : d.terms()) os << (c > 0 ? " +" : " ") << c << "*[" << describe(p) << "]";
  return os.str();
}

}  // namespace

void CheckResult::fail(std::string witness) {
  passed = false;
  if (failures.size() < kMaxWitnesses) failures.push_back(std::move(witness));
}

CurvePoint random_curve_point(const TropicalCurve& curve, SampleStream& rng) {
  const auto kind = rng.uniform(0, curve.edges.empty() ? 1 : 2);
  if (kind == 0) return CurvePoint::vertex(static_cast<int>(rng.uniform(0, curve.num_vertices() - 1)));
  if (kind == 1) {
    const int r = static_cast<int>(rng.uniform(0, static_cast<std::int64_t>(curve.rays.size()) - 1));
    return on_ray(curve, r, Rat(rng.uniform(1, 60), rng.uniform(1, 12)));
  }
  const int e = static_cast<int>(rng.uniform(0, curve.num_edges() - 1));
  return on_edge(curve, e, curve.edges[e].length * unit_rational(rng));
}

TropicalPolynomial line_through(const Point2& vertex) {
  return TropicalPolynomial({{IntVec2{0, 0}, Rat(0)}, {IntVec2{1, 0}, -vertex.x}, {IntVec2{0, 1}, -vertex.y}});
}

CheckResult check_balancing(const std::vector<CorpusCurve>& corpus) {
  CheckResult r{"balancing"};
  for (const auto& c : corpus) {
    ++r.cases;
    const auto report = tropjac::check_balancing(*c.curve);
    if (!report.balanced) {
      r.fail(c.name + ": unbalanced at vertex " + std::to_string(report.unbalanced_vertices.front()));
    }
  }
  return r;
}

CheckResult check_duality_counts(const std::vector<CorpusCurve>& corpus) {
  CheckResult r{"duality_counts"};
  for (const auto& c : corpus) {
    ++r.cases;
    guarded(r, c.name, [&] {
      const auto ncx = newton_complex(c.polynomial);
      const auto interior = std::count_if(ncx.cells1.begin(), ncx.cells1.end(),
                                          [](const Cell1& s) { return !s.is_boundary(); });
      const auto& curve = *c.curve;
      if (curve.vertices.size() != ncx.cells2.size() || static_cast<long>(curve.edges.size()) != interior ||
          curve.rays.size() != ncx.cells1.size() - static_cast<std::size_t>(interior)) {
        r.fail(c.name + ": cell counts differ from the dual complex");
      }
      for (const auto& e : curve.edges) {
        const auto& seg = ncx.cells1[e.dual];
        const Point2 delta = curve.vertices[e.w].position - curve.vertices[e.v].position;
        if (delta != e.length * Point2(e.direction) || e.length.sign() <= 0 ||
            dot(e.direction, seg.b - seg.a) != 0 || e.weight != lattice_length(seg.b - seg.a)) {
          r.fail(c.name + ": edge geometry inconsistent with its dual segment");
        }
      }
    });
  }
  return r;
}

CheckResult check_genus_identity(const std::vector<CorpusCurve>& corpus) {
  CheckResult r{"genus_equals_h1_rank"};
  for (const auto& c : corpus) {
    if (!is_reduced(*c.curve)) continue;
    ++r.cases;
    guarded(r, c.name, [&] {
      const int g = genus(newton_complex(c.polynomial));
      const int h = h1_rank(*c.curve);
      if (g != h) r.fail(c.name + ": genus " + std::to_string(g) + " != h1 rank " + std::to_string(h));
    });
  }
  return r;
}

CheckResult check_period_matrices(const std::vector<CorpusCurve>& corpus) {
  CheckResult r{"jacobian_is_g_torus"};
  for (const auto& c : corpus) {
    ++r.cases;
    guarded(r, c.name, [&] {
      const auto s = jacobian_summary(c.curve);
      const int g = genus(newton_complex(c.polynomial));
      if (s.genus != g) r.fail(c.name + ": lattice rank differs from genus");
      if (!s.period.symmetric()) r.fail(c.name + ": period matrix not symmetric");
      if (!s.positive_definite) r.fail(c.name + ": period matrix not positive definite");
    });
  }
  return r;
}

CheckResult check_bezout(const std::vector<CorpusCurve>& corpus, const SuiteOptions& options) {
  CheckResult r{"bezout"};
  const auto line = triangle_polygon(1);
  const auto conic = triangle_polygon(2);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& c = corpus[i];
    SampleStream rng(options.seed, "bezout", i);
    std::vector<std::pair<std::string, TropicalPolynomial>> partners;
    partners.emplace_back("line", random_polynomial(line, rng));
    partners.emplace_back("conic", random_polynomial(conic, rng));
    const Point2 t{rng.rational(3, 5), rng.rational(3, 5)};
    partners.emplace_back("translate", c.polynomial.translated(t));
    for (const auto& [label, poly] : partners) {
      ++r.cases;
      guarded(r, c.name + "/" + label, [&] {
        const TropicalCurve l = build_curve(poly);
        const auto deg = stable_intersection(c.curve, l).degree();
        const auto mv = mixed_volume(c.curve->polygon, l.polygon);
        if (deg != mv) {
          r.fail(c.name + "/" + label + ": degree " + std::to_string(deg) + " != mixed volume " +
                 std::to_string(mv));
        }
      });
    }
  }
  return r;
}

CheckResult check_sigma_constancy(const std::vector<CorpusCurve>& corpus, const SuiteOptions& options) {
  CheckResult r{"sigma_constancy"};
  std::uint64_t index = 0;
  for (const auto* c : with_genus(corpus)) {
    guarded(r, c->name, [&] {
      const Jacobian jac(c->curve);
      for (int d = 1; d <= 2; ++d) {
        ++r.cases;
        const std::uint64_t seed = options.seed * 1000003u + 2 * index + static_cast<std::uint64_t>(d);
        const auto report = verify_sigma_constancy(jac, triangle_polygon(d), options.sigma_samples, seed);
        if (!report.constant) {
          r.fail(c->name + ": AJ(C.L) differs at sample " + std::to_string(*report.first_mismatch) +
                 " for degree " + std::to_string(d) + ": " +
                 format_vector(report.values.front().representative) + " vs " +
                 format_vector(report.values[*report.first_mismatch].representative));
        }
      }
    });
    ++index;
  }
  return r;
}

CheckResult check_translation_pairs(const std::vector<CorpusCurve>& corpus, const SuiteOptions& options) {
  CheckResult r{"translation_pairs"};
  std::vector<const CorpusCurve*> pool;
  for (const auto& c : corpus) {
    if (!c.curve->edges.empty() && is_reduced(*c.curve)) pool.push_back(&c);
  }
  if (pool.empty()) return r;
  for (int k = 0; k < options.translation_pairs; ++k) {
    const auto& c = *pool[static_cast<std::size_t>(k) % pool.size()];
    SampleStream rng(options.seed, "translation", static_cast<std::uint64_t>(k));
    ++r.cases;
    guarded(r, c.name, [&] {
      const int e = static_cast<int>(rng.uniform(0, c.curve->num_edges() - 1));
      const Rat len = c.curve->edges[e].length;
      const Rat shift = len * unit_rational(rng);
      const Rat p = (len - shift) * unit_rational(rng);
      const Rat q = (len - shift) * unit_rational(rng);
      const Divisor d = translation_pair_divisor(c.curve, e, p, p + shift, q, q + shift);
      const Jacobian jac(c.curve);
      Divisor pp(c.curve), qq(c.curve);
      pp.add(on_edge(*c.curve, e, p + shift), 1).add(on_edge(*c.curve, e, p), -1);
      qq.add(on_edge(*c.curve, e, q + shift), 1).add(on_edge(*c.curve, e, q), -1);
      if (!jac.abel_jacobi(d).is_zero() || !jac.equivalent(pp, qq)) {
        r.fail(c.name + ": translation pair on edge " + std::to_string(e) + " not in the kernel");
      }
    });
  }
  return r;
}

CheckResult check_same_ray_pairs(const std::vector<CorpusCurve>& corpus, const SuiteOptions& options) {
  CheckResult r{"same_ray_pairs"};
  std::vector<const CorpusCurve*> pool;
  for (const auto& c : corpus) {
    if (is_reduced(*c.curve)) pool.push_back(&c);
  }
  if (pool.empty()) return r;
  for (int k = 0; k < options.same_ray_pairs; ++k) {
    const auto& c = *pool[static_cast<std::size_t>(k) % pool.size()];
    SampleStream rng(options.seed, "same-ray", static_cast<std::uint64_t>(k));
    ++r.cases;
    guarded(r, c.name, [&] {
      const int ray = static_cast<int>(rng.uniform(0, static_cast<std::int64_t>(c.curve->rays.size()) - 1));
      Divisor a(c.curve), b(c.curve);
      a.add(on_ray(*c.curve, ray, Rat(rng.uniform(1, 60), rng.uniform(1, 12))), 1);
      b.add(on_ray(*c.curve, ray, Rat(rng.uniform(1, 60), rng.uniform(1, 12))), 1);
      const Jacobian jac(c.curve);
      if (!jac.abel_jacobi(a - b).is_zero() || !jac.equivalent(a, b)) {
        r.fail(c.name + ": points of ray " + std::to_string(ray) + " not equivalent");
      }
    });
  }
  return r;
}

CheckResult check_moment_balance(const std::vector<CorpusCurve>& corpus, const SuiteOptions& options) {
  CheckResult r{"moment_balance"};
  std::uint64_t stream = 0;
  for (const auto* c : with_genus(corpus)) {
    guarded(r, c->name, [&] {
      const Jacobian jac(c->curve);
      for (const auto& cycle : jac.basis().cycles) {
        Rat xmin = cycle.region.front().x, xmax = xmin, ymin = cycle.region.front().y, ymax = ymin;
        for (const auto& p : cycle.region) {
          xmin = std::min(xmin, p.x);
          xmax = std::max(xmax, p.x);
          ymin = std::min(ymin, p.y);
          ymax = std::max(ymax, p.y);
        }
        for (int k = 0; k < options.moment_lines; ++k) {
          ++r.cases;
          bool done = false;
          for (int attempt = 0; attempt < 100 && !done; ++attempt) {
            SampleStream rng(options.seed, "moment", stream++);
            const Point2 v{xmin - Rat(1) + (xmax - xmin + Rat(2)) * unit_rational(rng),
                           ymin - Rat(1) + (ymax - ymin + Rat(2)) * unit_rational(rng)};
            const TropicalCurve l = build_curve(line_through(v));
            try {
              const Rat m = moment_balance_check(*c->curve, cycle, l);
              if (!m.is_zero()) {
                std::ostringstream os;
                os << c->name << ": moment sum " << m << " for line at " << v;
                r.fail(os.str());
              }
              done = true;
            } catch (const Error& e) {
              if (e.code() != ErrorCode::NotTransversal && e.code() != ErrorCode::VertexOnBoundary) throw;
            }
          }
          if (!done) r.fail(c->name + ": no transversal line found");
        }
      }
    });
  }
  return r;
}

CheckResult check_self_intersection(const std::vector<CorpusCurve>& corpus) {
  CheckResult r{"stable_self_intersection"};
  ++r.cases;
  guarded(r, "line", [&] {
    const CurveHandle line = share(build_curve(line_through(Point2{Rat(0), Rat(0)})));
    const Divisor d0 = stable_intersection(line, *line, choose_generic_shift(*line, *line, 0));
    const Divisor d1 = stable_intersection(line, *line, choose_generic_shift(*line, *line, 1));
    Divisor expected(line);
    expected.add(CurvePoint::vertex(0), 1);
    if (!(d0 == expected)) r.fail("line: L.L =" + str(d0));
    if (!(d0 == d1)) r.fail("line: shift dependence:" + str(d0) + " vs" + str(d1));
  });
  const auto conic = std::find_if(corpus.begin(), corpus.end(), [](const CorpusCurve& c) {
    return c.curve->polygon == triangle_polygon(2);
  });
  if (conic != corpus.end()) {
    ++r.cases;
    guarded(r, conic->name, [&] {
      const auto& c = conic->curve;
      const Divisor d0 = stable_intersection(c, *c, choose_generic_shift(*c, *c, 0));
      const Divisor d1 = stable_intersection(c, *c, choose_generic_shift(*c, *c, 1));
      if (!(d0 == d1)) r.fail(conic->name + ": shift dependence:" + str(d0) + " vs" + str(d1));
      if (d0.degree() != mixed_volume(c->polygon, c->polygon)) r.fail(conic->name + ": wrong degree");
    });
  }
  return r;
}

CheckResult check_path_independence(const std::vector<CorpusCurve>& corpus, const SuiteOptions& options) {
  CheckResult r{"aj_path_independence"};
  std::uint64_t stream = 0;
  for (const auto* c : with_genus(corpus)) {
    guarded(r, c->name, [&] {
      const Jacobian jac(c->curve);
      const auto& curve = *c->curve;
      const auto adj = incident_edges(curve);
      for (int k = 0; k < options.path_walks_per_curve; ++k) {
        ++r.cases;
        SampleStream rng(options.seed, "walk", stream++);
        const CurvePoint target = random_curve_point(curve, rng);
        // Random walk from the base vertex, then back to the tree.
        std::vector<std::pair<int, int>> walk;
        int x = jac.base_vertex();
        for (int step = 0; step < 12; ++step) {
          const auto& inc = adj[x];
          const int e = inc[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(inc.size()) - 1))];
          const bool forward = curve.edges[e].v == x;
          walk.emplace_back(e, forward ? 1 : -1);
          x = forward ? curve.edges[e].w : curve.edges[e].v;
        }
        int anchor = 0;
        switch (target.kind) {
          case CurvePoint::Kind::Vertex: anchor = target.id; break;
          case CurvePoint::Kind::OnEdge: anchor = curve.edges[target.id].v; break;
          case CurvePoint::Kind::OnRay: anchor = curve.rays[target.id].vertex; break;
        }
        for (const auto& s : tree_path(curve, jac.tree(), x, anchor)) walk.push_back(s);
        PathVector pv = walk_vector(curve, walk);
        if (target.kind == CurvePoint::Kind::OnEdge) pv.x[target.id] += target.offset;
        const auto via_walk = reduce_mod_lattice(jac.phi(pv), jac.period());
        const auto via_tree = reduce_mod_lattice(jac.phi(jac.path_vector(target)), jac.period());
        if (!(via_walk == via_tree)) r.fail(c->name + ": AJ of " + describe(target) + " depends on the path");
      }
    });
  }
  return r;
}

CheckResult check_lattice_reduction(const std::vector<CorpusCurve>& corpus, const SuiteOptions& options) {
  CheckResult r{"lattice_reduction"};
  const auto pool = with_genus(corpus);
  if (pool.empty()) return r;
  for (int k = 0; k < options.reduction_cases; ++k) {
    const auto& c = *pool[static_cast<std::size_t>(k) % pool.size()];
    SampleStream rng(options.seed, "reduce", static_cast<std::uint64_t>(k));
    ++r.cases;
    guarded(r, c.name, [&] {
      const auto q = jacobian_summary(c.curve).period;
      RatVector v, z;
      for (int j = 0; j < q.genus(); ++j) {
        v.push_back(rng.rational(20, 9));
        z.push_back(Rat(rng.uniform(-5, 5)));
      }
      const auto base = reduce_mod_lattice(v, q);
      RatVector shifted = q.apply(z);
      for (std::size_t j = 0; j < v.size(); ++j) shifted[j] += v[j];
      const bool in_cube = std::all_of(base.coordinates.begin(), base.coordinates.end(),
                                       [](const Rat& t) { return t.sign() >= 0 && t < Rat(1); });
      if (!in_cube || !(reduce_mod_lattice(base.representative, q) == base) ||
          !(reduce_mod_lattice(shifted, q) == base)) {
        r.fail(c.name + ": reduction of " + format_vector(v) + " is not canonical");
      }
    });
  }
  return r;
}

CheckResult check_tree_invariance(const std::vector<CorpusCurve>& corpus, const SuiteOptions& options) {
  CheckResult r{"tree_invariance"};
  const auto pool = with_genus(corpus);
  if (pool.empty()) return r;
  for (int k = 0; k < options.tree_invariance_pairs; ++k) {
    const auto& c = *pool[static_cast<std::size_t>(k) % pool.size()];
    SampleStream rng(options.seed, "tree", static_cast<std::uint64_t>(k));
    ++r.cases;
    guarded(r, c.name, [&] {
      const auto& curve = *c.curve;
      const Jacobian jac(c.curve);
      const Jacobian alt(c.curve, TreeOptions{curve.num_vertices() - 1, true});
      Divisor d(c.curve);
      d.add(random_curve_point(curve, rng), 1).add(random_curve_point(curve, rng), 1);
      d.add(random_curve_point(curve, rng), -1);
      Divisor e(c.curve);
      const bool constructed = k % 2 == 0;
      if (constructed) {
        // d plus a translation pair and a same-ray difference.
        e = d;
        const int edge = static_cast<int>(rng.uniform(0, curve.num_edges() - 1));
        const Rat len = curve.edges[edge].length;
        const Rat shift = len * unit_rational(rng);
        const Rat p = (len - shift) * unit_rational(rng);
        const Rat q = (len - shift) * unit_rational(rng);
        e += translation_pair_divisor(c.curve, edge, p, p + shift, q, q + shift);
        const int ray = static_cast<int>(rng.uniform(0, static_cast<std::int64_t>(curve.rays.size()) - 1));
        e.add(on_ray(curve, ray, Rat(rng.uniform(1, 30))), 1).add(on_ray(curve, ray, Rat(rng.uniform(1, 30), 7)), -1);
      } else {
        e.add(random_curve_point(curve, rng), 1);
      }
      const bool v1 = jac.equivalent(d, e);
      const bool v2 = alt.equivalent(d, e);
      if (v1 != v2) r.fail(c.name + ": verdict depends on the spanning tree");
      if (constructed && !v1) r.fail(c.name + ": constructed equivalent pair rejected");
    });
  }
  return r;
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

SuiteReport run_suite(const std::vector<CorpusCurve>& corpus, const SuiteOptions& options) {
  for (int n : {options.sigma_samples, options.moment_lines, options.translation_pairs, options.same_ray_pairs,
                options.reduction_cases, options.tree_invariance_pairs, options.path_walks_per_curve}) {
    if (n <= 0) throw Error(ErrorCode::ConfigError, "sample counts must be positive");
  }
  SuiteReport report;
  report.checks.push_back(check_balancing(corpus));
  report.checks.push_back(check_duality_counts(corpus));
  report.checks.push_back(check_genus_identity(corpus));
  report.checks.push_back(check_period_matrices(corpus));
  report.checks.push_back(check_bezout(corpus, options));
  report.checks.push_back(check_sigma_constancy(corpus, options));
  report.checks.push_back(check_translation_pairs(corpus, options));
  report.checks.push_back(check_same_ray_pairs(corpus, options));
  report.checks.push_back(check_moment_balance(corpus, options));
  report.checks.push_back(check_self_intersection(corpus));
  report.checks.push_back(check_path_independence(corpus, options));
  report.checks.push_back(check_lattice_reduction(corpus, options));
  report.checks.push_back(check_tree_invariance(corpus, options));

  using nlohmann::ordered_json;
  ordered_json& j = report.json;
  j["seed"] = options.seed;
  j["sigma_samples"] = options.sigma_samples;
  ordered_json curves = ordered_json::array();
  for (const auto& c : corpus) {
    ordered_json entry;
    entry["name"] = c.name;
    entry["vertices"] = c.curve->num_vertices();
    entry["edges"] = c.curve->num_edges();
    entry["rays"] = c.curve->rays.size();
    entry["reduced"] = is_reduced(*c.curve);
    entry["h1_rank"] = h1_rank(*c.curve);
    curves.push_back(std::move(entry));
  }
  j["curves"] = std::move(curves);
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json entry;
    entry["name"] = c.name;
    entry["passed"] = c.passed;
    entry["cases"] = c.cases;
    entry["failures"] = c.failures;
    checks.push_back(std::move(entry));
  }
  j["checks"] = std::move(checks);
  j["passed"] = report.passed();
  return report;
}

}  // namespace tropjac
