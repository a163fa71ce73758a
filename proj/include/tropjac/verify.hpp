#pragma once

// Executable checks of the structural properties of tropical Jacobians over a
// set of curves. Each check returns a CheckResult; run_suite bundles them into
// a deterministic JSON report.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "tropjac/corpus.hpp"
#include "tropjac/jacobian.hpp"

namespace tropjac {

struct SuiteOptions {
  std::uint64_t seed = 0;
  int sigma_samples = 5;           // per Newton polygon (lines, conics)
  int moment_lines = 10;           // per fundamental cycle
  int translation_pairs = 120;     // total
  int same_ray_pairs = 60;         // total
  int reduction_cases = 100;
  int tree_invariance_pairs = 20;
  int path_walks_per_curve = 4;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::int64_t cases = 0;
  std::vector<std::string> failures;  // first few witnesses

  void fail(std::string witness);
};

CheckResult check_balancing(const std::vector<CorpusCurve>& corpus);
CheckResult check_duality_counts(const std::vector<CorpusCurve>& corpus);
CheckResult check_genus_identity(const std::vector<CorpusCurve>& corpus);
CheckResult check_period_matrices(const std::vector<CorpusCurve>& corpus);
CheckResult check_bezout(const std::vector<CorpusCurve>& corpus, const SuiteOptions& options);
CheckResult check_sigma_constancy(const std::vector<CorpusCurve>& corpus, const SuiteOptions& options);
CheckResult check_translation_pairs(const std::vector<CorpusCurve>& corpus, const SuiteOptions& options);
CheckResult check_same_ray_pairs(const std::vector<CorpusCurve>& corpus, const SuiteOptions& options);
CheckResult check_moment_balance(const std::vector<CorpusCurve>& corpus, const SuiteOptions& options);
CheckResult check_self_intersection(const std::vector<CorpusCurve>& corpus);
CheckResult check_path_independence(const std::vector<CorpusCurve>& corpus, const SuiteOptions& options);
CheckResult check_lattice_reduction(const std::vector<CorpusCurve>& corpus, const SuiteOptions& options);
CheckResult check_tree_invariance(const std::vector<CorpusCurve>& corpus, const SuiteOptions& options);

struct SuiteReport {
  std::vector<CheckResult> checks;
  nlohmann::ordered_json json;

  bool passed() const;
};

/// Throws ConfigError for non-positive sample counts.
SuiteReport run_suite(const std::vector<CorpusCurve>& corpus, const SuiteOptions& options);

/// Random point on a curve: a vertex, an interior edge point or a ray point.
CurvePoint random_curve_point(const TropicalCurve& curve, SampleStream& rng);

/// Tropical line max(x - p.x, y - p.y, 0) with vertex p.
TropicalPolynomial line_through(const Point2& vertex);

}  // namespace tropjac
