// Command-line front end for the tropical Jacobian library.
//
//   tropjac info <poly>
//   tropjac jacobian <poly>
//   tropjac aj <poly> <divisor>
//   tropjac intersect <polyA> <polyB> [--out divisor]
//   tropjac equiv <poly> <divisor> <divisor>
//   tropjac verify [poly] [--seed N] [--samples N] [--out report.json]
//   tropjac draw <poly> --out figure.svg [--box xmin,ymin,xmax,ymax]
//
// Exit codes: 0 success / equivalent, 1 not equivalent / check failed,
// 2 usage or data error.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "tropjac/io.hpp"
#include "tropjac/verify.hpp"

namespace {

using namespace tropjac;

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::uint64_t seed = 0;
  int samples = 5;
  std::string out;
  std::string box;
  bool no_inset = false;
};

TropicalPolynomial load_polynomial(const std::string& path) {
  try {
    return parse_polynomial(read_text_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

Divisor load_divisor(const std::string& path, const CurveHandle& curve) {
  try {
    return parse_divisor(read_text_file(path), curve);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(cfg.out, text);
  }
}

int run_info(const RunConfig& cfg) {
  std::cout << curve_report(load_polynomial(cfg.inputs.at(0)));
  return 0;
}

int run_jacobian(const RunConfig& cfg) {
  const auto curve = share(build_curve(load_polynomial(cfg.inputs.at(0))));
  std::cout << jacobian_report(jacobian_summary(curve));
  return 0;
}

int run_aj(const RunConfig& cfg) {
  const auto curve = share(build_curve(load_polynomial(cfg.inputs.at(0))));
  const Jacobian jac(curve);
  const Divisor d = load_divisor(cfg.inputs.at(1), curve);
  const auto point = jac.abel_jacobi(d);
  std::cout << "degree " << d.degree() << '\n';
  std::cout << "base_vertex " << jac.base_vertex() << '\n';
  std::cout << "abel_jacobi " << format_vector(point.representative) << '\n';
  std::cout << "lattice_coordinates " << format_vector(point.coordinates) << '\n';
  return 0;
}

int run_intersect(const RunConfig& cfg) {
  const auto c = share(build_curve(load_polynomial(cfg.inputs.at(0))));
  const TropicalCurve l = build_curve(load_polynomial(cfg.inputs.at(1)));
  const IntVec2 shift = choose_generic_shift(*c, l);
  const Divisor d = stable_intersection(c, l, shift);
  const auto mv = mixed_volume(c->polygon, l.polygon);
  std::ostringstream header;
  header << "# stable intersection, shift eps*" << shift << '\n'
         << "# degree " << d.degree() << '\n'
         << "# mixed_volume " << mv << '\n';
  if (cfg.out.empty()) {
    std::cout << header.str() << format_divisor(d);
  } else {
    write_text_file(cfg.out, header.str() + format_divisor(d));
    std::cout << "degree " << d.degree() << "\nmixed_volume " << mv << '\n';
  }
  return d.degree() == mv ? 0 : 1;
}

int run_equiv(const RunConfig& cfg) {
  const auto curve = share(build_curve(load_polynomial(cfg.inputs.at(0))));
  const Divisor d = load_divisor(cfg.inputs.at(1), curve);
  const Divisor e = load_divisor(cfg.inputs.at(2), curve);
  const bool eq = linearly_equivalent(curve, d, e);
  std::cout << (eq ? "equivalent" : "not equivalent") << '\n';
  return eq ? 0 : 1;
}

int run_verify(const RunConfig& cfg) {
  std::vector<CorpusCurve> corpus;
  if (cfg.inputs.empty()) {
    corpus = builtin_corpus();
  } else {
    for (const auto& path : cfg.inputs) corpus.push_back(make_corpus_curve(path, load_polynomial(path)));
  }
  SuiteOptions options;
  options.seed = cfg.seed;
  options.sigma_samples = cfg.samples;
  const auto report = run_suite(corpus, options);
  emit(cfg, report.json.dump(2) + "\n");
  for (const auto& c : report.checks) {
    std::cerr << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)\n";
  }
  return report.passed() ? 0 : 1;
}

int run_draw(const RunConfig& cfg) {
  if (cfg.out.empty()) throw Error(ErrorCode::ConfigError, "draw requires --out");
  FigureOptions options;
  if (!cfg.box.empty()) options.box = parse_box(cfg.box);
  options.newton_inset = !cfg.no_inset;
  write_text_file(cfg.out, svg_figure(load_polynomial(cfg.inputs.at(0)), options));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobians of plane tropical curves with exact rational arithmetic"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* info = app.add_subcommand("info", "Newton complex and curve report");
  info->add_option("polynomial", cfg.inputs, "polynomial file")->required()->expected(1);

  auto* jacobian = app.add_subcommand("jacobian", "period matrix and torus certificate");
  jacobian->add_option("polynomial", cfg.inputs, "polynomial file")->required()->expected(1);

  auto* aj = app.add_subcommand("aj", "Abel-Jacobi image of a divisor");
  aj->add_option("files", cfg.inputs, "polynomial file and divisor file")->required()->expected(2);

  auto* intersect = app.add_subcommand("intersect", "stable intersection divisor of two curves");
  intersect->add_option("files", cfg.inputs, "two polynomial files")->required()->expected(2);
  intersect->add_option("--out", cfg.out, "divisor output path");

  auto* equiv = app.add_subcommand("equiv", "decide linear equivalence of two divisors");
  equiv->add_option("files", cfg.inputs, "polynomial file and two divisor files")->required()->expected(3);

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("polynomials", cfg.inputs, "polynomial files (default: built-in corpus)");
  verify->add_option("--seed", cfg.seed, "sampling seed")->capture_default_str();
  verify->add_option("--samples", cfg.samples, "random curves per Newton polygon")->capture_default_str();
  verify->add_option("--out", cfg.out, "report path (default: stdout)");

  auto* draw = app.add_subcommand("draw", "write an SVG figure of the curve");
  draw->add_option("polynomial", cfg.inputs, "polynomial file")->required()->expected(1);
  draw->add_option("--out", cfg.out, "SVG output path")->required();
  draw->add_option("--box", cfg.box, "clip box xmin,ymin,xmax,ymax");
  draw->add_flag("--no-inset", cfg.no_inset, "omit the Newton complex inset");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.command == "info") return run_info(cfg);
    if (cfg.command == "jacobian") return run_jacobian(cfg);
    if (cfg.command == "aj") return run_aj(cfg);
    if (cfg.command == "intersect") return run_intersect(cfg);
    if (cfg.command == "equiv") return run_equiv(cfg);
    if (cfg.command == "verify") return run_verify(cfg);
    if (cfg.command == "draw") return run_draw(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
