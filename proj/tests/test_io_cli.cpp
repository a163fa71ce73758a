#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tropjac/corpus.hpp"
#include "tropjac/io.hpp"
#include "tropjac/verify.hpp"

using namespace tropjac;
namespace fs = std::filesystem;

namespace {

const std::string kCli = TROPJAC_CLI;
const std::string kData = TROPJAC_DATA_DIR;

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("tropjac-test-" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

int run(const std::string& args, const std::string& stdout_path = "/dev/null") {
  const std::string cmd = kCli + " " + args + " > " + stdout_path + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) { return read_text_file(path); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::IoError;
}

CurveHandle cubic() { return share(build_curve(paraboloid_polynomial(triangle_polygon(3)))); }

}  // namespace

TEST_CASE("divisor files") {
  const auto c = cubic();
  const auto d = parse_divisor(
      "# test\ndivisor\nvertex 0 2\nedge 1 1/2 -1  # half way\nray 0 3 1\npoint 1 2 4\nedge 2 0 1\n", c);
  CHECK(d.degree() == 7);
  CHECK(d.terms().at(locate_point(*c, Point2{Rat(1), Rat(2)})) == 4);
  CHECK(d.terms().at(CurvePoint::vertex(c->edges[2].v)) == (c->edges[2].v == 0 ? 3 : 1));
  CHECK(parse_divisor(format_divisor(d), c) == d);
  CHECK(code_of([&] { parse_divisor("vertex 0 1\n", c); }) == ErrorCode::SyntaxError);
  CHECK(code_of([&] { parse_divisor("divisor\nvertex 99 1\n", c); }) == ErrorCode::NotOnCurve);
  CHECK(code_of([&] { parse_divisor("divisor\npoint 2 2 1\n", c); }) == ErrorCode::NotOnCurve);
  CHECK(code_of([&] { parse_divisor("divisor\nedge 0 1\n", c); }) == ErrorCode::SyntaxError);
  try {
    parse_divisor("divisor\n\nblob 1 2\n", c);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("reports") {
  const auto text = curve_report(paraboloid_polynomial(triangle_polygon(3)));
  CHECK(text.find("genus 1") != std::string::npos);
  CHECK(text.find("balanced true") != std::string::npos);
  const auto jac = jacobian_report(jacobian_summary(cubic()));
  CHECK(jac.find("8") != std::string::npos);
  CHECK(parse_box("-1,-2,3/2,4").xmax == Rat(3, 2));
  CHECK(code_of([] { parse_box("1,2,3"); }) == ErrorCode::ConfigError);
}

TEST_CASE("figure") {
  const auto svg = svg_figure(paraboloid_polynomial(triangle_polygon(3)));
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("id=\"newton-complex\"") != std::string::npos);
  CHECK(svg.find("id=\"e5\"") != std::string::npos);
  CHECK(svg.find("id=\"r8\"") != std::string::npos);
  FigureOptions plain;
  plain.newton_inset = false;
  plain.box = parse_box("0,0,4,4");
  CHECK(svg_figure(paraboloid_polynomial(triangle_polygon(3)), plain).find("newton-complex") == std::string::npos);
}

TEST_CASE("balancing failures are reported") {
  auto corpus = builtin_corpus();
  auto broken = *corpus[0].curve;
  broken.rays[0].weight = 3;
  corpus[0].curve = share(broken);
  const auto result = check_balancing(corpus);
  CHECK_FALSE(result.passed);
  CHECK(result.failures.size() == 1);
  CHECK(result.failures[0].find(corpus[0].name) != std::string::npos);
}

TEST_CASE("cli") {
  Scratch s;
  const std::string cubic_poly = kData + "/cubic.poly", line_poly = kData + "/line.poly";

  CHECK(run("info " + cubic_poly, s.path("info.txt")) == 0);
  CHECK(slurp(s.path("info.txt")).find("genus 1") != std::string::npos);
  CHECK(run("jacobian " + kData + "/quartic.poly", s.path("jac.txt")) == 0);
  CHECK(slurp(s.path("jac.txt")).find("448") != std::string::npos);

  CHECK(run("info " + s.path("missing.poly")) == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("info") == 2);

  // C . L, then C . L' for a translated line: both are degree 3 and equivalent.
  write_text_file(s.path("shifted.poly"), "convention max\n0 0 0\n1 0 -7/3\n0 1 -1/2\n");
  CHECK(run("intersect " + cubic_poly + " " + line_poly + " --out " + s.path("d1.div")) == 0);
  CHECK(run("intersect " + cubic_poly + " " + s.path("shifted.poly") + " --out " + s.path("d2.div")) == 0);
  const auto d1 = slurp(s.path("d1.div"));
  CHECK(d1.find("# degree 3") != std::string::npos);
  CHECK(d1.find("# mixed_volume 3") != std::string::npos);
  CHECK(run("equiv " + cubic_poly + " " + s.path("d1.div") + " " + s.path("d2.div"), s.path("eq.txt")) == 0);
  CHECK(slurp(s.path("eq.txt")) == "equivalent\n");
  CHECK(run("aj " + cubic_poly + " " + s.path("d1.div"), s.path("aj1.txt")) == 0);
  CHECK(run("aj " + cubic_poly + " " + s.path("d2.div"), s.path("aj2.txt")) == 0);
  CHECK(slurp(s.path("aj1.txt")) == slurp(s.path("aj2.txt")));

  write_text_file(s.path("off.div"), "divisor\nvertex 0 2\nedge 0 1/3 1\n");
  CHECK(run("equiv " + cubic_poly + " " + s.path("d1.div") + " " + s.path("off.div")) == 1);
  write_text_file(s.path("bad.div"), "divisor\nvertex 0\n");
  CHECK(run("equiv " + cubic_poly + " " + s.path("d1.div") + " " + s.path("bad.div")) == 2);

  CHECK(run("verify --samples 0") == 2);
  CHECK(run("verify " + cubic_poly + " --seed 3 --out " + s.path("r.json")) == 0);
  CHECK(slurp(s.path("r.json")).find("\"passed\": true") != std::string::npos);

  CHECK(run("draw " + cubic_poly + " --out " + s.path("c.svg") + " --box 0,0,6,6") == 0);
  CHECK(slurp(s.path("c.svg")).find("</svg>") != std::string::npos);
  CHECK(run("draw " + cubic_poly) == 2);
}
