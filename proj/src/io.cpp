#include "tropjac/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace tropjac {

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
}

namespace {

std::vector<std::string> tokens_of(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::int64_t parse_int(const std::string& tok, const std::string& where) {
  try {
    const Rat r = Rat::parse(tok);
    if (r.is_integer() && r.num().fits_slong_p()) return r.num().get_si();
  } catch (const Error&) {
  }
  throw Error(ErrorCode::SyntaxError, where + "expected an integer, got '" + tok + "'");
}

Rat parse_rat(const std::string& tok, const std::string& where) {
  try {
    return Rat::parse(tok);
  } catch (const Error&) {
    throw Error(ErrorCode::SyntaxError, where + "bad rational '" + tok + "'");
  }
}

}  // namespace

Divisor parse_divisor(std::string_view text, const CurveHandle& curve) {
  Divisor d(curve);
  bool have_header = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto toks = tokens_of(line);
    if (toks.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (!have_header) {
      if (toks.size() != 1 || toks[0] != "divisor") throw Error(ErrorCode::SyntaxError, where + "expected 'divisor'");
      have_header = true;
      continue;
    }
    const std::string& kind = toks[0];
    const std::size_t want = kind == "vertex" ? 3 : 4;
    if (toks.size() != want || (kind != "vertex" && kind != "edge" && kind != "ray" && kind != "point")) {
      throw Error(ErrorCode::SyntaxError, where + "expected 'vertex|edge|ray|point' record");
    }
    const std::int64_t coeff = parse_int(toks.back(), where);
    try {
      if (kind == "vertex") {
        const auto id = parse_int(toks[1], where);
        if (id < 0 || id >= curve->num_vertices()) throw Error(ErrorCode::NotOnCurve, "vertex id out of range");
        d.add(CurvePoint::vertex(static_cast<int>(id)), coeff);
      } else if (kind == "edge") {
        d.add(on_edge(*curve, static_cast<int>(parse_int(toks[1], where)), parse_rat(toks[2], where)), coeff);
      } else if (kind == "ray") {
        d.add(on_ray(*curve, static_cast<int>(parse_int(toks[1], where)), parse_rat(toks[2], where)), coeff);
      } else {
        d.add(locate_point(*curve, Point2{parse_rat(toks[1], where), parse_rat(toks[2], where)}), coeff);
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotOnCurve) throw;
      throw Error(ErrorCode::NotOnCurve, where + e.what());
    }
  }
  if (!have_header) throw Error(ErrorCode::SyntaxError, "missing 'divisor' header");
  return d;
}

std::string format_divisor(const Divisor& d) {
  std::ostringstream os;
  os << "divisor\n";
  for (const auto& [p, c] : d.terms()) {
    os << describe(p) << ' ' << c << "  # at " << coordinates(*d.carrier(), p) << '\n';
  }
  return os.str();
}

std::string curve_report(const TropicalPolynomial& f) {
  const NewtonComplex ncx = newton_complex(f);
  const TropicalCurve curve = build_curve(ncx);
  std::ostringstream os;
  os << "newton_polygon";
  for (const auto& v : ncx.polygon.vertices) os << ' ' << v;
  os << "\nnewton_complex cells2=" << ncx.cells2.size() << " cells1=" << ncx.cells1.size()
     << " cells0=" << ncx.cells0.size() << '\n';
  os << "vertices " << curve.vertices.size() << '\n';
  for (std::size_t i = 0; i < curve.vertices.size(); ++i) {
    os << "  v" << i << ' ' << curve.vertices[i].position << " cell";
    for (const auto& p : ncx.cells2[curve.vertices[i].cell].corners) os << ' ' << p;
    os << '\n';
  }
  os << "edges " << curve.edges.size() << '\n';
  for (std::size_t i = 0; i < curve.edges.size(); ++i) {
    const auto& e = curve.edges[i];
    os << "  e" << i << " v" << e.v << " -> v" << e.w << " direction=" << e.direction << " weight=" << e.weight
       << " length=" << e.length << '\n';
  }
  os << "rays " << curve.rays.size() << '\n';
  for (std::size_t i = 0; i < curve.rays.size(); ++i) {
    const auto& r = curve.rays[i];
    os << "  r" << i << " v" << r.vertex << " direction=" << r.direction << " weight=" << r.weight << '\n';
  }
  os << "balanced " << (check_balancing(curve).balanced ? "true" : "false") << '\n';
  os << "genus " << genus(ncx) << '\n';
  os << "h1_rank " << h1_rank(curve) << '\n';
  os << "reduced " << (is_reduced(curve) ? "true" : "false") << '\n';
  return os.str();
}

std::string jacobian_report(const JacobianSummary& s) {
  std::ostringstream os;
  os << "genus " << s.genus << '\n';
  os << "period_matrix\n";
  for (const auto& row : s.period.q) {
    os << ' ';
    for (const auto& x : row) os << ' ' << x;
    os << '\n';
  }
  os << "determinant " << s.determinant << '\n';
  os << "leading_minors";
  for (const auto& m : s.minors) os << ' ' << m;
  os << '\n';
  os << "positive_definite " << (s.positive_definite ? "true" : "false") << '\n';
  os << "torus_dimension " << s.genus << '\n';
  return os.str();
}

Box parse_box(std::string_view text) {
  std::vector<Rat> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    parts.push_back(Rat::parse(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  if (parts.size() != 4 || parts[0] >= parts[2] || parts[1] >= parts[3]) {
    throw Error(ErrorCode::ConfigError, "box must be 'xmin,ymin,xmax,ymax' with xmin<xmax, ymin<ymax");
  }
  return {parts[0], parts[1], parts[2], parts[3]};
}

namespace {

// Parameter range [t0, t1] of base + t*dir inside the box (Liang-Barsky),
// starting from t in [0, tmax] (tmax empty for a ray).
bool clip(const Box& box, const Point2& base, IntVec2 dir, const std::optional<Rat>& tmax, Rat& t0, Rat& t1) {
  t0 = Rat(0);
  std::optional<Rat> hi = tmax;
  const auto edge = [&](const Rat& p, const Rat& q) {
    // p * t <= q
    if (p.is_zero()) return q.sign() >= 0;
    const Rat r = q / p;
    if (p.sign() < 0) {
      if (r > t0) t0 = r;
    } else if (!hi || r < *hi) {
      hi = r;
    }
    return true;
  };
  const Rat dx(dir.a), dy(dir.b);
  if (!edge(-dx, base.x - box.xmin) || !edge(dx, box.xmax - base.x) || !edge(-dy, base.y - box.ymin) ||
      !edge(dy, box.ymax - base.y)) {
    return false;
  }
  if (!hi) return false;
  t1 = *hi;
  return t0 < t1;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string svg_figure(const TropicalPolynomial& f, const FigureOptions& options) {
  const NewtonComplex ncx = newton_complex(f);
  const TropicalCurve curve = build_curve(ncx);
  Box box;
  if (options.box) {
    box = *options.box;
  } else {
    box = {curve.vertices[0].position.x, curve.vertices[0].position.y, curve.vertices[0].position.x,
           curve.vertices[0].position.y};
    for (const auto& v : curve.vertices) {
      box.xmin = std::min(box.xmin, v.position.x);
      box.ymin = std::min(box.ymin, v.position.y);
      box.xmax = std::max(box.xmax, v.position.x);
      box.ymax = std::max(box.ymax, v.position.y);
    }
    box.xmin -= Rat(2);
    box.ymin -= Rat(2);
    box.xmax += Rat(2);
    box.ymax += Rat(2);
  }
  constexpr double kSize = 600.0;
  constexpr double kMargin = 20.0;
  const double w = (box.xmax - box.xmin).to_double();
  const double h = (box.ymax - box.ymin).to_double();
  const double scale = (kSize - 2 * kMargin) / std::max(w, h);
  const auto sx = [&](const Rat& x) { return fmt(kMargin + (x - box.xmin).to_double() * scale); };
  const auto sy = [&](const Rat& y) { return fmt(kSize - kMargin - (y - box.ymin).to_double() * scale); };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
     << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << kSize << "\" height=\"" << kSize << "\" fill=\"white\"/>\n"
     << "<g stroke=\"black\" stroke-width=\"2\" fill=\"none\">\n";
  std::ostringstream labels;
  const auto draw = [&](const Point2& base, IntVec2 dir, const std::optional<Rat>& len, int weight,
                        const std::string& id) {
    Rat t0, t1;
    if (!clip(box, base, dir, len, t0, t1)) return;
    const Point2 a = base + t0 * Point2(dir);
    const Point2 b = base + t1 * Point2(dir);
    os << "<line id=\"" << id << "\" x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\"" << sx(b.x)
       << "\" y2=\"" << sy(b.y) << "\"/>\n";
    const Point2 mid = (Rat(1, 2)) * (a + b);
    labels << "<text x=\"" << sx(mid.x) << "\" y=\"" << sy(mid.y) << "\">" << weight << "</text>\n";
  };
  for (std::size_t i = 0; i < curve.edges.size(); ++i) {
    const auto& e = curve.edges[i];
    draw(curve.vertices[e.v].position, e.direction, e.length, e.weight, "e" + std::to_string(i));
  }
  for (std::size_t i = 0; i < curve.rays.size(); ++i) {
    const auto& r = curve.rays[i];
    draw(curve.vertices[r.vertex].position, r.direction, std::nullopt, r.weight, "r" + std::to_string(i));
  }
  os << "</g>\n<g fill=\"black\">\n";
  for (const auto& v : curve.vertices) {
    const auto& p = v.position;
    if (p.x < box.xmin || p.x > box.xmax || p.y < box.ymin || p.y > box.ymax) continue;
    os << "<circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"3\"/>\n";
  }
  os << "</g>\n<g font-family=\"sans-serif\" font-size=\"12\" fill=\"blue\">\n" << labels.str() << "</g>\n";

  if (options.newton_inset) {
    // Newton complex in the top-right corner, one lattice unit = `unit` px.
    std::int64_t extent = 1;
    for (const auto& p : ncx.polygon.vertices) extent = std::max({extent, p.a, p.b});
    const double inset = 120.0;
    const double unit = inset / static_cast<double>(extent);
    const double ox = kSize - kMargin - inset;
    const double oy = kMargin + inset;
    os << "<g id=\"newton-complex\" stroke=\"gray\" stroke-width=\"1\" fill=\"none\">\n";
    os << "<rect x=\"" << fmt(ox - 4) << "\" y=\"" << fmt(kMargin - 4) << "\" width=\"" << fmt(inset + 8)
       << "\" height=\"" << fmt(inset + 8) << "\" fill=\"white\"/>\n";
    for (const auto& seg : ncx.cells1) {
      os << "<line x1=\"" << fmt(ox + unit * static_cast<double>(seg.a.a)) << "\" y1=\""
         << fmt(oy - unit * static_cast<double>(seg.a.b)) << "\" x2=\"" << fmt(ox + unit * static_cast<double>(seg.b.a))
         << "\" y2=\"" << fmt(oy - unit * static_cast<double>(seg.b.b)) << "\"/>\n";
    }
    for (const auto& p : ncx.cells0) {
      os << "<circle cx=\"" << fmt(ox + unit * static_cast<double>(p.a)) << "\" cy=\""
         << fmt(oy - unit * static_cast<double>(p.b)) << "\" r=\"2\" fill=\"gray\"/>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace tropjac
