#include "tropjac/polynomial.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace tropjac {

TropicalPolynomial::TropicalPolynomial(TermMap terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw Error(ErrorCode::SyntaxError, "polynomial has no terms");
  for (const auto& [e, c] : terms_) {
    if (e.a < 0 || e.b < 0) throw Error(ErrorCode::SyntaxError, "negative exponent in polynomial");
  }
}

std::vector<IntVec2> TropicalPolynomial::support() const {
  std::vector<IntVec2> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

Rat TropicalPolynomial::evaluate(const Point2& p) const {
  auto it = terms_.begin();
  Rat best = Rat(it->first.a) * p.x + Rat(it->first.b) * p.y + it->second;
  for (++it; it != terms_.end(); ++it) {
    Rat v = Rat(it->first.a) * p.x + Rat(it->first.b) * p.y + it->second;
    if (v > best) best = std::move(v);
  }
  return best;
}

TropicalPolynomial TropicalPolynomial::translated(const Point2& t) const {
  // f(x - t) = max <a, x> + (c_a - <a, t>)
  TermMap shifted;
  for (const auto& [e, c] : terms_) shifted.emplace(e, c - Rat(e.a) * t.x - Rat(e.b) * t.y);
  return TropicalPolynomial(std::move(shifted));
}

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::int64_t parse_exponent(const std::string& tok, int line_no) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 0) {
    throw Error(ErrorCode::SyntaxError,
                "line " + std::to_string(line_no) + ": bad exponent '" + tok + "'");
  }
  return v;
}

}  // namespace

TropicalPolynomial parse_polynomial(std::string_view text) {
  TropicalPolynomial::TermMap terms;
  bool have_convention = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (!have_convention) {
      if (toks.size() != 2 || toks[0] != "convention") {
        throw Error(ErrorCode::SyntaxError, where + "expected 'convention max'");
      }
      if (toks[1] != "max") {
        throw Error(ErrorCode::SyntaxError, where + "unsupported convention '" + toks[1] + "'");
      }
      have_convention = true;
      continue;
    }
    if (toks.size() != 3) throw Error(ErrorCode::SyntaxError, where + "expected '<i> <j> <coefficient>'");
    const IntVec2 e{parse_exponent(toks[0], line_no), parse_exponent(toks[1], line_no)};
    Rat c;
    try {
      c = Rat::parse(toks[2]);
    } catch (const Error&) {
      throw Error(ErrorCode::SyntaxError, where + "bad coefficient '" + toks[2] + "'");
    }
    if (!terms.emplace(e, std::move(c)).second) {
      std::ostringstream os;
      os << where << "exponent " << e << " repeated";
      throw Error(ErrorCode::DuplicateExponent, os.str());
    }
  }
  if (!have_convention) throw Error(ErrorCode::SyntaxError, "missing 'convention max' header");
  if (terms.empty()) throw Error(ErrorCode::SyntaxError, "empty term list");
  return TropicalPolynomial(std::move(terms));
}

std::string format_polynomial(const TropicalPolynomial& f) {
  std::ostringstream os;
  os << "convention max\n";
  for (const auto& [e, c] : f.terms()) os << e.a << ' ' << e.b << ' ' << c << '\n';
  return os.str();
}

std::vector<IntVec2> convex_hull(std::span<const IntVec2> points) {
  std::vector<IntVec2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  // Andrew's monotone chain; strict turns drop collinear points.
  std::vector<IntVec2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    const auto& p = pts[i];
    while (k >= t && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

Rat signed_area(std::span<const IntVec2> polygon) {
  std::int64_t twice = 0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    twice += cross(polygon[i], polygon[(i + 1) % polygon.size()]);
  }
  return Rat(twice, 2);
}

Rat signed_area(std::span<const Point2> polygon) {
  Rat twice;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    twice += cross(polygon[i], polygon[(i + 1) % polygon.size()]);
  }
  return twice / Rat(2);
}

bool NewtonPolygon::contains(IntVec2 p) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& a = vertices[i];
    const auto& b = vertices[(i + 1) % vertices.size()];
    if (cross(b - a, p - a) < 0) return false;
  }
  return true;
}

bool NewtonPolygon::contains_interior(IntVec2 p) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& a = vertices[i];
    const auto& b = vertices[(i + 1) % vertices.size()];
    if (cross(b - a, p - a) <= 0) return false;
  }
  return true;
}

std::vector<IntVec2> NewtonPolygon::lattice_points() const {
  std::vector<IntVec2> out;
  if (vertices.empty()) return out;
  auto [xmin, xmax] = std::minmax_element(vertices.begin(), vertices.end(),
                                          [](auto u, auto v) { return u.a < v.a; });
  auto [ymin, ymax] = std::minmax_element(vertices.begin(), vertices.end(),
                                          [](auto u, auto v) { return u.b < v.b; });
  for (auto i = xmin->a; i <= xmax->a; ++i) {
    for (auto j = ymin->b; j <= ymax->b; ++j) {
      if (contains({i, j})) out.push_back({i, j});
    }
  }
  return out;
}

NewtonPolygon newton_polygon(const TropicalPolynomial& f) {
  const auto pts = f.support();
  auto hull = convex_hull(pts);
  if (hull.size() < 3) throw Error(ErrorCode::DegeneratePolygon, "Newton polygon is not 2-dimensional");
  return NewtonPolygon{std::move(hull)};
}

NewtonPolygon triangle_polygon(int size) {
  return NewtonPolygon{{{0, 0}, {size, 0}, {0, size}}};
}

NewtonPolygon rectangle_polygon(int width, int height) {
  return NewtonPolygon{{{0, 0}, {width, 0}, {width, height}, {0, height}}};
}

int NewtonComplex::cell1_index(IntVec2 p, IntVec2 q) const {
  if (q < p) std::swap(p, q);
  auto it = std::lower_bound(cells1.begin(), cells1.end(), std::pair{p, q},
                             [](const Cell1& c, const std::pair<IntVec2, IntVec2>& key) {
                               return std::pair{c.a, c.b} < key;
                             });
  if (it == cells1.end() || it->a != p || it->b != q) return -1;
  return static_cast<int>(it - cells1.begin());
}

NewtonComplex newton_complex(const TropicalPolynomial& f) {
  NewtonComplex ncx;
  ncx.polygon = newton_polygon(f);

  std::vector<IntVec2> pts;
  std::vector<Rat> lift;
  for (const auto& [e, c] : f.terms()) {
    pts.push_back(e);
    lift.push_back(c);
  }
  const std::size_t n = pts.size();

  // Every upper face is spanned by some non-collinear triple of lifted points
  // with all other lifted points on or below its plane.
  std::set<std::vector<IntVec2>> seen;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const IntVec2 u = pts[j] - pts[i];
        const IntVec2 v = pts[k] - pts[i];
        const std::int64_t det = cross(u, v);
        if (det == 0) continue;
        const Rat dz1 = lift[j] - lift[i];
        const Rat dz2 = lift[k] - lift[i];
        const Rat alpha = (dz1 * Rat(v.b) - dz2 * Rat(u.b)) / Rat(det);
        const Rat beta = (Rat(u.a) * dz2 - Rat(v.a) * dz1) / Rat(det);
        const Rat gamma = lift[i] - alpha * Rat(pts[i].a) - beta * Rat(pts[i].b);

        std::vector<IntVec2> on_face;
        bool upper = true;
        for (std::size_t m = 0; m < n && upper; ++m) {
          const Rat plane = alpha * Rat(pts[m].a) + beta * Rat(pts[m].b) + gamma;
          const auto c = lift[m] <=> plane;
          if (c > 0) upper = false;
          else if (c == 0) on_face.push_back(pts[m]);
        }
        if (!upper || !seen.insert(on_face).second) continue;
        Cell2 cell;
        cell.corners = convex_hull(on_face);
        cell.points = std::move(on_face);
        cell.slope = {alpha, beta};
        cell.offset = gamma;
        ncx.cells2.push_back(std::move(cell));
      }
    }
  }
  std::sort(ncx.cells2.begin(), ncx.cells2.end(),
            [](const Cell2& a, const Cell2& b) {
              auto ka = a.corners, kb = b.corners;
              std::sort(ka.begin(), ka.end());
              std::sort(kb.begin(), kb.end());
              return ka < kb;
            });

  std::map<std::pair<IntVec2, IntVec2>, std::vector<int>> edges;
  std::set<IntVec2> verts;
  for (std::size_t c = 0; c < ncx.cells2.size(); ++c) {
    const auto& corners = ncx.cells2[c].corners;
    for (std::size_t m = 0; m < corners.size(); ++m) {
      IntVec2 p = corners[m];
      IntVec2 q = corners[(m + 1) % corners.size()];
      verts.insert(p);
      if (q < p) std::swap(p, q);
      edges[{p, q}].push_back(static_cast<int>(c));
    }
  }
  for (auto& [key, cof] : edges) ncx.cells1.push_back(Cell1{key.first, key.second, std::move(cof)});
  ncx.cells0.assign(verts.begin(), verts.end());
  return ncx;
}

int genus(const NewtonComplex& ncx, const NewtonPolygon& polygon) {
  return static_cast<int>(std::count_if(ncx.cells0.begin(), ncx.cells0.end(),
                                        [&](IntVec2 p) { return polygon.contains_interior(p); }));
}

std::int64_t mixed_volume(std::span<const IntVec2> p, std::span<const IntVec2> q) {
  std::vector<IntVec2> sums;
  sums.reserve(p.size() * q.size());
  for (const auto& a : p) {
    for (const auto& b : q) sums.push_back(a + b);
  }
  const auto area = [](std::span<const IntVec2> pts) {
    const auto hull = convex_hull(pts);
    return hull.size() < 3 ? Rat(0) : signed_area(hull);
  };
  const Rat mv = area(sums) - area(p) - area(q);
  if (!mv.is_integer()) throw std::logic_error("mixed volume of lattice polygons is not integral");
  return mv.num().get_si();
}

}  // namespace tropjac
