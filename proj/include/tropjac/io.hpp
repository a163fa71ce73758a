#pragma once

// Text file formats, human-readable reports and figure output.

#include <optional>
#include <string>
#include <string_view>

#include "tropjac/jacobian.hpp"

namespace tropjac {

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

/// Divisor file:
///
///   # comment
///   divisor
///   vertex <id> <coeff>
///   edge <id> <offset> <coeff>
///   ray <id> <offset> <coeff>
///   point <x> <y> <coeff>        (located on the curve)
///
/// Throws SyntaxError or NotOnCurve (with line numbers).
Divisor parse_divisor(std::string_view text, const CurveHandle& curve);

/// Canonical divisor file; each record is followed by a comment with the
/// point's coordinates.
std::string format_divisor(const Divisor& d);

std::string curve_report(const TropicalPolynomial& f);
std::string jacobian_report(const JacobianSummary& s);

struct Box {
  Rat xmin, ymin, xmax, ymax;
};

/// Parses "xmin,ymin,xmax,ymax".
Box parse_box(std::string_view text);

struct FigureOptions {
  std::optional<Box> box;  // default: vertex bounding box padded by 2
  bool newton_inset = true;
};

/// Standalone SVG drawing of the curve with weight labels; rays are clipped
/// at the box.
std::string svg_figure(const TropicalPolynomial& f, const FigureOptions& options = {});

}  // namespace tropjac
