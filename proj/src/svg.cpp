#include "erdos/svg.hpp"

#include <cstdio>
#include <fstream>

#include "erdos/errors.hpp"

namespace erdos {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

void render_svg(const Pattern& pattern, const IntervalSet& set, const Rect& rect,
                const CoverageReport* report, const std::string& path) {
  const double width = 840, height = 540, margin = 40;

  double a_min = rat_double(rect.a_lo), a_max = rat_double(rect.a_hi);
  if (!set.empty()) {
    a_min = std::min(a_min, rat_double(set.min()));
    a_max = std::max(a_max, rat_double(set.max()));
  }
  double pad = 0.05 * (a_max - a_min + 1);
  a_min -= pad;
  a_max += pad;
  double b_min = 0.0;
  double b_max = rat_double(rect.b_hi) * 1.1 + 0.1;

  double sx = (width - 2 * margin) / (a_max - a_min);
  double sy = (height - 2 * margin) / (b_max - b_min);
  auto X = [&](double a) { return margin + (a - a_min) * sx; };
  auto Y = [&](double b) { return height - margin - (b - b_min) * sy; };

  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
      << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " "
      << fmt(height) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<clipPath id=\"view\"><rect x=\"" << fmt(margin) << "\" y=\"" << fmt(margin)
      << "\" width=\"" << fmt(width - 2 * margin) << "\" height=\"" << fmt(height - 2 * margin)
      << "\"/></clipPath>\n";
  out << "<g clip-path=\"url(#view)\">\n";

  // strips a = g - b*y fanning out from each base interval
  for (const Rational& y : pattern.points) {
    double yd = rat_double(y);
    for (const Interval& iv : set.parts()) {
      double g1 = rat_double(iv.lo), g2 = rat_double(iv.hi);
      out << "<polygon points=\"" << fmt(X(g1)) << "," << fmt(Y(0)) << " " << fmt(X(g2)) << ","
          << fmt(Y(0)) << " " << fmt(X(g2 - b_max * yd)) << "," << fmt(Y(b_max)) << " "
          << fmt(X(g1 - b_max * yd)) << "," << fmt(Y(b_max))
          << "\" fill=\"#9aa7b1\" fill-opacity=\"0.45\" stroke=\"none\"/>\n";
    }
  }

  if (report) {
    for (const TrapCell& cell : report->uncovered_cells) {
      double b1 = rat_double(cell.b1), b2 = rat_double(cell.b2);
      double l1 = rat_double(cell.lo.at(cell.b1)), r1 = rat_double(cell.hi.at(cell.b1));
      double l2 = rat_double(cell.lo.at(cell.b2)), r2 = rat_double(cell.hi.at(cell.b2));
      out << "<polygon points=\"" << fmt(X(l1)) << "," << fmt(Y(b1)) << " " << fmt(X(r1)) << ","
          << fmt(Y(b1)) << " " << fmt(X(r2)) << "," << fmt(Y(b2)) << " " << fmt(X(l2)) << ","
          << fmt(Y(b2)) << "\" fill=\"#d43f3a\" fill-opacity=\"0.8\" stroke=\"none\"/>\n";
    }
  }
  out << "</g>\n";

  // target rectangle
  out << "<rect x=\"" << fmt(X(rat_double(rect.a_lo))) << "\" y=\""
      << fmt(Y(rat_double(rect.b_hi))) << "\" width=\""
      << fmt((rat_double(rect.a_hi) - rat_double(rect.a_lo)) * sx) << "\" height=\""
      << fmt((rat_double(rect.b_hi) - rat_double(rect.b_lo)) * sy)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

  // a-axis and base intervals
  out << "<line x1=\"" << fmt(margin) << "\" y1=\"" << fmt(Y(0)) << "\" x2=\""
      << fmt(width - margin) << "\" y2=\"" << fmt(Y(0))
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  for (const Interval& iv : set.parts()) {
    out << "<line x1=\"" << fmt(X(rat_double(iv.lo))) << "\" y1=\"" << fmt(Y(0)) << "\" x2=\""
        << fmt(X(rat_double(iv.hi))) << "\" y2=\"" << fmt(Y(0))
        << "\" stroke=\"#1f4e79\" stroke-width=\"6\"/>\n";
  }
  out << "</svg>\n";
  if (!out) throw Error(ErrorCode::IoError, "failed writing '" + path + "'");
}

}  // namespace erdos
