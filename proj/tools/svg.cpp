#include "svg.hpp"

#include "mukai/errors.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace mukai::svg {

namespace {

constexpr double kSize = 400;
constexpr double kRadius = 160;
constexpr double kCenter = kSize / 2;

struct Point {
  double x;
  double y;
};

Point unit(double x, double y) {
  const double n = std::hypot(x, y);
  return {x / n, y / n};
}

Point unit(const RatVector& v) { return unit(v[0].convert_to<double>(), v[1].convert_to<double>()); }
Point unit(const IntVector& v) { return unit(v[0].convert_to<double>(), v[1].convert_to<double>()); }

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

// SVG y grows downwards.
std::string px(const Point& p, double r) { return num(kCenter + r * p.x) + "," + num(kCenter - r * p.y); }

// The two isotropic directions of a binary form, oriented positively
// against the reference class.
std::pair<Point, Point> cone_boundary(const Surface& surface) {
  const IntMatrix& g = surface.ns().gram<Integer>();
  const double a = g(0, 0).convert_to<double>();
  const double b = g(0, 1).convert_to<double>();
  const double c = g(1, 1).convert_to<double>();
  const double disc = std::sqrt(b * b - a * c);
  Point u1, u2;
  if (c != 0) {
    u1 = unit(c, -b + disc);
    u2 = unit(c, -b - disc);
  } else {
    u1 = unit(0, 1);
    u2 = unit(2 * b, -a);
  }
  const double r0 = surface.reference_ample()[0].convert_to<double>();
  const double r1 = surface.reference_ample()[1].convert_to<double>();
  auto orient = [&](Point p) {
    const double s = a * p.x * r0 + b * (p.x * r1 + p.y * r0) + c * p.y * r1;
    return s < 0 ? Point{-p.x, -p.y} : p;
  };
  u1 = orient(u1);
  u2 = orient(u2);
  // Counterclockwise order.
  if (u1.x * u2.y - u1.y * u2.x < 0) std::swap(u1, u2);
  return {u1, u2};
}

std::string label(const IntVector& v) {
  return "(" + v[0].str() + "," + v[1].str() + ")";
}

}  // namespace

std::string cone_svg(const Surface& surface, const ConePlot& plot) {
  if (surface.picard_rank() != 2) throw UnsupportedError("cone plots need Picard rank 2");
  const auto [u1, u2] = cone_boundary(surface);
  const Point mid = unit(u1.x + u2.x, u1.y + u2.y);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
  out << "<polygon class=\"cone\" points=\"" << px({0, 0}, 0) << " " << px(u1, kRadius) << " "
      << px(mid, kRadius * 1.2) << " " << px(u2, kRadius) << "\" fill=\"#eef\" stroke=\"#99c\"/>\n";
  const Point f = unit(plot.from);
  const Point t = unit(plot.to);
  out << "<line class=\"region\" x1=\"" << num(kCenter + kRadius * f.x) << "\" y1=\"" << num(kCenter - kRadius * f.y)
      << "\" x2=\"" << num(kCenter + kRadius * t.x) << "\" y2=\"" << num(kCenter - kRadius * t.y)
      << "\" stroke=\"#999\" stroke-dasharray=\"4\"/>\n";
  for (const IntVector& ray : plot.wall_rays) {
    const Point r = unit(ray);
    out << "<line class=\"wall\" data-ray=\"" << label(ray) << "\" x1=\"" << num(kCenter) << "\" y1=\""
        << num(kCenter) << "\" x2=\"" << num(kCenter + kRadius * r.x) << "\" y2=\"" << num(kCenter - kRadius * r.y)
        << "\" stroke=\"#c33\"/>\n";
  }
  auto marker = [&](const RatVector& x, const char* name) {
    const Point p = unit(x);
    out << "<circle class=\"marker\" data-name=\"" << name << "\" cx=\"" << num(kCenter + kRadius * p.x)
        << "\" cy=\"" << num(kCenter - kRadius * p.y) << "\" r=\"4\"/>\n";
    out << "<text x=\"" << num(kCenter + kRadius * p.x + 6) << "\" y=\"" << num(kCenter - kRadius * p.y - 6)
        << "\">" << name << "</text>\n";
  };
  if (plot.h) marker(*plot.h, "H");
  if (plot.a) marker(*plot.a, "A");
  out << "</svg>\n";
  return out.str();
}

}  // namespace mukai::svg
