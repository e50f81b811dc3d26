#include "inell/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "inell/errors.hpp"

namespace inell {

SvgLayers SvgLayers::parse(const std::string& text) {
  SvgLayers layers;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (item.empty()) continue;
    if (item == "all") layers = all();
    else if (item == "diagonals") layers.diagonals = true;
    else if (item == "inscribed") layers.inscribed = true;
    else if (item == "circumscribed") layers.circumscribed = true;
    else if (item == "tangency") layers.tangency = true;
    else if (item == "diameters") layers.diameters = true;
    else throw InvalidInput("unknown plot layer \"" + item + "\"");
  }
  return layers;
}

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x == 0 ? 0.0 : x);
  return buf;
}

/// Metadata keeps full precision so it can be compared against the report.
std::string exact(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x == 0 ? 0.0 : x);
  return buf;
}

struct Box {
  double x0 = INFINITY, y0 = INFINITY, x1 = -INFINITY, y1 = -INFINITY;
  void add(Vec2 p) {
    x0 = std::min(x0, p.x);
    y0 = std::min(y0, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  }
  void add(const EllipseGeometry& g) {
    const double c = std::cos(g.phi), s = std::sin(g.phi);
    const double hx = std::hypot(g.a * c, g.b * s);
    const double hy = std::hypot(g.a * s, g.b * c);
    add(g.center - Vec2{hx, hy});
    add(g.center + Vec2{hx, hy});
  }
};

// SVG y grows downward; geometry is drawn with y negated.
std::string pt(Vec2 p) { return num(p.x) + "," + num(-p.y); }

std::string ellipse_element(const EllipseGeometry& g, const char* id, const char* stroke) {
  const double deg = -g.phi * 180.0 / M_PI;
  return "  <ellipse id=\"" + std::string(id) + "\" cx=\"" + num(g.center.x) + "\" cy=\"" +
         num(-g.center.y) + "\" rx=\"" + num(g.a) + "\" ry=\"" + num(g.b) +
         "\" transform=\"rotate(" + num(deg) + " " + num(g.center.x) + " " + num(-g.center.y) +
         ")\" fill=\"none\" stroke=\"" + stroke + "\" data-e2=\"" + exact(g.e2) + "\"/>\n";
}

std::string line_element(Vec2 a, Vec2 b, const char* stroke, const char* dash = nullptr) {
  std::string s = "    <line x1=\"" + num(a.x) + "\" y1=\"" + num(-a.y) + "\" x2=\"" + num(b.x) +
                  "\" y2=\"" + num(-b.y) + "\" stroke=\"" + stroke + "\"";
  if (dash) s += " stroke-dasharray=\"" + std::string(dash) + "\"";
  return s + "/>\n";
}

}  // namespace

std::string render_svg(const AnalysisReport& r, const SvgLayers& layers) {
  const auto& v = r.frame.vertices;  // O, P, Q, R: outline O-P-R-Q
  Box box;
  for (const Vec2& p : v) box.add(p);
  if (layers.circumscribed) box.add(r.circumscribed_geometry_original);
  if (layers.inscribed) box.add(r.inscribed_original.geometry);

  const double span = std::max(box.x1 - box.x0, box.y1 - box.y0);
  const double margin = 0.05 * span;
  const double stroke = span / 400;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(box.x0 - margin) + " " +
         num(-box.y1 - margin) + " " + num(box.x1 - box.x0 + 2 * margin) + " " +
         num(box.y1 - box.y0 + 2 * margin) + "\" stroke-width=\"" + num(stroke) + "\">\n";
  out += "  <polygon id=\"parallelogram\" points=\"" + pt(v[0]) + " " + pt(v[1]) + " " + pt(v[3]) +
         " " + pt(v[2]) + "\" fill=\"none\" stroke=\"black\"/>\n";

  if (layers.diagonals) {
    out += "  <g id=\"diagonals\">\n";
    out += line_element(v[0], v[3], "gray", "4 2");
    out += line_element(v[1], v[2], "gray", "4 2");
    out += "  </g>\n";
  }
  if (layers.inscribed) out += ellipse_element(r.inscribed_original.geometry, "inscribed", "blue");
  if (layers.circumscribed)
    out += ellipse_element(r.circumscribed_geometry_original, "circumscribed", "red");
  if (layers.tangency) {
    out += "  <g id=\"tangency\" fill=\"blue\">\n";
    for (const Vec2& t : r.inscribed_original.tangency)
      out += "    <circle cx=\"" + num(t.x) + "\" cy=\"" + num(-t.y) + "\" r=\"" + num(3 * stroke) +
             "\"/>\n";
    out += "  </g>\n";
  }
  if (layers.diameters) {
    out += "  <g id=\"diameters\" data-two-theta=\"" + exact(r.angles.two_theta) + "\" data-psi=\"" +
           exact(r.angles.psi) + "\">\n";
    for (const Segment& s : equal_conjugate_diameters(r.inscribed_original.geometry))
      out += line_element(s.from, s.to, "green");
    out += "  </g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace inell
