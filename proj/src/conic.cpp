#include "inell/conic.hpp"

#include <algorithm>
#include <cmath>

#include "inell/errors.hpp"

namespace inell {

namespace {

constexpr double kCircleThreshold = 1e-14;

double wrap_half_turn(double phi) {
  if (phi < 0) phi += M_PI;
  if (phi >= M_PI) phi -= M_PI;
  return phi;
}

}  // namespace

EllipseGeometry make_geometry(Vec2 center, double a, double b, double phi) {
  EllipseGeometry g;
  g.center = center;
  g.a = a;
  g.b = b;
  g.phi = a == b ? 0.0 : wrap_half_turn(phi);
  const double ratio = (b / a) * (b / a);
  g.e2 = std::max(0.0, 1.0 - ratio);
  g.e = std::sqrt(g.e2);
  return g;
}

Conic sign_normalized(const Conic& c) {
  if (c.A > 0 && c.B > 0) return c;
  if (c.A < 0 && c.B < 0) return c.scaled(-1.0);
  throw MixedSignConic("conic quadratic part has mixed or zero signs (A=" + std::to_string(c.A) +
                       ", B=" + std::to_string(c.B) + ")");
}

double axis_numerator(const Conic& c) {
  return c.A * c.E * c.E + c.B * c.D * c.D + 4 * c.F * c.C * c.C - 2 * c.C * c.D * c.E -
         4 * c.A * c.B * c.F;
}

bool is_ellipse(const Conic& input) {
  if (!(input.A * input.B > 0)) return false;
  const Conic c = sign_normalized(input);
  return c.A * c.B - c.C * c.C > 0 && axis_numerator(c) > 0;
}

EllipseGeometry geometry(const Conic& input) {
  const Conic c = sign_normalized(input);
  const double delta = c.A * c.B - c.C * c.C;
  const double num = axis_numerator(c);
  if (!(delta > 0) || !(num > 0)) throw NotAnEllipse("conic does not describe a real ellipse");

  const Vec2 center{(c.C * c.E - c.B * c.D) / (2 * delta), (c.C * c.D - c.A * c.E) / (2 * delta)};

  const double trace = c.A + c.B;
  const double s = std::sqrt((c.B - c.A) * (c.B - c.A) + 4 * c.C * c.C);
  // a^2 = num / (2 delta (trace - s)), rewritten using (trace - s)(trace + s) = 4 delta.
  const double a2 = num * (trace + s) / (8 * delta * delta);
  const double b2 = num / (2 * delta * (trace + s));

  // Axis direction is meaningless for (near-)circles; the lengths stay as computed.
  const double phi =
      s * s < kCircleThreshold * trace * trace ? 0.0 : 0.5 * std::atan2(-2 * c.C, c.B - c.A);
  return make_geometry(center, std::sqrt(a2), std::sqrt(b2), phi);
}

double evaluate(const Conic& c, Vec2 p) {
  return c.A * p.x * p.x + c.B * p.y * p.y + 2 * c.C * p.x * p.y + c.D * p.x + c.E * p.y + c.F;
}

double relative_residual(const Conic& c, Vec2 p) {
  const double value = evaluate(c, p);
  const double scale = std::abs(c.A * p.x * p.x) + std::abs(c.B * p.y * p.y) +
                       std::abs(2 * c.C * p.x * p.y) + std::abs(c.D * p.x) + std::abs(c.E * p.y) +
                       std::abs(c.F);
  return scale > 0 ? std::abs(value) / scale : std::abs(value);
}

Conic from_geometry(const EllipseGeometry& g) {
  const double cs = std::cos(g.phi), sn = std::sin(g.phi);
  const double a2 = g.a * g.a, b2 = g.b * g.b;
  Conic c;
  c.A = b2 * cs * cs + a2 * sn * sn;
  c.B = b2 * sn * sn + a2 * cs * cs;
  c.C = (b2 - a2) * sn * cs;
  const double x0 = g.center.x, y0 = g.center.y;
  c.D = -2 * (c.A * x0 + c.C * y0);
  c.E = -2 * (c.C * x0 + c.B * y0);
  c.F = c.A * x0 * x0 + 2 * c.C * x0 * y0 + c.B * y0 * y0 - a2 * b2;
  return c;
}

Conic pull_back(const Conic& c, const Affine2& f) {
  const auto& m = f.m;
  const Vec2 t = f.t;
  // Quadratic part M^T Q M.
  const double q00 = c.A * m[0][0] + c.C * m[1][0];
  const double q01 = c.A * m[0][1] + c.C * m[1][1];
  const double q10 = c.C * m[0][0] + c.B * m[1][0];
  const double q11 = c.C * m[0][1] + c.B * m[1][1];
  Conic r;
  r.A = m[0][0] * q00 + m[1][0] * q10;
  r.B = m[0][1] * q01 + m[1][1] * q11;
  r.C = m[0][0] * q01 + m[1][0] * q11;
  // Linear part (2 t^T Q + L^T) M.
  const double lx = 2 * (c.A * t.x + c.C * t.y) + c.D;
  const double ly = 2 * (c.C * t.x + c.B * t.y) + c.E;
  r.D = lx * m[0][0] + ly * m[1][0];
  r.E = lx * m[0][1] + ly * m[1][1];
  r.F = evaluate(c, t);
  return r;
}

Conic normalized(const Conic& c) {
  const auto k = c.coefficients();
  double sq = 0;
  for (double v : k) sq += v * v;
  if (sq == 0) return c;
  double scale = 1.0 / std::sqrt(sq);
  const auto lead = std::find_if(k.begin(), k.end(), [](double v) { return v != 0; });
  if (*lead < 0) scale = -scale;
  return c.scaled(scale);
}

bool proportional(const Conic& c1, const Conic& c2, double tol) {
  const auto unit = [](const Conic& c) {
    double sq = 0;
    for (double v : c.coefficients()) sq += v * v;
    return sq > 0 ? c.scaled(1.0 / std::sqrt(sq)).coefficients() : c.coefficients();
  };
  const auto a = unit(c1);
  const auto b = unit(c2);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

}  // namespace inell
