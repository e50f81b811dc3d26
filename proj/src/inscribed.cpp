#include "inell/inscribed.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "inell/errors.hpp"

namespace inell {

namespace {

void require_parameter(const Parallelogram& p, double v) {
  if (!(v > 0 && v < p.k)) {
    std::ostringstream msg;
    msg << "inscribed family parameter v = " << v << " outside (0, " << p.k << ")";
    throw ParameterOutOfRange(msg.str());
  }
}

Conic to_conic(const std::array<double, 6>& c) { return {c[0], c[1], c[2], c[3], c[4], c[5]}; }

std::array<std::array<Vec2, 2>, 4> canonical_sides(const Parallelogram& p) {
  const auto v = p.canonical_vertices();  // O, P, Q, R
  return {{{v[0], v[1]}, {v[0], v[2]}, {v[2], v[3]}, {v[1], v[3]}}};
}

Vec2 line_extremum(const Conic& c, Vec2 a, Vec2 b) {
  const Vec2 dir = b - a;
  const double alpha = c.A * dir.x * dir.x + c.B * dir.y * dir.y + 2 * c.C * dir.x * dir.y;
  const double beta = 2 * (c.A * a.x * dir.x + c.B * a.y * dir.y + c.C * (a.x * dir.y + a.y * dir.x)) +
                      c.D * dir.x + c.E * dir.y;
  return a + (-beta / (2 * alpha)) * dir;
}

}  // namespace

InscribedEllipse inscribed_conic(const Parallelogram& p, double v) {
  require_parameter(p, v);
  const double l = p.l, k = p.k, d = p.d;
  InscribedEllipse ell;
  ell.v = v;
  ell.conic = to_conic(inscribed_coefficients(l, k, d, v));
  if (!is_ellipse(ell.conic))
    throw InternalError("inscribed family member is not an ellipse at v = " + std::to_string(v));
  ell.geometry = geometry(ell.conic);

  // Rectangle tangency points, carried through the inverse shear.
  const Shear shear = shear_to_rectangle(p);
  const std::array<Vec2, 4> rect{Vec2{l * v / k, 0}, Vec2{0, v}, Vec2{l * (k - v) / k, k},
                                 Vec2{l, k - v}};
  for (int i = 0; i < 4; ++i) ell.tangency[i] = shear.inverse(rect[i]);
  return ell;
}

FamilyRatio family_ratio(const Parallelogram& p, double v) {
  require_parameter(p, v);
  const double l = p.l, k = p.k, d = p.d;
  const double G = (d + l) * (d + l) + k * k;

  FamilyRatio r;
  r.v = v;
  // m(v) equals (B - A)^2 + 4C^2 of the family conic; the sum of squares
  // avoids the cancellation of the expanded polynomial near circles.
  const auto c = inscribed_coefficients(l, k, d, v);
  const double diff = c[1] - c[0];
  r.m_v = diff * diff + 4 * c[2] * c[2];
  const double root_m = std::sqrt(r.m_v);
  // q = 4dlv - kG < 0 on (0, k), and q^2 - m = 16 k^2 l^2 v (k - v).
  const double abs_q = k * G - 4 * d * l * v;
  const double kl2 = k * k * l * l;
  r.g_v = -16 * kl2 * root_m / (root_m + abs_q);
  const double denom = abs_q + root_m;
  r.h_v = 16 * kl2 * v * (k - v) / (denom * denom);
  return r;
}

double v_epsilon(const Parallelogram& p) {
  const double l = p.l, k = p.k, d = p.d;
  return 0.5 * k * ((d + l) * (d + l) + k * k) / (k * k + d * d + l * l);
}

InscribedEllipse minimal_eccentricity_ellipse(const Parallelogram& p) {
  InscribedEllipse ell = inscribed_conic(p, v_epsilon(p));
  ell.is_minimal = true;
  return ell;
}

double minimal_inscribed_e2(const Parallelogram& p) {
  const DiagonalInvariants inv = diagonal_invariants(p);
  const double abs_i = std::abs(inv.I);
  return 2 * abs_i / (std::sqrt(inv.G * inv.H) + abs_i);
}

double minimal_inscribed_ratio(const Parallelogram& p) { return 1.0 - minimal_inscribed_e2(p); }

double stationarity_residual(const Parallelogram& p) {
  const double v = v_epsilon(p);
  const double step = 1e-6 * p.k;
  const double hp = family_ratio(p, v + step).h_v;
  const double hm = family_ratio(p, v - step).h_v;
  return std::abs((hp - hm) / (2 * step));
}

double stationarity_scale(const Parallelogram& p) {
  const double v = v_epsilon(p);
  const double step = 1e-6 * p.k;
  const double hp = family_ratio(p, v + step).h_v;
  const double h0 = family_ratio(p, v).h_v;
  const double hm = family_ratio(p, v - step).h_v;
  return std::abs(hp - 2 * h0 + hm) / (step * step) * p.k;
}

double conjugate_diameter_angle(const EllipseGeometry& g) { return 2 * std::atan(g.b / g.a); }

double conjugate_diameter_angle(const InscribedEllipse& ell) {
  return conjugate_diameter_angle(ell.geometry);
}

AngleCheck check_conjugate_diagonal_angles(const Parallelogram& p) {
  AngleCheck r;
  r.two_theta = conjugate_diameter_angle(minimal_eccentricity_ellipse(p));
  r.psi = diagonal_invariants(p).psi;
  r.delta = std::abs(r.two_theta - r.psi);
  return r;
}

std::array<Segment, 2> equal_conjugate_diameters(const EllipseGeometry& g) {
  const double cs = std::cos(g.phi), sn = std::sin(g.phi);
  const auto to_world = [&](double u, double w) {
    return Vec2{cs * u - sn * w, sn * u + cs * w};
  };
  const double s = std::sqrt(0.5);
  const Vec2 e1 = to_world(g.a * s, g.b * s);
  const Vec2 e2 = to_world(-g.a * s, g.b * s);
  return {Segment{g.center - e1, g.center + e1}, Segment{g.center - e2, g.center + e2}};
}

double double_root_residual(const Conic& c, Vec2 a, Vec2 b) {
  return relative_residual(c, line_extremum(c, a, b));
}

TangencyDiagnostics diagnose_tangency(const InscribedEllipse& ell, const Parallelogram& p) {
  const auto sides = canonical_sides(p);
  TangencyDiagnostics r;
  r.min_interior_margin = 1.0;
  for (int i = 0; i < 4; ++i) {
    const auto [a, b] = sides[i];
    const Vec2 t = ell.tangency[i];
    const Vec2 foot = line_extremum(ell.conic, a, b);
    const double len = norm(b - a);
    r.max_double_root_residual =
        std::max(r.max_double_root_residual, relative_residual(ell.conic, foot));
    r.max_on_curve_residual = std::max(r.max_on_curve_residual, relative_residual(ell.conic, t));
    r.max_foot_offset = std::max(r.max_foot_offset, norm(foot - t) / len);
    const double s = dot(t - a, b - a) / (len * len);
    r.min_interior_margin = std::min(r.min_interior_margin, std::min(s, 1 - s));
  }
  return r;
}

InscribedEllipse transported(const InscribedEllipse& ell, const Affine2& f) {
  InscribedEllipse out = ell;
  out.conic = pull_back(ell.conic, f.inverse());
  out.geometry = geometry(out.conic);
  for (auto& t : out.tangency) t = f.apply(t);
  return out;
}

}  // namespace inell
