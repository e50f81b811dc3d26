#pragma once

#include <array>
#include <cmath>

#include "inell/geometry.hpp"

namespace inell {

/// General second-degree curve A x^2 + B y^2 + 2C xy + D x + E y + F = 0.
///
/// C is half the xy coefficient. Coefficients are stored exactly as given:
/// two conics describe the same curve when they agree up to a positive scale
/// (see proportional()).
struct Conic {
  double A = 0, B = 0, C = 0, D = 0, E = 0, F = 0;

  constexpr std::array<double, 6> coefficients() const { return {A, B, C, D, E, F}; }
  constexpr Conic scaled(double s) const { return {s * A, s * B, s * C, s * D, s * E, s * F}; }
  friend constexpr bool operator==(const Conic&, const Conic&) = default;
};

/// Metric description of an ellipse. phi is the direction of the major axis,
/// counterclockwise from +x, in [0, pi); 0 for circles. e2 = 1 - b^2/a^2.
struct EllipseGeometry {
  Vec2 center{};
  double a = 0;
  double b = 0;
  double phi = 0;
  double e = 0;
  double e2 = 0;
};

/// Builds a geometry record with e and e2 derived from a >= b > 0.
EllipseGeometry make_geometry(Vec2 center, double a, double b, double phi);

/// Negates all coefficients when A < 0 and B < 0.
/// Throws MixedSignConic when A and B do not share a strict sign.
Conic sign_normalized(const Conic& c);

/// AE^2 + BD^2 + 4FC^2 - 2CDE - 4ABF, the numerator shared by both semi-axis formulas.
double axis_numerator(const Conic& c);

bool is_ellipse(const Conic& c);

/// Center, semi-axes, major-axis direction and eccentricity. Throws NotAnEllipse.
EllipseGeometry geometry(const Conic& c);

double evaluate(const Conic& c, Vec2 p);

/// |evaluate(c,p)| divided by the sum of the absolute values of its six terms.
/// Dimensionless, so it can be compared against a fixed tolerance at any scale.
double relative_residual(const Conic& c, Vec2 p);

/// Conic b^2 u^2 + a^2 w^2 - a^2 b^2 = 0 in the ellipse's own (u, w) axes.
Conic from_geometry(const EllipseGeometry& g);

/// The conic c' with c'(p) = c(f(p)); maps a curve given in f's target frame
/// into f's source frame.
Conic pull_back(const Conic& c, const Affine2& f);

/// Curve-preserving scaling to unit Euclidean coefficient norm with A > 0
/// (or the first nonzero coefficient positive).
Conic normalized(const Conic& c);

/// True when c1 = s * c2 for some s > 0, comparing normalized coefficients
/// to an absolute tolerance.
bool proportional(const Conic& c1, const Conic& c2, double tol);

/// b^2/a^2 of an ellipse from its quadratic part, as 4(AB - C^2) / (A + B + s)^2
/// with s = sqrt((B - A)^2 + 4C^2). Templated so oracles can run in extended precision.
template <class T>
T axis_ratio_sq(T A, T B, T C) {
  using std::sqrt;
  const T s = sqrt((B - A) * (B - A) + 4 * C * C);
  const T sum = A + B + s;
  return 4 * (A * B - C * C) / (sum * sum);
}

}  // namespace inell
