#pragma once

#include <array>

#include "inell/conic.hpp"
#include "inell/parallelogram.hpp"

namespace inell {

/// One member of the inscribed family of a parallelogram, in its canonical
/// frame unless transported. tangency[i] lies on side i, sides ordered
/// OP, OQ, QR, PR.
struct InscribedEllipse {
  double v = 0;
  Conic conic{};
  EllipseGeometry geometry{};
  std::array<Vec2, 4> tangency{};
  bool is_minimal = false;
};

/// Closed-form quantities along the inscribed family: m(v), g(v) and
/// h(v) = b^2/a^2 = 1 + g(v) / (8 k^2 l^2).
struct FamilyRatio {
  double v = 0;
  double m_v = 0;
  double g_v = 0;
  double h_v = 0;
};

struct Segment {
  Vec2 from{};
  Vec2 to{};
};

/// Two-theta (angle between the equal conjugate diameters of the minimal
/// eccentricity ellipse), psi (angle between the diagonals) and their gap.
struct AngleCheck {
  double two_theta = 0;
  double psi = 0;
  double delta = 0;
};

struct TangencyDiagnostics {
  double max_double_root_residual = 0;  // conic restricted to each side line, at its extremum
  double max_on_curve_residual = 0;     // relative_residual at the tangency points
  double max_foot_offset = 0;           // |extremum - tangency point| / side length
  double min_interior_margin = 0;       // min over sides of min(s, 1 - s)
};

/// Coefficients of the inscribed family member with parameter v, in the
/// canonical frame. Returns {A, B, C, D, E, F} with C half the xy coefficient.
template <class T>
std::array<T, 6> inscribed_coefficients(T l, T k, T d, T v) {
  return {k * k * k,
          k * (d + l) * (d + l) - 4 * d * l * v,
          -k * (k * d - 2 * l * v + k * l),
          -2 * k * k * l * v,
          2 * k * l * v * (d - l),
          k * l * l * v * v};
}

/// Throws ParameterOutOfRange unless 0 < v < k.
InscribedEllipse inscribed_conic(const Parallelogram& p, double v);

/// Throws ParameterOutOfRange unless 0 < v < k; InternalError if m(v) is
/// materially negative.
FamilyRatio family_ratio(const Parallelogram& p, double v);

/// Parameter of the minimal-eccentricity member, k ((d+l)^2 + k^2) / (2 (k^2 + d^2 + l^2)).
double v_epsilon(const Parallelogram& p);

InscribedEllipse minimal_eccentricity_ellipse(const Parallelogram& p);

/// b^2/a^2 of the minimal-eccentricity inscribed ellipse from the diagonal
/// invariants alone: 1 + |I| (|I| - sqrt(GH)) / (2 k^2 l^2).
double minimal_inscribed_ratio(const Parallelogram& p);
/// 1 - minimal_inscribed_ratio, evaluated as 2|I| / (sqrt(GH) + |I|).
double minimal_inscribed_e2(const Parallelogram& p);

/// |dh/dv| at v_epsilon by central differences with step 1e-6 k.
double stationarity_residual(const Parallelogram& p);
/// |d^2h/dv^2| k at v_epsilon from the same stencil. stationarity_residual
/// divided by this is the implied offset of the maximizer as a fraction of k,
/// which stays meaningful for sharply peaked h (flat, strongly sheared frames).
double stationarity_scale(const Parallelogram& p);

/// 2 atan(b/a), in (0, pi/2].
double conjugate_diameter_angle(const EllipseGeometry& g);
double conjugate_diameter_angle(const InscribedEllipse& ell);

AngleCheck check_conjugate_diagonal_angles(const Parallelogram& p);

/// The two diameters at +-atan(b/a) from the major axis, each of half-length
/// sqrt((a^2 + b^2) / 2). For a circle phi = 0, giving diameters at +-45 degrees.
std::array<Segment, 2> equal_conjugate_diameters(const EllipseGeometry& g);

/// Tangency and interiority diagnostics against the canonical sides of p.
TangencyDiagnostics diagnose_tangency(const InscribedEllipse& ell, const Parallelogram& p);

/// Relative residual of the conic at the extremum of its restriction to the
/// line through a and b; zero exactly when the line is tangent.
double double_root_residual(const Conic& c, Vec2 a, Vec2 b);

/// The ellipse mapped through an affine map f (conic pulled back through
/// f^-1, points pushed forward, geometry recomputed).
InscribedEllipse transported(const InscribedEllipse& ell, const Affine2& f);

}  // namespace inell
