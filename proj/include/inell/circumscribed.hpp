#pragma once

#include <array>
#include <optional>
#include <string>

#include "inell/conic.hpp"
#include "inell/parallelogram.hpp"

namespace inell {

/// One ellipse through the four vertices, in the canonical frame.
struct CircumscribedEllipse {
  double u = 0;
  Conic conic{};
  EllipseGeometry geometry{};
};

/// Which algebraic form of "a squared diagonal equals twice a squared side" holds.
enum class BiellipticCondition {
  none,
  diagonal_or_side_oq,  // k^2 + d^2 - 2dl - l^2 = 0, i.e. |OR|^2 = 2|OQ|^2 (and |PQ|^2 = 2|OP|^2)
  diagonal_or_side_op,  // k^2 + d^2 + 2dl - l^2 = 0, i.e. |OR|^2 = 2|OP|^2 (and |PQ|^2 = 2|OQ|^2)
};

std::string to_string(BiellipticCondition c);

struct LengthWitness {
  std::string diagonal;  // "OR" or "PQ"
  std::string side;      // "OP" or "OQ"
  double diagonal_sq = 0;
  double side_sq = 0;
};

/// Values of the three polynomial conditions whose vanishing is equivalent
/// to equal minimal eccentricities. The third never vanishes for k > 0.
struct BiellipticConditionValues {
  double diagonal_or_side_oq = 0;  // k^2 + d^2 - 2dl - l^2
  double diagonal_or_side_op = 0;  // k^2 + d^2 + 2dl - l^2
  double spurious = 0;             // 2d^2 + k^2 - 2d sqrt(d^2 + k^2)
};

struct BiellipticVerdict {
  bool is_bielliptic = false;
  double e2_inscribed = 0;
  double e2_circumscribed = 0;
  BiellipticCondition matched_condition = BiellipticCondition::none;
  std::optional<LengthWitness> diagonal_side_witness;
  BiellipticConditionValues values{};
};

/// Coefficients {A, B, C, D, E, F} (C half the xy coefficient) of the member
/// k u x^2 + k y^2 - 2ud xy - klu x + [ud(l+d) - k^2] y = 0.
template <class T>
std::array<T, 6> circumscribed_coefficients(T l, T k, T d, T u) {
  return {k * u, k, -u * d, -k * l * u, u * d * (l + d) - k * k, T(0)};
}

/// k^2 / d^2, or +infinity for rectangles.
double circumscribed_upper_bound(const Parallelogram& p);

/// Throws ParameterOutOfRange unless 0 < u < circumscribed_upper_bound(p).
CircumscribedEllipse circumscribed_conic(const Parallelogram& p, double u);

/// k^2 / (k^2 + 2 d^2); 1 for rectangles.
double u_star(const Parallelogram& p);

CircumscribedEllipse minimal_eccentricity_circumellipse(const Parallelogram& p);

/// 1 - b^2/a^2 of the minimal circumscribed ellipse: 2d (sqrt(d^2 + k^2) - d) / k^2,
/// evaluated as 2d / (sqrt(d^2 + k^2) + d). Independent of l.
double minimal_circumscribed_e2(const Parallelogram& p);

/// Largest relative residual of the conic at the four canonical vertices.
double vertex_incidence_residual(const CircumscribedEllipse& ell, const Parallelogram& p);

BiellipticConditionValues bielliptic_condition_values(const Parallelogram& p);

/// Decides whether the minimal inscribed and circumscribed ellipses share
/// their eccentricity, by three routes that must agree: e2 equality
/// (tolerance 1e-9), the polynomial conditions, and the diagonal/side length
/// witness (both at 1e-9 * J). Throws InternalError if the routes disagree.
BiellipticVerdict bielliptic_verdict(const Parallelogram& p);

}  // namespace inell
