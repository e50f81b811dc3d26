#pragma once

#include <array>
#include <span>

#include "inell/geometry.hpp"

namespace inell {

/// A parallelogram together with its canonical frame O=(0,0), P=(l,0),
/// Q=(d,k), R=(l+d,k) with l, k > 0 and d >= 0.
///
/// `vertices` holds O, P, Q, R in the caller's frame; `iso` is the isometry
/// taking that frame to the canonical one.
struct Parallelogram {
  std::array<Vec2, 4> vertices{};
  double l = 1;
  double k = 1;
  double d = 0;
  Affine2 iso{};

  /// Already-canonical parallelogram with the identity isometry.
  /// Throws InvalidInput unless l, k > 0 and d >= 0.
  static Parallelogram from_frame(double l, double k, double d);

  std::array<Vec2, 4> canonical_vertices() const;
  /// Canonical frame back to the caller's frame.
  Affine2 to_original() const { return iso.inverse(); }

  double side_op_sq() const { return l * l; }
  double side_oq_sq() const { return d * d + k * k; }
};

/// G = |OR|^2, H = |PQ|^2, J = d^2 + k^2 + l^2, I = l^2 - d^2 - k^2, and psi,
/// the smallest nonnegative angle between the diagonals, in (0, pi/2].
struct DiagonalInvariants {
  double G = 0;
  double H = 0;
  double I = 0;
  double J = 0;
  double psi = 0;
};

/// Labels four points (any order) as a parallelogram and finds its canonical frame.
///
/// Among valid labelings a proper rotation is preferred to a reflection, then
/// the smallest rotation angle, then input order, so canonical input maps by
/// the identity. Throws NotAParallelogram when no pairing of the points into
/// diagonals has a common midpoint, DegenerateParallelogram when the area is
/// below 1e-12 * diameter^2.
Parallelogram canonicalize(std::span<const Vec2, 4> points);
Parallelogram canonicalize(Vec2 p1, Vec2 p2, Vec2 p3, Vec2 p4);

DiagonalInvariants diagonal_invariants(const Parallelogram& p);

/// T(x, y) = (x - (d/k) y, y): canonical parallelogram onto the rectangle
/// [0, l] x [0, k].
struct Shear {
  double ratio = 0;  // d / k

  constexpr Vec2 apply(Vec2 p) const { return {p.x - ratio * p.y, p.y}; }
  constexpr Vec2 inverse(Vec2 p) const { return {p.x + ratio * p.y, p.y}; }
  Affine2 affine() const;
  Affine2 inverse_affine() const;
};

Shear shear_to_rectangle(const Parallelogram& p);

}  // namespace inell
