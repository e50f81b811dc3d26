#pragma once

#include <array>
#include <random>

#include "inell/conic.hpp"
#include "inell/geometry.hpp"

namespace inell {

/// Canonical-frame parameters of a generated parallelogram.
struct FrameSample {
  double l = 1;
  double k = 1;
  double d = 0;
};

enum class FrameKind {
  general,         // l, k in [0.5, 5], d in [0, 5]
  acute_diagonal,  // I > 0
  rhombus,         // I = 0
  obtuse_diagonal, // I < 0
  rectangle,       // d = 0
};

FrameSample random_frame(std::mt19937_64& rng, FrameKind kind);

/// Rotation by a uniform angle, a reflection with probability 1/2, and a
/// translation in [-10, 10]^2.
Affine2 random_isometry(std::mt19937_64& rng);

/// Canonical vertices of the frame mapped through iso, in shuffled order.
std::array<Vec2, 4> place(const FrameSample& frame, const Affine2& iso, std::mt19937_64& rng);

/// Ellipse with center in [-10, 10]^2, b in [0.1, 5], a/b in [1.01, 10], phi in [0, pi).
EllipseGeometry random_ellipse(std::mt19937_64& rng);

/// Frame satisfying k^2 + d^2 + 2dl - l^2 = 0 (squared long diagonal equals
/// twice the squared side OP).
FrameSample random_bielliptic_frame(std::mt19937_64& rng);

}  // namespace inell
