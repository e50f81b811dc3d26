#include "inell/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace inell {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace

FrameSample random_frame(std::mt19937_64& rng, FrameKind kind) {
  FrameSample f;
  f.k = uniform(rng, 0.5, 5.0);
  f.d = uniform(rng, 0.0, 5.0);
  const double side = std::hypot(f.d, f.k);
  switch (kind) {
    case FrameKind::general:
      f.l = uniform(rng, 0.5, 5.0);
      break;
    case FrameKind::acute_diagonal:
      f.l = side * uniform(rng, 1.05, 3.0);
      break;
    case FrameKind::rhombus:
      f.l = side;
      break;
    case FrameKind::obtuse_diagonal:
      f.l = side * uniform(rng, 0.2, 0.95);
      break;
    case FrameKind::rectangle:
      f.d = 0;
      f.l = uniform(rng, 0.5, 5.0);
      break;
  }
  return f;
}

Affine2 random_isometry(std::mt19937_64& rng) {
  Affine2 iso = Affine2::rotation(uniform(rng, 0.0, 2 * M_PI));
  if (std::bernoulli_distribution(0.5)(rng)) {
    iso.m[0][1] = -iso.m[0][1];
    iso.m[1][1] = -iso.m[1][1];
  }
  iso.t = {uniform(rng, -10.0, 10.0), uniform(rng, -10.0, 10.0)};
  return iso;
}

std::array<Vec2, 4> place(const FrameSample& f, const Affine2& iso, std::mt19937_64& rng) {
  std::array<Vec2, 4> pts{Vec2{0, 0}, Vec2{f.l, 0}, Vec2{f.d, f.k}, Vec2{f.l + f.d, f.k}};
  for (Vec2& p : pts) p = iso.apply(p);
  std::shuffle(pts.begin(), pts.end(), rng);
  return pts;
}

EllipseGeometry random_ellipse(std::mt19937_64& rng) {
  const double b = uniform(rng, 0.1, 5.0);
  const double a = b * uniform(rng, 1.01, 10.0);
  return make_geometry({uniform(rng, -10.0, 10.0), uniform(rng, -10.0, 10.0)}, a, b,
                       uniform(rng, 0.0, M_PI));
}

FrameSample random_bielliptic_frame(std::mt19937_64& rng) {
  // k^2 = l^2 - 2dl - d^2 > 0 needs d < (sqrt(2) - 1) l.
  FrameSample f;
  f.l = uniform(rng, 0.5, 5.0);
  f.d = f.l * (std::sqrt(2.0) - 1) * uniform(rng, 0.0, 0.9);
  f.k = std::sqrt(f.l * f.l - 2 * f.d * f.l - f.d * f.d);
  return f;
}

}  // namespace inell
