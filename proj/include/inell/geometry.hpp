#pragma once

#include <array>
#include <cmath>

namespace inell {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend constexpr Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
constexpr double norm_sq(Vec2 a) { return dot(a, a); }

/// Smallest nonnegative angle between the lines spanned by a and b, in [0, pi/2].
inline double line_angle(Vec2 a, Vec2 b) {
  double t = std::atan2(std::abs(cross(a, b)), dot(a, b));
  return t > M_PI / 2 ? M_PI - t : t;
}

/// x -> M x + t.
struct Affine2 {
  std::array<std::array<double, 2>, 2> m{{{1.0, 0.0}, {0.0, 1.0}}};
  Vec2 t{};

  constexpr Vec2 apply(Vec2 p) const {
    return {m[0][0] * p.x + m[0][1] * p.y + t.x, m[1][0] * p.x + m[1][1] * p.y + t.y};
  }
  constexpr Vec2 apply_linear(Vec2 p) const {
    return {m[0][0] * p.x + m[0][1] * p.y, m[1][0] * p.x + m[1][1] * p.y};
  }
  constexpr double det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

  Affine2 inverse() const {
    const double dt = det();
    Affine2 r;
    r.m = {{{m[1][1] / dt, -m[0][1] / dt}, {-m[1][0] / dt, m[0][0] / dt}}};
    const Vec2 rt = r.apply_linear(t);
    r.t = {-rt.x, -rt.y};
    return r;
  }

  /// (this * other)(p) == this->apply(other.apply(p))
  constexpr Affine2 compose(const Affine2& o) const {
    Affine2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
    r.t = apply(o.t);
    return r;
  }

  static Affine2 rotation(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    Affine2 r;
    r.m = {{{c, -s}, {s, c}}};
    return r;
  }
  static constexpr Affine2 translation(Vec2 v) {
    Affine2 r;
    r.t = v;
    return r;
  }
};

}  // namespace inell
