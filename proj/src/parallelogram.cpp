#include "inell/parallelogram.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <tuple>

#include "inell/errors.hpp"

namespace inell {

namespace {

constexpr double kClosureTol = 1e-9;
constexpr double kAreaTol = 1e-12;

struct Candidate {
  int reflect = 0;
  double angle = 0;
  int o = 0;
  int p = 0;
  Parallelogram result;

  auto key() const { return std::tuple(reflect, angle, o, p); }
};

}  // namespace

Parallelogram Parallelogram::from_frame(double l, double k, double d) {
  if (!(l > 0) || !(k > 0) || !(d >= 0))
    throw InvalidInput("canonical frame requires l > 0, k > 0, d >= 0");
  Parallelogram p;
  p.l = l;
  p.k = k;
  p.d = d;
  p.vertices = p.canonical_vertices();
  return p;
}

std::array<Vec2, 4> Parallelogram::canonical_vertices() const {
  return {Vec2{0, 0}, Vec2{l, 0}, Vec2{d, k}, Vec2{l + d, k}};
}

Parallelogram canonicalize(Vec2 p1, Vec2 p2, Vec2 p3, Vec2 p4) {
  const std::array<Vec2, 4> pts{p1, p2, p3, p4};
  return canonicalize(std::span<const Vec2, 4>(pts));
}

Parallelogram canonicalize(std::span<const Vec2, 4> pts) {
  for (const Vec2& q : pts)
    if (!std::isfinite(q.x) || !std::isfinite(q.y))
      throw InvalidInput("vertex coordinates must be finite");

  double diameter = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) diameter = std::max(diameter, norm(pts[i] - pts[j]));
  if (!(diameter > 0)) throw DegenerateParallelogram("all four points coincide");

  // A parallelogram's diagonals bisect each other: find the pairing {0,j} / rest
  // with the closest midpoints.
  int best_partner = -1;
  double best_gap = 0;
  for (int j = 1; j < 4; ++j) {
    int r[2], n = 0;
    for (int i = 1; i < 4; ++i)
      if (i != j) r[n++] = i;
    const double gap = norm((pts[0] + pts[j]) - (pts[r[0]] + pts[r[1]])) / 2;
    if (best_partner < 0 || gap < best_gap) {
      best_partner = j;
      best_gap = gap;
    }
  }
  if (best_gap > kClosureTol * diameter)
    throw NotAParallelogram("no labeling of the points closes into a parallelogram (midpoint gap " +
                            std::to_string(best_gap) + ")");

  // Cycle order a, b, c, e with diagonals (a, c) and (b, e).
  std::array<int, 4> cycle{0, 0, best_partner, 0};
  {
    int n = 0;
    for (int i = 1; i < 4; ++i)
      if (i != best_partner) (n++ == 0 ? cycle[1] : cycle[3]) = i;
  }
  const double area = std::abs(cross(pts[cycle[1]] - pts[cycle[0]], pts[cycle[3]] - pts[cycle[0]]));
  if (area < kAreaTol * diameter * diameter)
    throw DegenerateParallelogram("parallelogram area " + std::to_string(area) +
                                  " is below 1e-12 * diameter^2");

  std::optional<Candidate> best;
  for (int pos = 0; pos < 4; ++pos) {
    const int o = cycle[pos];
    const int n1 = cycle[(pos + 1) % 4];
    const int n2 = cycle[(pos + 3) % 4];
    const int opposite = cycle[(pos + 2) % 4];
    for (auto [pi, qi] : {std::pair{n1, n2}, std::pair{n2, n1}}) {
      const Vec2 op = pts[pi] - pts[o];
      const Vec2 oq = pts[qi] - pts[o];
      // Non-obtuse angle at O gives d >= 0.
      if (dot(op, oq) < -1e-12 * norm(op) * norm(oq)) continue;

      const double angle = std::atan2(op.y, op.x);
      Affine2 m = Affine2::rotation(-angle);
      int reflect = 0;
      if (m.apply_linear(oq).y < 0) {
        m.m[1][0] = -m.m[1][0];
        m.m[1][1] = -m.m[1][1];
        reflect = 1;
      }
      const Vec2 mo = m.apply_linear(pts[o]);
      m.t = {-mo.x, -mo.y};

      Candidate c;
      c.reflect = reflect;
      c.angle = std::abs(angle);
      c.o = o;
      c.p = pi;
      Parallelogram& r = c.result;
      r.vertices = {pts[o], pts[pi], pts[qi], pts[opposite]};
      r.iso = m;
      r.l = norm(op);
      const Vec2 q = m.apply_linear(oq);
      r.k = q.y;
      r.d = std::max(q.x, 0.0);
      if (!best || c.key() < best->key()) best = c;
    }
  }
  if (!best) throw InternalError("parallelogram has no non-obtuse vertex");
  return best->result;
}

DiagonalInvariants diagonal_invariants(const Parallelogram& p) {
  const double l = p.l, k = p.k, d = p.d;
  DiagonalInvariants r;
  r.G = (d + l) * (d + l) + k * k;
  r.H = (d - l) * (d - l) + k * k;
  r.J = d * d + k * k + l * l;
  r.I = l * l - d * d - k * k;
  const Vec2 d1{l + d, k};   // O -> R
  const Vec2 d2{d - l, k};   // P -> Q
  r.psi = line_angle(d1, d2);
  return r;
}

Affine2 Shear::affine() const {
  Affine2 a;
  a.m[0][1] = -ratio;
  return a;
}

Affine2 Shear::inverse_affine() const {
  Affine2 a;
  a.m[0][1] = ratio;
  return a;
}

Shear shear_to_rectangle(const Parallelogram& p) { return Shear{p.d / p.k}; }

}  // namespace inell
