#include <gtest/gtest.h>

#include <cmath>

#include "inell/errors.hpp"
#include "inell/parallelogram.hpp"

using namespace inell;

TEST(Parallelogram, CanonicalInputIsIdentity) {
  const Parallelogram p = canonicalize(Vec2{0, 0}, Vec2{2, 4}, Vec2{7, 4}, Vec2{5, 0});
  EXPECT_DOUBLE_EQ(p.l, 5);
  EXPECT_DOUBLE_EQ(p.k, 4);
  EXPECT_DOUBLE_EQ(p.d, 2);
  const auto c = p.canonical_vertices();
  for (int i = 0; i < 4; ++i) {
    EXPECT_DOUBLE_EQ(p.iso.apply(p.vertices[i]).x, c[i].x);
    EXPECT_DOUBLE_EQ(p.iso.apply(p.vertices[i]).y, c[i].y);
  }
}

TEST(Parallelogram, RotatedSquare) {
  const double h = std::sqrt(0.5);
  const Parallelogram p = canonicalize(Vec2{0, 0}, Vec2{h, h}, Vec2{0, 2 * h}, Vec2{-h, h});
  EXPECT_NEAR(p.l, 1, 1e-15);
  EXPECT_NEAR(p.k, 1, 1e-15);
  EXPECT_NEAR(p.d, 0, 1e-15);
}

TEST(Parallelogram, OrderInsensitive) {
  const Vec2 pts[4] = {{1, 1}, {3, 2}, {2, 5}, {4, 6}};
  const Parallelogram a = canonicalize(pts[0], pts[1], pts[2], pts[3]);
  const Parallelogram b = canonicalize(pts[3], pts[0], pts[2], pts[1]);
  EXPECT_NEAR(a.l, b.l, 1e-14);
  EXPECT_NEAR(a.k, b.k, 1e-14);
  EXPECT_NEAR(a.d, b.d, 1e-14);
}

TEST(Parallelogram, ObtuseAngleAtCanonicalOriginAvoided) {
  // A vertex order where the first point has an obtuse angle.
  const Parallelogram p = canonicalize(Vec2{5, 0}, Vec2{0, 0}, Vec2{2, 4}, Vec2{7, 4});
  EXPECT_GE(p.d, 0);
  EXPECT_NEAR(p.l * p.k, 20, 1e-12);
}

TEST(Parallelogram, Errors) {
  EXPECT_THROW(canonicalize(Vec2{0, 0}, Vec2{1, 0}, Vec2{2, 2}, Vec2{0, 1}), NotAParallelogram);
  EXPECT_THROW(canonicalize(Vec2{0, 0}, Vec2{1, 0}, Vec2{2, 0}, Vec2{3, 0}), DegenerateParallelogram);
  EXPECT_THROW(canonicalize(Vec2{1, 1}, Vec2{1, 1}, Vec2{1, 1}, Vec2{1, 1}), DegenerateParallelogram);
  EXPECT_THROW(canonicalize(Vec2{NAN, 0}, Vec2{1, 0}, Vec2{1, 1}, Vec2{0, 1}), InvalidInput);
  EXPECT_THROW(Parallelogram::from_frame(1, 0, 0), InvalidInput);
}

TEST(Parallelogram, DiagonalInvariantsWorkedExample) {
  const DiagonalInvariants inv = diagonal_invariants(Parallelogram::from_frame(5, 4, 2));
  EXPECT_DOUBLE_EQ(inv.G, 65);  // |OR|^2 = 7^2 + 4^2
  EXPECT_DOUBLE_EQ(inv.H, 25);  // |PQ|^2 = 3^2 + 4^2
  EXPECT_NEAR(inv.G * inv.H - inv.I * inv.I, 4 * 16 * 25, 1e-9);
  EXPECT_NEAR(inv.psi, std::atan(8.0), 1e-15);
}

TEST(Parallelogram, RhombusHasPerpendicularDiagonals) {
  const DiagonalInvariants inv = diagonal_invariants(Parallelogram::from_frame(std::sqrt(5.0), 2, 1));
  EXPECT_NEAR(inv.I, 0, 1e-14);
  EXPECT_NEAR(inv.psi, M_PI / 2, 1e-14);
}

TEST(Parallelogram, ShearMapsToRectangle) {
  const Parallelogram p = Parallelogram::from_frame(5, 4, 2);
  const Shear s = shear_to_rectangle(p);
  const auto v = p.canonical_vertices();
  const Vec2 q = s.apply(v[2]);
  EXPECT_DOUBLE_EQ(q.x, 0);
  EXPECT_DOUBLE_EQ(q.y, 4);
  const Vec2 back = s.inverse(q);
  EXPECT_DOUBLE_EQ(back.x, 2);
  const Vec2 viaAffine = s.inverse_affine().apply(s.affine().apply(v[3]));
  EXPECT_NEAR(viaAffine.x, v[3].x, 1e-15);
  EXPECT_NEAR(viaAffine.y, v[3].y, 1e-15);
}
