#pragma once

#include "inell/inscribed.hpp"

namespace inell {

/// Metrics of the inscribed family of the rectangle [0, l] x [0, k] at parameter v.
/// sum_sq = a^2 + b^2 is (k^2 + l^2)/4 for every v; diff_sq = a^2 - b^2.
struct RectangleFamilyMetrics {
  double v = 0;
  double ecc2 = 0;
  double area = 0;
  double arc_length = 0;
  double sum_sq = 0;
  double diff_sq = 0;
};

/// Locations of the three extremizers over (0, k) found by grid scan plus
/// golden-section refinement.
struct ExtremizerReport {
  double midpoint = 0;  // k / 2
  double argmin_ecc2 = 0;
  double argmax_area = 0;
  double argmax_arc_length = 0;

  double max_deviation() const;
};

struct SemiAxesSq {
  double a2 = 0;
  double b2 = 0;
};

/// The inscribed ellipse tangent at the four side midpoints (v = k/2).
/// Throws InvalidInput unless l, k > 0.
InscribedEllipse midpoint_ellipse(double l, double k);

/// a^2, b^2 of the rectangle family member directly from l, k, v.
SemiAxesSq rectangle_semi_axes_sq(double l, double k, double v);

/// Perimeter of the ellipse with semi-axes^2 a2, b2:
/// 2 sqrt(2) * integral_0^{pi/2} [a2 + b2 - (a2 - b2) cos 2t]^{1/2} dt.
double ellipse_perimeter(double a2, double b2, double abs_tol = 1e-10, double rel_tol = 1e-12);
long double ellipse_perimeter_ext(long double a2, long double b2);

/// Throws ParameterOutOfRange unless 0 < v < k.
RectangleFamilyMetrics rectangle_metrics(double l, double k, double v);

/// Scans `grid` interior points then refines each extremizer. grid >= 3.
ExtremizerReport rectangle_extremizers(double l, double k, int grid);

}  // namespace inell
