#include "inell/rectangle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "inell/errors.hpp"
#include "inell/numerics.hpp"

namespace inell {

namespace {

void require_sides(double l, double k) {
  if (!(l > 0) || !(k > 0)) throw InvalidInput("rectangle sides must be positive");
}

void require_parameter(double k, double v) {
  if (!(v > 0 && v < k)) {
    std::ostringstream msg;
    msg << "rectangle family parameter v = " << v << " outside (0, " << k << ")";
    throw ParameterOutOfRange(msg.str());
  }
}

// Extended-precision objectives for the extremizer search.
struct RectangleFamilyExt {
  long double l, k;

  long double p() const { return k * k + l * l; }
  long double s(long double v) const { return (k - v) * v; }
  long double root_g3(long double v) const {
    const long double g3 = p() * p() - 16 * l * l * s(v);
    return std::sqrt(std::max(g3, 0.0L));
  }
  long double ratio(long double v) const { return (p() - root_g3(v)) / (p() + root_g3(v)); }
  long double area(long double v) const { return M_PIl * l / 2 * std::sqrt(s(v)); }
  long double arc_length(long double v) const {
    const long double sum = p() / 4;
    const long double diff = root_g3(v) / 4;
    return ellipse_perimeter_ext((sum + diff) / 2, (sum - diff) / 2);
  }
};

}  // namespace

double ExtremizerReport::max_deviation() const {
  return std::max({std::abs(argmin_ecc2 - midpoint), std::abs(argmax_area - midpoint),
                   std::abs(argmax_arc_length - midpoint)});
}

InscribedEllipse midpoint_ellipse(double l, double k) {
  require_sides(l, k);
  return inscribed_conic(Parallelogram::from_frame(l, k, 0.0), k / 2);
}

SemiAxesSq rectangle_semi_axes_sq(double l, double k, double v) {
  require_sides(l, k);
  require_parameter(k, v);
  const double p = k * k + l * l;
  const double s = (k - v) * v;
  const double root = std::sqrt(std::max(p * p - 16 * l * l * s, 0.0));
  return {2 * l * l * s / (p - root), 2 * l * l * s / (p + root)};
}

double ellipse_perimeter(double a2, double b2, double abs_tol, double rel_tol) {
  const double sum = a2 + b2, diff = a2 - b2;
  const auto r = integrate(
      [=](double t) { return std::sqrt(std::max(sum - diff * std::cos(2 * t), 0.0)); }, 0.0,
      M_PI / 2, abs_tol / (2 * M_SQRT2), rel_tol);
  return 2 * M_SQRT2 * r.value;
}

long double ellipse_perimeter_ext(long double a2, long double b2) {
  const long double sum = a2 + b2, diff = a2 - b2;
  const auto r = integrate_t<long double>(
      [=](long double t) { return std::sqrt(std::max(sum - diff * std::cos(2 * t), 0.0L)); }, 0.0L,
      M_PIl / 2, 0.0L, 1e-17L);
  return 2 * std::sqrt(2.0L) * r.value;
}

RectangleFamilyMetrics rectangle_metrics(double l, double k, double v) {
  const SemiAxesSq ax = rectangle_semi_axes_sq(l, k, v);
  RectangleFamilyMetrics r;
  r.v = v;
  r.ecc2 = 1.0 - ax.b2 / ax.a2;
  r.area = M_PI * std::sqrt(ax.a2 * ax.b2);
  r.arc_length = ellipse_perimeter(ax.a2, ax.b2);
  r.sum_sq = ax.a2 + ax.b2;
  r.diff_sq = ax.a2 - ax.b2;
  return r;
}

ExtremizerReport rectangle_extremizers(double l, double k, int grid) {
  require_sides(l, k);
  if (grid < 3) throw InvalidInput("extremizer scan needs at least 3 grid points");
  const RectangleFamilyExt fam{l, k};
  const MinimizeOptions opts{grid, 200};
  const double tol = 1e-12 * k;

  ExtremizerReport r;
  r.midpoint = k / 2;
  r.argmin_ecc2 = minimize_scalar([&](double v) { return 1 - fam.ratio(v); }, 0, k, tol, opts).x_min;
  r.argmax_area = minimize_scalar([&](double v) { return -fam.area(v); }, 0, k, tol, opts).x_min;
  r.argmax_arc_length =
      minimize_scalar([&](double v) { return -fam.arc_length(v); }, 0, k, tol, opts).x_min;
  return r;
}

}  // namespace inell
