#include <cmath>

#include "variants.hpp"

namespace inell::kernels::scalar {

namespace {

// 4 (AB - C^2) / (A + B + s)^2, s = sqrt((B - A)^2 + 4 C^2). The SIMD variants
// mirror this operation order exactly.
inline double axis_ratio(double a, double b, double c) {
  const double cc = c * c;
  const double t = b - a;
  const double s = std::sqrt(t * t + 4.0 * cc);
  const double sum = (a + b) + s;
  return (4.0 * (a * b - cc)) / (sum * sum);
}

}  // namespace

void inscribed_ratio(double l, double k, double d, const double* v, double* out, std::size_t n) {
  const double a = k * k * k;
  const double b0 = k * ((d + l) * (d + l));
  const double b1 = -4.0 * d * l;
  const double c0 = -(k * k) * (d + l);
  const double c1 = 2.0 * k * l;
  for (std::size_t i = 0; i < n; ++i) {
    const double b = b0 + b1 * v[i];
    const double c = c0 + c1 * v[i];
    out[i] = axis_ratio(a, b, c);
  }
}

void circumscribed_ratio(double k, double d, const double* u, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = axis_ratio(k * u[i], k, -d * u[i]);
}

void conic_evaluate(const double* c, const double* x, const double* y, double* out, std::size_t n) {
  const double two_c = 2.0 * c[2];
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i], yi = y[i];
    double acc = (c[0] * xi) * xi;
    acc = acc + (c[1] * yi) * yi;
    acc = acc + (two_c * xi) * yi;
    acc = acc + c[3] * xi;
    acc = acc + c[4] * yi;
    out[i] = acc + c[5];
  }
}

}  // namespace inell::kernels::scalar
