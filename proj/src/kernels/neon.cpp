#include <arm_neon.h>

#include "variants.hpp"

namespace inell::kernels::neon {

namespace {

inline float64x2_t axis_ratio(float64x2_t a, float64x2_t b, float64x2_t c) {
  const float64x2_t four = vdupq_n_f64(4.0);
  const float64x2_t cc = vmulq_f64(c, c);
  const float64x2_t t = vsubq_f64(b, a);
  const float64x2_t s = vsqrtq_f64(vaddq_f64(vmulq_f64(t, t), vmulq_f64(four, cc)));
  const float64x2_t sum = vaddq_f64(vaddq_f64(a, b), s);
  const float64x2_t num = vmulq_f64(four, vsubq_f64(vmulq_f64(a, b), cc));
  return vdivq_f64(num, vmulq_f64(sum, sum));
}

}  // namespace

void inscribed_ratio(double l, double k, double d, const double* v, double* out, std::size_t n) {
  const float64x2_t a = vdupq_n_f64(k * k * k);
  const float64x2_t b0 = vdupq_n_f64(k * ((d + l) * (d + l)));
  const float64x2_t b1 = vdupq_n_f64(-4.0 * d * l);
  const float64x2_t c0 = vdupq_n_f64(-(k * k) * (d + l));
  const float64x2_t c1 = vdupq_n_f64(2.0 * k * l);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t vv = vld1q_f64(v + i);
    const float64x2_t b = vaddq_f64(b0, vmulq_f64(b1, vv));
    const float64x2_t c = vaddq_f64(c0, vmulq_f64(c1, vv));
    vst1q_f64(out + i, axis_ratio(a, b, c));
  }
  scalar::inscribed_ratio(l, k, d, v + i, out + i, n - i);
}

void circumscribed_ratio(double k, double d, const double* u, double* out, std::size_t n) {
  const float64x2_t kk = vdupq_n_f64(k);
  const float64x2_t neg_d = vdupq_n_f64(-d);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t uu = vld1q_f64(u + i);
    vst1q_f64(out + i, axis_ratio(vmulq_f64(kk, uu), kk, vmulq_f64(neg_d, uu)));
  }
  scalar::circumscribed_ratio(k, d, u + i, out + i, n - i);
}

void conic_evaluate(const double* c, const double* x, const double* y, double* out, std::size_t n) {
  const float64x2_t ca = vdupq_n_f64(c[0]);
  const float64x2_t cb = vdupq_n_f64(c[1]);
  const float64x2_t c2 = vdupq_n_f64(2.0 * c[2]);
  const float64x2_t cd = vdupq_n_f64(c[3]);
  const float64x2_t ce = vdupq_n_f64(c[4]);
  const float64x2_t cf = vdupq_n_f64(c[5]);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t xi = vld1q_f64(x + i);
    const float64x2_t yi = vld1q_f64(y + i);
    float64x2_t acc = vmulq_f64(vmulq_f64(ca, xi), xi);
    acc = vaddq_f64(acc, vmulq_f64(vmulq_f64(cb, yi), yi));
    acc = vaddq_f64(acc, vmulq_f64(vmulq_f64(c2, xi), yi));
    acc = vaddq_f64(acc, vmulq_f64(cd, xi));
    acc = vaddq_f64(acc, vmulq_f64(ce, yi));
    vst1q_f64(out + i, vaddq_f64(acc, cf));
  }
  scalar::conic_evaluate(c, x + i, y + i, out + i, n - i);
}

}  // namespace inell::kernels::neon
