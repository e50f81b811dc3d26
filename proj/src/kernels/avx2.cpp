// Compiled with -mavx2. Keep this file free of inline library code so no
// AVX2-encoded copies of shared templates leak into the rest of the binary.

#include <immintrin.h>

#include "variants.hpp"

namespace inell::kernels::avx2 {

namespace {

inline __m256d axis_ratio(__m256d a, __m256d b, __m256d c) {
  const __m256d four = _mm256_set1_pd(4.0);
  const __m256d cc = _mm256_mul_pd(c, c);
  const __m256d t = _mm256_sub_pd(b, a);
  const __m256d s = _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(t, t), _mm256_mul_pd(four, cc)));
  const __m256d sum = _mm256_add_pd(_mm256_add_pd(a, b), s);
  const __m256d num = _mm256_mul_pd(four, _mm256_sub_pd(_mm256_mul_pd(a, b), cc));
  return _mm256_div_pd(num, _mm256_mul_pd(sum, sum));
}

}  // namespace

void inscribed_ratio(double l, double k, double d, const double* v, double* out, std::size_t n) {
  const __m256d a = _mm256_set1_pd(k * k * k);
  const __m256d b0 = _mm256_set1_pd(k * ((d + l) * (d + l)));
  const __m256d b1 = _mm256_set1_pd(-4.0 * d * l);
  const __m256d c0 = _mm256_set1_pd(-(k * k) * (d + l));
  const __m256d c1 = _mm256_set1_pd(2.0 * k * l);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vv = _mm256_loadu_pd(v + i);
    const __m256d b = _mm256_add_pd(b0, _mm256_mul_pd(b1, vv));
    const __m256d c = _mm256_add_pd(c0, _mm256_mul_pd(c1, vv));
    _mm256_storeu_pd(out + i, axis_ratio(a, b, c));
  }
  scalar::inscribed_ratio(l, k, d, v + i, out + i, n - i);
}

void circumscribed_ratio(double k, double d, const double* u, double* out, std::size_t n) {
  const __m256d kk = _mm256_set1_pd(k);
  const __m256d neg_d = _mm256_set1_pd(-d);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d uu = _mm256_loadu_pd(u + i);
    _mm256_storeu_pd(out + i, axis_ratio(_mm256_mul_pd(kk, uu), kk, _mm256_mul_pd(neg_d, uu)));
  }
  scalar::circumscribed_ratio(k, d, u + i, out + i, n - i);
}

void conic_evaluate(const double* c, const double* x, const double* y, double* out, std::size_t n) {
  const __m256d ca = _mm256_set1_pd(c[0]);
  const __m256d cb = _mm256_set1_pd(c[1]);
  const __m256d c2 = _mm256_set1_pd(2.0 * c[2]);
  const __m256d cd = _mm256_set1_pd(c[3]);
  const __m256d ce = _mm256_set1_pd(c[4]);
  const __m256d cf = _mm256_set1_pd(c[5]);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xi = _mm256_loadu_pd(x + i);
    const __m256d yi = _mm256_loadu_pd(y + i);
    __m256d acc = _mm256_mul_pd(_mm256_mul_pd(ca, xi), xi);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_mul_pd(cb, yi), yi));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_mul_pd(c2, xi), yi));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(cd, xi));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(ce, yi));
    _mm256_storeu_pd(out + i, _mm256_add_pd(acc, cf));
  }
  scalar::conic_evaluate(c, x + i, y + i, out + i, n - i);
}

}  // namespace inell::kernels::avx2
