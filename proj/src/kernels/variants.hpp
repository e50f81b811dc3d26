#pragma once

// Per-ISA kernel entry points. Each variant lives in its own translation unit
// so that only that file is compiled with the matching instruction-set flags.

#include <cstddef>

namespace inell::kernels::scalar {
void inscribed_ratio(double l, double k, double d, const double* v, double* out, std::size_t n);
void circumscribed_ratio(double k, double d, const double* u, double* out, std::size_t n);
void conic_evaluate(const double* c, const double* x, const double* y, double* out, std::size_t n);
}  // namespace inell::kernels::scalar

#if defined(INELL_HAVE_AVX2)
namespace inell::kernels::avx2 {
void inscribed_ratio(double l, double k, double d, const double* v, double* out, std::size_t n);
void circumscribed_ratio(double k, double d, const double* u, double* out, std::size_t n);
void conic_evaluate(const double* c, const double* x, const double* y, double* out, std::size_t n);
}  // namespace inell::kernels::avx2
#endif

#if defined(INELL_HAVE_NEON)
namespace inell::kernels::neon {
void inscribed_ratio(double l, double k, double d, const double* v, double* out, std::size_t n);
void circumscribed_ratio(double k, double d, const double* u, double* out, std::size_t n);
void conic_evaluate(const double* c, const double* x, const double* y, double* out, std::size_t n);
}  // namespace inell::kernels::neon
#endif
