#pragma once

// Batched evaluation kernels for the ellipse families.
//
// Every kernel has a scalar reference implementation and, where the target
// supports it, an AVX2 (x86-64) or NEON (AArch64) variant. The variant is
// picked once at runtime from CPU support; INELL_SIMD=scalar|avx2|neon in the
// environment overrides the choice. All variants perform the same IEEE
// operations in the same order (no FMA contraction), so results agree with
// the scalar reference to the last bit on conforming hardware.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "inell/conic.hpp"
#include "inell/parallelogram.hpp"

namespace inell::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view name(Isa isa);

struct KernelTable {
  /// b^2/a^2 of the inscribed family member at each v, from the conic's
  /// quadratic part rather than the closed form in v.
  void (*inscribed_ratio)(double l, double k, double d, const double* v, double* out,
                          std::size_t n);
  /// b^2/a^2 of the circumscribed family member at each u.
  void (*circumscribed_ratio)(double k, double d, const double* u, double* out, std::size_t n);
  /// Conic value at each (x[i], y[i]).
  void (*conic_evaluate)(const double* coeffs, const double* x, const double* y, double* out,
                         std::size_t n);
};

/// Compiled in and supported by this CPU.
bool supported(Isa isa);
std::vector<Isa> supported_isas();

/// Throws InvalidInput when the variant is not supported here.
const KernelTable& table(Isa isa);

/// Variant used by the span wrappers below.
Isa active_isa();

void inscribed_ratio(const Parallelogram& p, std::span<const double> v, std::span<double> out);
void circumscribed_ratio(const Parallelogram& p, std::span<const double> u, std::span<double> out);
void conic_evaluate(const Conic& c, std::span<const double> x, std::span<const double> y,
                    std::span<double> out);

}  // namespace inell::kernels
