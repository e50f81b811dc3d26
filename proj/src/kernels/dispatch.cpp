#include <cstdlib>
#include <string>

#include "inell/errors.hpp"
#include "inell/kernels.hpp"
#include "variants.hpp"

namespace inell::kernels {

namespace {

constexpr KernelTable kScalar{&scalar::inscribed_ratio, &scalar::circumscribed_ratio,
                              &scalar::conic_evaluate};
#if defined(INELL_HAVE_AVX2)
constexpr KernelTable kAvx2{&avx2::inscribed_ratio, &avx2::circumscribed_ratio,
                            &avx2::conic_evaluate};
#endif
#if defined(INELL_HAVE_NEON)
constexpr KernelTable kNeon{&neon::inscribed_ratio, &neon::circumscribed_ratio,
                            &neon::conic_evaluate};
#endif

Isa select() {
  if (const char* env = std::getenv("INELL_SIMD")) {
    const std::string want(env);
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon})
      if (want == name(isa) && supported(isa)) return isa;
  }
  if (supported(Isa::avx2)) return Isa::avx2;
  if (supported(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

void require_sizes(std::size_t in, std::size_t out) {
  if (in != out) throw InvalidInput("kernel input and output spans differ in length");
}

}  // namespace

std::string_view name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "scalar";
}

bool supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(INELL_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(INELL_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

std::vector<Isa> supported_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon})
    if (supported(isa)) out.push_back(isa);
  return out;
}

const KernelTable& table(Isa isa) {
  if (!supported(isa))
    throw InvalidInput("kernel variant " + std::string(name(isa)) + " is not available");
  switch (isa) {
#if defined(INELL_HAVE_AVX2)
    case Isa::avx2:
      return kAvx2;
#endif
#if defined(INELL_HAVE_NEON)
    case Isa::neon:
      return kNeon;
#endif
    default:
      return kScalar;
  }
}

Isa active_isa() {
  static const Isa isa = select();
  return isa;
}

void inscribed_ratio(const Parallelogram& p, std::span<const double> v, std::span<double> out) {
  require_sizes(v.size(), out.size());
  table(active_isa()).inscribed_ratio(p.l, p.k, p.d, v.data(), out.data(), v.size());
}

void circumscribed_ratio(const Parallelogram& p, std::span<const double> u, std::span<double> out) {
  require_sizes(u.size(), out.size());
  table(active_isa()).circumscribed_ratio(p.k, p.d, u.data(), out.data(), u.size());
}

void conic_evaluate(const Conic& c, std::span<const double> x, std::span<const double> y,
                    std::span<double> out) {
  require_sizes(x.size(), out.size());
  require_sizes(y.size(), out.size());
  const auto coeffs = c.coefficients();
  table(active_isa()).conic_evaluate(coeffs.data(), x.data(), y.data(), out.data(), x.size());
}

}  // namespace inell::kernels
