#include "inell/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "inell/circumscribed.hpp"
#include "inell/conic.hpp"
#include "inell/inscribed.hpp"
#include "inell/kernels.hpp"

namespace inell {

namespace {

constexpr double kEdge = 1e-9;
// The u family stays elliptic on (0, k^2/d^2); beyond u = 16 it is far past any optimum.
constexpr double kSearchCap = 16.0;

template <class Scan>
BatchObjective negated(Scan scan) {
  return [scan](std::span<const double> xs, std::span<double> out) {
    scan(xs, out);
    for (double& v : out) v = -v;
  };
}

}  // namespace

MinimizeResult oracle_v_epsilon(const Parallelogram& p) {
  using ld = long double;
  const ld l = p.l, k = p.k, d = p.d;
  const ScalarObjective f = [=](double v) {
    const auto c = inscribed_coefficients<ld>(l, k, d, v);
    return -axis_ratio_sq<ld>(c[0], c[1], c[2]);
  };
  const auto scan = negated([&p](std::span<const double> xs, std::span<double> out) {
    kernels::inscribed_ratio(p, xs, out);
  });
  return minimize_scalar(f, scan, kEdge * p.k, (1 - kEdge) * p.k, 1e-12 * p.k);
}

MinimizeResult oracle_u_star(const Parallelogram& p) {
  using ld = long double;
  const ld l = p.l, k = p.k, d = p.d;
  const ScalarObjective f = [=](double u) {
    const auto c = circumscribed_coefficients<ld>(l, k, d, u);
    return -axis_ratio_sq<ld>(c[0], c[1], c[2]);
  };
  const auto scan = negated([&p](std::span<const double> xs, std::span<double> out) {
    kernels::circumscribed_ratio(p, xs, out);
  });
  const double upper = p.d == 0 ? kSearchCap : std::min(kSearchCap, circumscribed_upper_bound(p));
  return minimize_scalar(f, scan, kEdge * upper, (1 - kEdge) * upper, 1e-12 * upper);
}

}  // namespace inell
