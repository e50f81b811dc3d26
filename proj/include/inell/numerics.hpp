#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace inell {

struct MinimizeResult {
  double x_min = 0;
  double f_min = 0;
  int iterations = 0;
  bool converged = false;
};

struct QuadratureResult {
  double value = 0;
  double error_estimate = 0;
  std::size_t evaluations = 0;
};

/// Objective for minimize_scalar. Values are compared in long double so that
/// extended-precision objectives can resolve flat minima below sqrt(DBL_EPSILON).
using ScalarObjective = std::function<long double(double)>;

/// Fills out[i] with the objective at xs[i]; used for the coarse scan only.
using BatchObjective = std::function<void(std::span<const double> xs, std::span<double> out)>;

struct MinimizeOptions {
  int grid_points = 1000;
  int max_iterations = 200;
};

/// Bracketed minimization on (lo, hi): a uniform scan of grid_points midpoints
/// picks the best cell, then golden-section search shrinks the neighbouring
/// bracket until its width is below tol. Derivative-free.
///
/// Throws NumericalError on non-finite objective values or when the
/// iteration cap is reached first; InvalidInput when lo >= hi or tol <= 0.
MinimizeResult minimize_scalar(const ScalarObjective& f, double lo, double hi, double tol,
                               const MinimizeOptions& options = {});

/// Same, with the coarse scan delegated to a batched evaluator.
MinimizeResult minimize_scalar(const ScalarObjective& f, const BatchObjective& scan, double lo,
                               double hi, double tol, const MinimizeOptions& options = {});

/// Golden-section search on [lo, hi] alone (no scan); f assumed unimodal there.
MinimizeResult golden_section(const ScalarObjective& f, double lo, double hi, double tol,
                              int max_iterations = 200);

template <class T>
struct BasicQuadratureResult {
  T value = 0;
  T error_estimate = 0;
  std::size_t evaluations = 0;
};

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature. The panel with the
/// largest |K15 - G7| is bisected until the summed estimate drops below
/// max(abs_tol, rel_tol * |value|). Instantiated for double and long double.
///
/// Throws NumericalError on non-finite integrand values or after max_evaluations.
template <class T>
BasicQuadratureResult<T> integrate_t(const std::function<T(T)>& f, T lo, T hi, T abs_tol, T rel_tol,
                                     std::size_t max_evaluations = 1'000'000);

QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           double abs_tol, double rel_tol);

}  // namespace inell
