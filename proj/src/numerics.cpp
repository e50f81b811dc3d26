#include "inell/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "inell/errors.hpp"

namespace inell {

namespace {

long double checked(long double v, double x) {
  if (!std::isfinite(v))
    throw NumericalError("objective is not finite at x = " + std::to_string(x));
  return v;
}

void check_interval(double lo, double hi, double tol) {
  if (!(lo < hi)) throw InvalidInput("minimize_scalar requires lo < hi");
  if (!(tol > 0)) throw InvalidInput("minimize_scalar requires tol > 0");
}

MinimizeResult refine_cell(const ScalarObjective& f, std::span<const double> values, double lo,
                           double hi, double tol, const MinimizeOptions& options) {
  const auto n = static_cast<int>(values.size());
  int best = 0;
  for (int i = 1; i < n; ++i)
    if (values[i] < values[best]) best = i;
  const double step = (hi - lo) / n;
  const double a = best == 0 ? lo : lo + step * (best - 0.5);
  const double b = best == n - 1 ? hi : lo + step * (best + 1.5);
  return golden_section(f, a, b, tol, options.max_iterations);
}

std::vector<double> scan_points(double lo, double hi, int n) {
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = lo + (hi - lo) * (i + 0.5) / n;
  return xs;
}

}  // namespace

MinimizeResult golden_section(const ScalarObjective& f, double lo, double hi, double tol,
                              int max_iterations) {
  check_interval(lo, hi, tol);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  long double fc = checked(f(c), c);
  long double fd = checked(f(d), d);
  int it = 0;
  while (b - a >= tol) {
    if (it == max_iterations)
      throw NumericalError("golden-section search hit the iteration cap (" +
                           std::to_string(max_iterations) + ") with bracket width " +
                           std::to_string(b - a));
    ++it;
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = checked(f(c), c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = checked(f(d), d);
    }
  }
  MinimizeResult r;
  r.x_min = 0.5 * (a + b);
  r.f_min = static_cast<double>(checked(f(r.x_min), r.x_min));
  r.iterations = it;
  r.converged = true;
  return r;
}

MinimizeResult minimize_scalar(const ScalarObjective& f, double lo, double hi, double tol,
                               const MinimizeOptions& options) {
  check_interval(lo, hi, tol);
  const auto xs = scan_points(lo, hi, options.grid_points);
  std::vector<double> values(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    values[i] = static_cast<double>(checked(f(xs[i]), xs[i]));
  return refine_cell(f, values, lo, hi, tol, options);
}

MinimizeResult minimize_scalar(const ScalarObjective& f, const BatchObjective& scan, double lo,
                               double hi, double tol, const MinimizeOptions& options) {
  check_interval(lo, hi, tol);
  const auto xs = scan_points(lo, hi, options.grid_points);
  std::vector<double> values(xs.size());
  scan(xs, values);
  for (std::size_t i = 0; i < xs.size(); ++i) checked(values[i], xs[i]);
  return refine_cell(f, values, lo, hi, tol, options);
}

namespace {

// 15-point Kronrod abscissae on [-1, 1] (nonnegative half) and weights; the
// odd-indexed abscissae are the 7-point Gauss nodes.
constexpr long double kXgk[8] = {
    0.991455371120812639206854697526329L, 0.949107912342758524526189684047851L,
    0.864864423359769072789712788640926L, 0.741531185599394439863864773280788L,
    0.586087235467691130294144845693013L, 0.405845151377397166906606412076961L,
    0.207784955007898467600689403773245L, 0.000000000000000000000000000000000L};
constexpr long double kWgk[8] = {
    0.022935322010529224963732008058970L, 0.063092092629978553290700663189204L,
    0.104790010322250183839876322541518L, 0.140653259715525918745189590510238L,
    0.169004726639267902826583426598550L, 0.190350578064785409913256402421014L,
    0.204432940075298892414161999234649L, 0.209482141084727828012999174891714L};
constexpr long double kWg[4] = {
    0.129484966168869693270611432679082L, 0.279705391489276667901467771423780L,
    0.381830050505118944950369775488975L, 0.417959183673469387755102040816327L};

template <class T>
struct Panel {
  T lo, hi, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class T>
Panel<T> gauss_kronrod(const std::function<T(T)>& f, T lo, T hi) {
  const T center = (lo + hi) / 2;
  const T half = (hi - lo) / 2;
  auto eval = [&](T x) {
    const T v = f(x);
    if (!std::isfinite(v))
      throw NumericalError("integrand is not finite at t = " +
                           std::to_string(static_cast<double>(x)));
    return v;
  };
  const T fc = eval(center);
  T kronrod = fc * static_cast<T>(kWgk[7]);
  T gauss = fc * static_cast<T>(kWg[3]);
  for (int j = 0; j < 7; ++j) {
    const T dx = half * static_cast<T>(kXgk[j]);
    const T pair = eval(center - dx) + eval(center + dx);
    kronrod += static_cast<T>(kWgk[j]) * pair;
    if (j % 2 == 1) gauss += static_cast<T>(kWg[j / 2]) * pair;
  }
  return {lo, hi, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

template <class T>
BasicQuadratureResult<T> integrate_t(const std::function<T(T)>& f, T lo, T hi, T abs_tol,
                                     T rel_tol, std::size_t max_evaluations) {
  std::priority_queue<Panel<T>> panels;
  panels.push(gauss_kronrod(f, lo, hi));
  std::size_t evaluations = 15;
  T value = panels.top().value;
  T error = panels.top().error;
  while (error > std::max(abs_tol, rel_tol * std::abs(value))) {
    if (evaluations + 30 > max_evaluations)
      throw NumericalError("quadrature did not converge within " +
                           std::to_string(max_evaluations) + " evaluations (error estimate " +
                           std::to_string(static_cast<double>(error)) + ")");
    const Panel<T> worst = panels.top();
    panels.pop();
    const T mid = (worst.lo + worst.hi) / 2;
    if (!(worst.lo < mid && mid < worst.hi))
      throw NumericalError("quadrature panel width underflow");
    const Panel<T> left = gauss_kronrod(f, worst.lo, mid);
    const Panel<T> right = gauss_kronrod(f, mid, worst.hi);
    evaluations += 30;
    panels.push(left);
    panels.push(right);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
  }
  // Re-sum to shed the drift of the incremental updates.
  BasicQuadratureResult<T> r;
  r.evaluations = evaluations;
  std::vector<Panel<T>> all;
  while (!panels.empty()) {
    all.push_back(panels.top());
    panels.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel<T>& a, const Panel<T>& b) { return a.lo < b.lo; });
  for (const auto& p : all) {
    r.value += p.value;
    r.error_estimate += p.error;
  }
  return r;
}

template BasicQuadratureResult<double> integrate_t(const std::function<double(double)>&, double,
                                                   double, double, double, std::size_t);
template BasicQuadratureResult<long double> integrate_t(const std::function<long double(long double)>&,
                                                        long double, long double, long double,
                                                        long double, std::size_t);

QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           double abs_tol, double rel_tol) {
  const auto r = integrate_t<double>(f, lo, hi, abs_tol, rel_tol);
  return {r.value, r.error_estimate, r.evaluations};
}

}  // namespace inell
