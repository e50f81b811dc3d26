// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.
#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>

#include "inell/circumscribed.hpp"
#include "inell/conic.hpp"
#include "inell/inscribed.hpp"
#include "inell/numerics.hpp"
#include "inell/oracles.hpp"
#include "inell/rectangle.hpp"
#include "inell/sampling.hpp"

using namespace inell;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const char* fmt, double value) {
    if (cond) return;
    ok = false;
    if (detail.size() < 400) {
      char buf[160];
      std::snprintf(buf, sizeof buf, fmt, value);
      detail += buf;
      detail += "; ";
    }
  }
};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

Parallelogram from_points(std::array<Vec2, 4> pts) { return canonicalize(pts); }

/// Max per-coefficient deviation after scaling both conics to unit norm.
double coefficient_gap(const Conic& got, const Conic& want) {
  const auto g = normalized(got).coefficients();
  const auto w = normalized(want).coefficients();
  double worst = 0;
  for (int i = 0; i < 6; ++i) {
    const double denom = std::abs(w[i]) > 1e-12 ? std::abs(w[i]) : 1.0;
    worst = std::max(worst, std::abs(g[i] - w[i]) / denom);
  }
  return worst;
}

Outcome criterion1() {
  Outcome o;
  const Parallelogram p = from_points({{{0, 0}, {2, 4}, {7, 4}, {5, 0}}});
  const double r65 = std::sqrt(65.0);
  const double want_ratio = (65 - r65) / (65 + r65);
  const InscribedEllipse ell = minimal_eccentricity_ellipse(p);
  const double ratio = ell.geometry.b * ell.geometry.b / (ell.geometry.a * ell.geometry.a);
  o.require(rel(ratio, want_ratio) < 1e-9, "b2/a2 rel err %.3e", rel(ratio, want_ratio));
  o.require(rel(minimal_inscribed_ratio(p), want_ratio) < 1e-9, "closed-form ratio rel err %.3e",
            rel(minimal_inscribed_ratio(p), want_ratio));
  o.require(std::abs(v_epsilon(p) - 26.0 / 9) < 1e-12, "v_eps err %.3e",
            std::abs(v_epsilon(p) - 26.0 / 9));
  const double oracle = oracle_v_epsilon(p).x_min;
  o.require(std::abs(oracle - 26.0 / 9) < 1e-8, "oracle v err %.3e", std::abs(oracle - 26.0 / 9));
  const AngleCheck a = check_conjugate_diagonal_angles(p);
  o.require(std::abs(a.two_theta - std::atan(8.0)) < 1e-9, "2theta err %.3e",
            std::abs(a.two_theta - std::atan(8.0)));
  o.require(std::abs(a.psi - std::atan(8.0)) < 1e-9, "psi err %.3e", std::abs(a.psi - std::atan(8.0)));
  char buf[160];
  std::snprintf(buf, sizeof buf, "b2/a2=%.13g v_eps=%.13g oracle=%.13g 2theta=%.13g psi=%.13g", ratio,
                v_epsilon(p), oracle, a.two_theta, a.psi);
  if (o.ok) o.detail = buf;
  return o;
}

Outcome criterion2() {
  Outcome o;
  const double s2 = std::sqrt(2.0);
  const double k = 2 * s2;
  const Parallelogram p = from_points({{{0, 0}, {6, 0}, {2, k}, {8, k}}});
  const BiellipticVerdict v = bielliptic_verdict(p);
  const double want = std::sqrt(3.0) - 1;
  o.require(v.is_bielliptic, "verdict false%.0f", 0);
  o.require(std::abs(v.e2_inscribed - want) < 1e-9, "e2_I err %.3e", std::abs(v.e2_inscribed - want));
  o.require(std::abs(v.e2_circumscribed - want) < 1e-9, "e2_O err %.3e",
            std::abs(v.e2_circumscribed - want));
  const Conic ei{4 * s2, 14 * s2, 2, -36 * s2, -72, 81 * s2};
  const Conic eo{s2, 2 * s2, -1, -6 * s2, 0, 0};
  const double gi = coefficient_gap(minimal_eccentricity_ellipse(p).conic, ei);
  const double go = coefficient_gap(minimal_eccentricity_circumellipse(p).conic, eo);
  o.require(gi < 1e-9, "E_I coefficient gap %.3e", gi);
  o.require(go < 1e-9, "E_O coefficient gap %.3e", go);
  o.require(v.diagonal_side_witness.has_value(), "no witness%.0f", 0);
  if (v.diagonal_side_witness) {
    o.require(std::abs(v.diagonal_side_witness->diagonal_sq - 72) < 1e-9, "witness diagonal^2 %.12g",
              v.diagonal_side_witness->diagonal_sq);
    o.require(std::abs(v.diagonal_side_witness->side_sq - 36) < 1e-9, "witness side^2 %.12g",
              v.diagonal_side_witness->side_sq);
  }
  if (o.ok) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "e2_I=%.13g e2_O=%.13g gaps %.1e/%.1e witness %s^2=72=2*%s^2",
                  v.e2_inscribed, v.e2_circumscribed, gi, go,
                  v.diagonal_side_witness->diagonal.c_str(), v.diagonal_side_witness->side.c_str());
    o.detail = buf;
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::mt19937_64 rng(20260301);
  int positive = 0, zero = 0, negative = 0;
  double worst = 0;
  static constexpr FrameKind kinds[] = {FrameKind::acute_diagonal, FrameKind::rhombus,
                                        FrameKind::obtuse_diagonal, FrameKind::general};
  for (int t = 0; t < 500; ++t) {
    const FrameSample f = random_frame(rng, kinds[t % 4]);
    const Parallelogram p = canonicalize(place(f, random_isometry(rng), rng));
    const DiagonalInvariants inv = diagonal_invariants(p);
    const double tol = 1e-9 * inv.J;
    (inv.I > tol ? positive : inv.I < -tol ? negative : zero)++;
    const double delta = check_conjugate_diagonal_angles(p).delta;
    worst = std::max(worst, delta);
    o.require(delta < 1e-9, "|2theta-psi| = %.3e", delta);
  }
  o.require(positive > 0 && zero > 0 && negative > 0, "missing an I-sign class (%g)", 0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "500 trials (I>0: %d, I=0: %d, I<0: %d) worst %.3e", positive, zero,
                negative, worst);
  if (o.ok) o.detail = buf;
  return o;
}

/// Ellipse perimeter from the Gauss-Kummer series in h = ((a-b)/(a+b))^2.
double gauss_kummer_perimeter(double a, double b) {
  const double h = (a - b) * (a - b) / ((a + b) * (a + b));
  double term = 1, sum = 1;
  for (int n = 1; n < 200; ++n) {
    const double c = (2.0 * n - 3) / (2.0 * n);  // binomial(1/2, n) ratio
    term *= c * c * h;
    sum += term;
    if (std::abs(term) < 1e-18) break;
  }
  return M_PI * (a + b) * sum;
}

Outcome criterion4() {
  Outcome o;
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> side(1.0, 3.0);
  double worst_ext = 0, worst_sum = 0;
  for (int t = 0; t < 20; ++t) {
    const double l = side(rng), k = side(rng);
    const double dev = rectangle_extremizers(l, k, 1001).max_deviation() / k;
    worst_ext = std::max(worst_ext, dev);
    o.require(dev < 1e-8, "extremizer deviation %.3e k", dev);
    const double want = (k * k + l * l) / 4;
    for (int i = 0; i < 1000; ++i) {
      const double v = k * (i + 0.5) / 1000;
      const SemiAxesSq ax = rectangle_semi_axes_sq(l, k, v);
      const double err = rel(ax.a2 + ax.b2, want);
      worst_sum = std::max(worst_sum, err);
    }
  }
  o.require(worst_sum < 1e-10, "a2+b2 rel err %.3e", worst_sum);
  const double perim = ellipse_perimeter(4, 1);
  const double halved = ellipse_perimeter(4, 1, 0.5e-10, 0.5e-12);
  const double series = gauss_kummer_perimeter(2, 1);
  o.require(std::abs(perim - halved) < 1e-9, "tolerance-halved gap %.3e", std::abs(perim - halved));
  o.require(std::abs(perim - series) < 1e-9, "series gap %.3e", std::abs(perim - series));
  o.require(std::abs(perim - 9.6884482205) < 1e-9, "perimeter %.12g", perim);
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "20 rectangles worst extremizer offset %.2e k, a2+b2 rel err %.2e, perimeter(2,1)=%.12g",
                worst_ext, worst_sum, perim);
  if (o.ok) o.detail = buf;
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::mt19937_64 rng(555);
  std::uniform_real_distribution<double> unit(0, 1);
  double worst_t = 0, worst_i = 0;
  for (int t = 0; t < 200; ++t) {
    const Parallelogram p =
        canonicalize(place(random_frame(rng, FrameKind(t % 5)), random_isometry(rng), rng));
    const double v = p.k * (0.001 + 0.998 * unit(rng));
    const TangencyDiagnostics td = diagnose_tangency(inscribed_conic(p, v), p);
    const double r =
        std::max({td.max_double_root_residual, td.max_on_curve_residual, td.max_foot_offset});
    worst_t = std::max(worst_t, r);
    o.require(r < 1e-8, "tangency residual %.3e", r);
    o.require(td.min_interior_margin > 0, "tangency point not interior (margin %.3e)",
              td.min_interior_margin);
  }
  for (int t = 0; t < 200; ++t) {
    const Parallelogram p =
        canonicalize(place(random_frame(rng, FrameKind(t % 5)), random_isometry(rng), rng));
    const double upper = p.d == 0 ? 10.0 : circumscribed_upper_bound(p);
    const double u = upper * (0.001 + 0.998 * unit(rng));
    const double r = vertex_incidence_residual(circumscribed_conic(p, u), p);
    worst_i = std::max(worst_i, r);
    o.require(r < 1e-9, "incidence residual %.3e", r);
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "tangency worst %.2e, incidence worst %.2e", worst_t, worst_i);
  if (o.ok) o.detail = buf;
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::mt19937_64 rng(66);
  double worst_v = 0, worst_u = 0;
  for (int t = 0; t < 100; ++t) {
    const Parallelogram p =
        canonicalize(place(random_frame(rng, FrameKind(t % 5)), random_isometry(rng), rng));
    const double ev = std::abs(oracle_v_epsilon(p).x_min - v_epsilon(p));
    const double eu = std::abs(oracle_u_star(p).x_min - u_star(p));
    worst_v = std::max(worst_v, ev);
    worst_u = std::max(worst_u, eu);
    o.require(ev < 1e-8, "v oracle gap %.3e", ev);
    o.require(eu < 1e-8, "u oracle gap %.3e", eu);
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "100 parallelograms, worst |v gap| %.2e, |u gap| %.2e", worst_v,
                worst_u);
  if (o.ok) o.detail = buf;
  return o;
}

/// Looks for |diagonal|^2 = 2 |side|^2 among the input vertices directly.
bool has_length_witness(const std::array<Vec2, 4>& pts) {
  // Pair the vertices into diagonals by midpoint coincidence.
  static constexpr int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  int best = 0;
  double best_gap = INFINITY;
  for (int i = 0; i < 3; ++i) {
    const auto* q = pairings[i];
    const double gap = norm((pts[q[0]] + pts[q[1]]) - (pts[q[2]] + pts[q[3]]));
    if (gap < best_gap) best_gap = gap, best = i;
  }
  const auto* q = pairings[best];
  const double diag[2] = {norm_sq(pts[q[1]] - pts[q[0]]), norm_sq(pts[q[3]] - pts[q[2]])};
  const double sides[2] = {norm_sq(pts[q[2]] - pts[q[0]]), norm_sq(pts[q[3]] - pts[q[0]])};
  const double scale = diag[0] + diag[1];
  for (double dsq : diag)
    for (double ssq : sides)
      if (std::abs(dsq - 2 * ssq) < 1e-9 * scale) return true;
  return false;
}

Outcome criterion7() {
  Outcome o;
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> unit(0, 1);
  int agree = 0;
  for (int t = 0; t < 100; ++t) {
    FrameSample f = random_bielliptic_frame(rng);
    const bool satisfying = t < 50;
    if (!satisfying) f.k *= 1 + (0.01 + 0.2 * unit(rng)) * (unit(rng) < 0.5 ? -1 : 1);
    const auto pts = place(f, random_isometry(rng), rng);
    const Parallelogram p = canonicalize(pts);
    const BiellipticVerdict v = bielliptic_verdict(p);
    const BiellipticConditionValues c = bielliptic_condition_values(p);
    const double tol = 1e-9 * diagonal_invariants(p).J;
    const bool algebraic =
        std::abs(c.diagonal_or_side_oq) < tol || std::abs(c.diagonal_or_side_op) < tol;
    const bool witness = has_length_witness(pts);
    const bool ok = v.is_bielliptic == satisfying && algebraic == satisfying && witness == satisfying;
    agree += ok;
    o.require(ok, "disagreement at trial %.0f", t);
  }
  char buf[120];
  std::snprintf(buf, sizeof buf, "verdict, algebraic condition and length witness agree in %d/100",
                agree);
  if (o.ok) o.detail = buf;
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937_64 rng(8888);
  double worst = 0;
  int circles = 0;
  for (int t = 0; t < 1000; ++t) {
    const EllipseGeometry g = random_ellipse(rng);
    const EllipseGeometry r = geometry(from_geometry(g));
    double err = std::max({norm(r.center - g.center) / g.a, rel(r.a, g.a), rel(r.b, g.b)});
    if (g.a - g.b > 1e-6 * g.a) {
      double dphi = std::fmod(std::abs(r.phi - g.phi), M_PI);
      err = std::max(err, std::min(dphi, M_PI - dphi));
    } else {
      ++circles;
    }
    worst = std::max(worst, err);
    o.require(err < 1e-10, "roundtrip error %.3e", err);
  }
  char buf[120];
  std::snprintf(buf, sizeof buf, "1000 ellipses worst relative error %.2e (%d circles)", worst,
                circles);
  if (o.ok) o.detail = buf;
  return o;
}

Outcome criterion9() {
  Outcome o;
  const Parallelogram p = from_points({{{0, 0}, {2, 4}, {7, 4}, {5, 0}}});
  const ScalarObjective neg_arc = [&](double v) -> long double {
    const EllipseGeometry g = inscribed_conic(p, v).geometry;
    return -ellipse_perimeter_ext(static_cast<long double>(g.a) * g.a,
                                  static_cast<long double>(g.b) * g.b);
  };
  const MinimizeResult best = minimize_scalar(neg_arc, 1e-9 * p.k, (1 - 1e-9) * p.k, 1e-10 * p.k);
  const double gap = std::abs(best.x_min - v_epsilon(p));
  o.require(gap > 1e-3 * p.k, "arc-length argmax within %.3e of v_eps", gap);
  char buf[160];
  std::snprintf(buf, sizeof buf, "argmax arc length v=%.6g (L=%.8g) vs v_eps=%.6g, gap %.4g k",
                best.x_min, -best.f_min, v_epsilon(p), gap / p.k);
  if (o.ok) o.detail = buf;
  return o;
}

}  // namespace

int main() {
  Outcome (*criteria[])() = {criterion1, criterion2, criterion3, criterion4, criterion5,
                             criterion6, criterion7, criterion8, criterion9};
  bool all = true;
  for (int i = 0; i < 9; ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    all &= o.ok;
    std::printf("%s criterion %d: %s\n", o.ok ? "PASS" : "FAIL", i + 1, o.detail.c_str());
  }
  return all ? 0 : 1;
}
