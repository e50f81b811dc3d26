#include "inell/verify.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <sstream>

#include "inell/circumscribed.hpp"
#include "inell/conic.hpp"
#include "inell/inscribed.hpp"
#include "inell/oracles.hpp"
#include "inell/rectangle.hpp"
#include "inell/sampling.hpp"

namespace inell {

namespace {

constexpr std::size_t kMaxFailuresShown = 5;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::string describe(const FrameSample& f) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "l=%.17g k=%.17g d=%.17g", f.l, f.k, f.d);
  return buf;
}

class Recorder {
 public:
  Recorder(std::string name, double threshold) {
    out_.name = std::move(name);
    out_.threshold = threshold;
  }

  /// Records metric <= threshold as a pass.
  void check(double metric, const std::string& context) {
    ++out_.total;
    if (std::isnan(metric)) metric = kInf;
    out_.worst = std::max(out_.worst, metric);
    if (metric <= out_.threshold) {
      ++out_.passed;
    } else if (out_.failures.size() < kMaxFailuresShown) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "metric=%.3e ", metric);
      out_.failures.push_back(buf + context);
    }
  }

  /// Runs body; an exception counts as a failed trial.
  template <class Body>
  void trial(const std::string& context, Body body) {
    try {
      check(body(), context);
    } catch (const std::exception& e) {
      ++out_.total;
      out_.worst = kInf;
      if (out_.failures.size() < kMaxFailuresShown)
        out_.failures.push_back(std::string("exception: ") + e.what() + " " + context);
    }
  }

  PropertyOutcome take() { return std::move(out_); }

 private:
  PropertyOutcome out_;
};

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

double geometry_gap(const EllipseGeometry& got, const EllipseGeometry& want) {
  const double scale = want.a;
  double gap = std::max({norm(got.center - want.center) / scale, rel(got.a, want.a),
                         rel(got.b, want.b)});
  if ((want.a - want.b) > 1e-6 * want.a) {
    double dphi = std::fmod(std::abs(got.phi - want.phi), M_PI);
    gap = std::max(gap, std::min(dphi, M_PI - dphi));
  }
  return gap;
}

FrameKind kind_for(int trial) {
  static constexpr FrameKind cycle[] = {FrameKind::general, FrameKind::acute_diagonal,
                                        FrameKind::rhombus, FrameKind::obtuse_diagonal,
                                        FrameKind::rectangle};
  return cycle[trial % 5];
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyOutcome& p) { return p.ok(); });
}

VerifyReport run_verification(const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto v_opt = options.v_epsilon_override
                         ? options.v_epsilon_override
                         : std::function<double(const Parallelogram&)>(
                               [](const Parallelogram& p) { return v_epsilon(p); });

  Recorder roundtrip("conic.roundtrip", 1e-10);
  Recorder scale_inv("conic.scale_invariance", 1e-10);
  Recorder gh("parallelogram.gh_identity", 1e-9);
  Recorder diag_sum("parallelogram.diagonal_sum", 1e-9);
  Recorder psi_iso("parallelogram.psi_isometry", 1e-9);
  Recorder canon("parallelogram.canonical_placement", 1e-9);
  Recorder family("inscribed.tangency", 1e-8);
  Recorder two_path("inscribed.two_path", 1e-9);
  Recorder v_oracle("inscribed.oracle_v_epsilon", 1e-8);
  Recorder stationary("inscribed.stationarity", 1e-5);
  Recorder angles("inscribed.conjugate_diagonal_angle", 1e-9);
  Recorder equivariance("inscribed.isometry_equivariance", 1e-9);
  Recorder incidence("circumscribed.vertex_incidence", 1e-9);
  Recorder u_oracle("circumscribed.oracle_u_star", 1e-8);
  Recorder closed_form("circumscribed.minimal_e2", 1e-9);
  Recorder bielliptic("bielliptic.equivalence", 0.0);
  Recorder sum_sq("rectangle.sum_sq", 1e-10);
  Recorder extremizers("rectangle.extremizers", 1e-8);

  for (int t = 0; t < options.trials; ++t) {
    // Conic extraction.
    const EllipseGeometry g = random_ellipse(rng);
    const std::string gctx = "ellipse center=(" + std::to_string(g.center.x) + "," +
                             std::to_string(g.center.y) + ") a=" + std::to_string(g.a) +
                             " b=" + std::to_string(g.b) + " phi=" + std::to_string(g.phi);
    roundtrip.trial(gctx, [&] { return geometry_gap(geometry(from_geometry(g)), g); });
    const double s = std::exp(unit(rng) * 20 - 10);
    scale_inv.trial(gctx, [&] {
      const Conic c = from_geometry(g);
      return geometry_gap(geometry(c.scaled(s)), geometry(c));
    });

    // Parallelogram normalization.
    const FrameSample f = random_frame(rng, kind_for(t));
    const Affine2 iso = random_isometry(rng);
    const auto pts = place(f, iso, rng);
    const std::string ctx = describe(f);
    Parallelogram p;
    bool placed = false;
    canon.trial(ctx, [&] {
      p = canonicalize(pts);
      placed = true;
      const auto want = p.canonical_vertices();
      double worst = 0;
      for (int i = 0; i < 4; ++i)
        worst = std::max(worst, norm(p.iso.apply(p.vertices[i]) - want[i]) / (p.l + p.k + p.d));
      // The recovered frame is the same shape up to labeling: compare invariants.
      const auto a = diagonal_invariants(p);
      const auto b = diagonal_invariants(Parallelogram::from_frame(f.l, f.k, f.d));
      worst = std::max(worst, rel(a.G + a.H, b.G + b.H));
      worst = std::max(worst, rel(a.G * a.H, b.G * b.H));
      return worst;
    });
    if (!placed) continue;
    const DiagonalInvariants inv = diagonal_invariants(p);
    gh.trial(ctx, [&] {
      return std::abs(inv.G * inv.H - inv.I * inv.I - 4 * p.k * p.k * p.l * p.l) / (inv.G * inv.H);
    });
    diag_sum.trial(ctx, [&] {
      const auto& v = p.vertices;  // original frame
      const double diagonals = norm_sq(v[3] - v[0]) + norm_sq(v[2] - v[1]);
      const double sides = 2 * (norm_sq(v[1] - v[0]) + norm_sq(v[2] - v[0]));
      return std::abs(diagonals - sides) / sides;
    });
    psi_iso.trial(ctx, [&] {
      const auto& v = p.vertices;
      return std::abs(line_angle(v[3] - v[0], v[2] - v[1]) - inv.psi);
    });

    // Inscribed family.
    const double v = p.k * (0.001 + 0.998 * unit(rng));
    family.trial(ctx + " v=" + std::to_string(v), [&] {
      const InscribedEllipse ell = inscribed_conic(p, v);
      const TangencyDiagnostics td = diagnose_tangency(ell, p);
      if (!(td.min_interior_margin > 0)) return kInf;
      return std::max({td.max_double_root_residual, td.max_on_curve_residual, td.max_foot_offset});
    });
    two_path.trial(ctx + " v=" + std::to_string(v), [&] {
      const EllipseGeometry eg = inscribed_conic(p, v).geometry;
      return rel(family_ratio(p, v).h_v, (eg.b / eg.a) * (eg.b / eg.a));
    });
    v_oracle.trial(ctx, [&] { return std::abs(oracle_v_epsilon(p).x_min - v_epsilon(p)); });
    stationary.trial(ctx, [&] { return stationarity_residual(p) / stationarity_scale(p); });
    angles.trial(ctx, [&] {
      const InscribedEllipse ell = inscribed_conic(p, v_opt(p));
      return std::abs(conjugate_diameter_angle(ell) - inv.psi);
    });
    equivariance.trial(ctx, [&] {
      const Parallelogram base = Parallelogram::from_frame(f.l, f.k, f.d);
      const EllipseGeometry want =
          transported(minimal_eccentricity_ellipse(base), iso).geometry;
      const EllipseGeometry got =
          transported(minimal_eccentricity_ellipse(p), p.to_original()).geometry;
      return geometry_gap(got, want);
    });

    // Circumscribed family.
    const double upper = p.d == 0 ? 10.0 : circumscribed_upper_bound(p);
    const double u = upper * (0.001 + 0.998 * unit(rng));
    incidence.trial(ctx + " u=" + std::to_string(u),
                    [&] { return vertex_incidence_residual(circumscribed_conic(p, u), p); });
    u_oracle.trial(ctx, [&] { return std::abs(oracle_u_star(p).x_min - u_star(p)); });
    closed_form.trial(ctx, [&] {
      return std::abs(minimal_eccentricity_circumellipse(p).geometry.e2 - minimal_circumscribed_e2(p));
    });

    // Bielliptic: one constructed satisfying instance, one perturbed violating instance.
    const FrameSample fb = random_bielliptic_frame(rng);
    bielliptic.trial(describe(fb), [&] {
      const Parallelogram q = canonicalize(place(fb, random_isometry(rng), rng));
      return bielliptic_verdict(q).is_bielliptic ? 0.0 : 1.0;
    });
    FrameSample fv = fb;
    fv.k *= 1 + (0.01 + 0.2 * unit(rng)) * (unit(rng) < 0.5 ? -1 : 1);
    bielliptic.trial(describe(fv), [&] {
      const Parallelogram q = canonicalize(place(fv, random_isometry(rng), rng));
      return bielliptic_verdict(q).is_bielliptic ? 1.0 : 0.0;
    });

    // Rectangles.
    const FrameSample fr = random_frame(rng, FrameKind::rectangle);
    sum_sq.trial(describe(fr), [&] {
      double worst = 0;
      for (int i = 1; i <= 100; ++i) {
        const auto ax = rectangle_semi_axes_sq(fr.l, fr.k, fr.k * i / 101.0);
        worst = std::max(worst, std::abs(ax.a2 + ax.b2 - (fr.k * fr.k + fr.l * fr.l) / 4) /
                                    (fr.k * fr.k + fr.l * fr.l));
      }
      return worst;
    });
    extremizers.trial(describe(fr), [&] {
      return rectangle_extremizers(fr.l, fr.k, 1001).max_deviation() / fr.k;
    });
  }

  VerifyReport report;
  for (Recorder* r : {&roundtrip, &scale_inv, &gh, &diag_sum, &psi_iso, &canon, &family, &two_path,
                      &v_oracle, &stationary, &angles, &equivariance, &incidence, &u_oracle,
                      &closed_form, &bielliptic, &sum_sq, &extremizers})
    report.properties.push_back(r->take());
  return report;
}

void print_report(std::ostream& out, const VerifyReport& report) {
  char line[256];
  for (const PropertyOutcome& p : report.properties) {
    std::snprintf(line, sizeof line, "%-4s %-40s %5d/%-5d worst=%.3e threshold=%.1e\n",
                  p.ok() ? "PASS" : "FAIL", p.name.c_str(), p.passed, p.total, p.worst,
                  p.threshold);
    out << line;
    for (const std::string& f : p.failures) out << "       " << f << "\n";
  }
  out << (report.all_passed() ? "all properties passed\n" : "property failures detected\n");
}

}  // namespace inell
