#include "inell/analysis.hpp"

#include <cmath>
#include <cstdio>

#include "inell/errors.hpp"
#include "inell/kernels.hpp"
#include "inell/rectangle.hpp"

namespace inell {

AnalysisReport analyze(std::span<const Vec2, 4> vertices) {
  AnalysisReport r;
  r.input = {vertices[0], vertices[1], vertices[2], vertices[3]};
  r.frame = canonicalize(vertices);
  const Affine2 back = r.frame.to_original();

  r.inscribed_canonical = minimal_eccentricity_ellipse(r.frame);
  r.inscribed_original = transported(r.inscribed_canonical, back);

  r.circumscribed_canonical = minimal_eccentricity_circumellipse(r.frame);
  r.circumscribed_conic_original = pull_back(r.circumscribed_canonical.conic, r.frame.iso);
  r.circumscribed_geometry_original = geometry(r.circumscribed_conic_original);

  r.angles = check_conjugate_diagonal_angles(r.frame);
  r.bielliptic = bielliptic_verdict(r.frame);

  r.diagnostics.tangency = diagnose_tangency(r.inscribed_canonical, r.frame);
  r.diagnostics.vertex_incidence_canonical =
      vertex_incidence_residual(r.circumscribed_canonical, r.frame);
  for (const Vec2& q : r.frame.vertices)
    r.diagnostics.vertex_incidence_original =
        std::max(r.diagnostics.vertex_incidence_original,
                 relative_residual(r.circumscribed_conic_original, q));
  r.diagnostics.stationarity = stationarity_residual(r.frame);
  r.diagnostics.stationarity_scale = stationarity_scale(r.frame);
  return r;
}

namespace {

json points_to_json(std::span<const Vec2> pts) {
  json out = json::array();
  for (const Vec2& p : pts) out.push_back(point_to_json(p));
  return out;
}

json witness_to_json(const std::optional<LengthWitness>& w) {
  if (!w) return nullptr;
  return json{{"diagonal", w->diagonal},
              {"side", w->side},
              {"diagonal_sq", w->diagonal_sq},
              {"side_sq", w->side_sq}};
}

}  // namespace

json report_to_json(const AnalysisReport& r) {
  const auto& ic = r.inscribed_canonical;
  const auto& cc = r.circumscribed_canonical;
  const auto& diag = r.diagnostics;
  return json{
      {"input", {{"vertices", points_to_json(r.input)}}},
      {"canonical",
       [&] {
         json c = parallelogram_to_json(r.frame);
         c["labeled_vertices"] = {{"O", point_to_json(r.frame.vertices[0])},
                                  {"P", point_to_json(r.frame.vertices[1])},
                                  {"Q", point_to_json(r.frame.vertices[2])},
                                  {"R", point_to_json(r.frame.vertices[3])}};
         return c;
       }()},
      {"inscribed",
       {{"v_epsilon", ic.v},
        {"e", ic.geometry.e},
        {"e2", ic.geometry.e2},
        {"canonical_frame",
         {{"conic", conic_to_json(ic.conic)},
          {"geometry", geometry_to_json(ic.geometry)},
          {"tangency", points_to_json(ic.tangency)}}},
        {"original_frame",
         {{"conic", conic_to_json(r.inscribed_original.conic)},
          {"geometry", geometry_to_json(r.inscribed_original.geometry)},
          {"tangency", points_to_json(r.inscribed_original.tangency)}}}}},
      {"circumscribed",
       {{"u_star", cc.u},
        {"e", cc.geometry.e},
        {"e2", cc.geometry.e2},
        {"canonical_frame",
         {{"conic", conic_to_json(cc.conic)}, {"geometry", geometry_to_json(cc.geometry)}}},
        {"original_frame",
         {{"conic", conic_to_json(r.circumscribed_conic_original)},
          {"geometry", geometry_to_json(r.circumscribed_geometry_original)}}}}},
      {"angles", {{"two_theta", r.angles.two_theta}, {"psi", r.angles.psi}, {"delta", r.angles.delta}}},
      {"bielliptic",
       {{"is_bielliptic", r.bielliptic.is_bielliptic},
        {"e2_inscribed", r.bielliptic.e2_inscribed},
        {"e2_circumscribed", r.bielliptic.e2_circumscribed},
        {"matched_condition", to_string(r.bielliptic.matched_condition)},
        {"witness", witness_to_json(r.bielliptic.diagonal_side_witness)}}},
      {"diagnostics",
       {{"tangency_double_root_max", diag.tangency.max_double_root_residual},
        {"tangency_on_curve_max", diag.tangency.max_on_curve_residual},
        {"tangency_foot_offset_max", diag.tangency.max_foot_offset},
        {"tangency_interior_margin_min", diag.tangency.min_interior_margin},
        {"vertex_incidence_canonical_max", diag.vertex_incidence_canonical},
        {"vertex_incidence_original_max", diag.vertex_incidence_original},
        {"stationarity", diag.stationarity},
        {"stationarity_scale", diag.stationarity_scale}}},
  };
}

const std::vector<SweepMetric>& all_sweep_metrics() {
  static const std::vector<SweepMetric> all{SweepMetric::e2, SweepMetric::area,
                                            SweepMetric::arc_length, SweepMetric::a,
                                            SweepMetric::b, SweepMetric::phi};
  return all;
}

std::string to_string(SweepMetric m) {
  switch (m) {
    case SweepMetric::e2:
      return "e2";
    case SweepMetric::area:
      return "area";
    case SweepMetric::arc_length:
      return "arc_length";
    case SweepMetric::a:
      return "a";
    case SweepMetric::b:
      return "b";
    case SweepMetric::phi:
      return "phi";
  }
  return "";
}

SweepMetric sweep_metric_from_string(const std::string& name) {
  for (SweepMetric m : all_sweep_metrics())
    if (to_string(m) == name) return m;
  throw InvalidInput("unknown sweep metric \"" + name + "\"");
}

std::vector<SweepRow> sweep(const Parallelogram& p, int n) {
  if (n < 3) throw InvalidInput("sweep needs n >= 3");
  std::vector<double> vs(n), ratio(n);
  for (int i = 0; i < n; ++i) vs[i] = p.k * (i + 1) / (n + 1);
  kernels::inscribed_ratio(p, vs, ratio);

  std::vector<SweepRow> rows(n);
  for (int i = 0; i < n; ++i) {
    const EllipseGeometry g = inscribed_conic(p, vs[i]).geometry;
    SweepRow& row = rows[i];
    row.v = vs[i];
    row.e2 = 1.0 - ratio[i];
    row.a = g.a;
    row.b = g.b;
    row.phi = g.phi;
    row.area = M_PI * g.a * g.b;
    row.arc_length = ellipse_perimeter(g.a * g.a, g.b * g.b);
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows, std::span<const SweepMetric> metrics) {
  std::string out = "v";
  for (SweepMetric m : metrics) out += "," + to_string(m);
  out += "\n";
  char buf[32];
  const auto put = [&](double x) {
    std::snprintf(buf, sizeof buf, "%.17g", x == 0 ? 0.0 : x);
    out += buf;
  };
  for (const SweepRow& row : rows) {
    put(row.v);
    for (SweepMetric m : metrics) {
      out += ",";
      switch (m) {
        case SweepMetric::e2: put(row.e2); break;
        case SweepMetric::area: put(row.area); break;
        case SweepMetric::arc_length: put(row.arc_length); break;
        case SweepMetric::a: put(row.a); break;
        case SweepMetric::b: put(row.b); break;
        case SweepMetric::phi: put(row.phi); break;
      }
    }
    out += "\n";
  }
  return out;
}

}  // namespace inell
