#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "inell/circumscribed.hpp"
#include "inell/inscribed.hpp"
#include "inell/json_io.hpp"

namespace inell {

struct ResidualDiagnostics {
  TangencyDiagnostics tangency{};
  double vertex_incidence_canonical = 0;
  double vertex_incidence_original = 0;
  double stationarity = 0;
  double stationarity_scale = 0;
};

/// Everything `analyze` reports about one parallelogram. Canonical-frame
/// objects carry the suffix _canonical; the rest are in the input frame.
struct AnalysisReport {
  std::array<Vec2, 4> input{};
  Parallelogram frame{};

  InscribedEllipse inscribed_canonical{};
  InscribedEllipse inscribed_original{};

  CircumscribedEllipse circumscribed_canonical{};
  Conic circumscribed_conic_original{};
  EllipseGeometry circumscribed_geometry_original{};

  AngleCheck angles{};
  BiellipticVerdict bielliptic{};
  ResidualDiagnostics diagnostics{};
};

AnalysisReport analyze(std::span<const Vec2, 4> vertices);

json report_to_json(const AnalysisReport& r);

enum class SweepMetric { e2, area, arc_length, a, b, phi };

/// All metrics, in CSV column order.
const std::vector<SweepMetric>& all_sweep_metrics();
std::string to_string(SweepMetric m);
/// Throws InvalidInput for unknown names.
SweepMetric sweep_metric_from_string(const std::string& name);

struct SweepRow {
  double v = 0;
  double e2 = 0;
  double area = 0;
  double arc_length = 0;
  double a = 0;
  double b = 0;
  double phi = 0;  // canonical frame
};

/// Inscribed family at v_i = k (i + 1) / (n + 1), i = 0..n-1, sorted by v.
/// e2 comes from the batched kernels; a, b, phi from the conic geometry.
/// Throws InvalidInput when n < 3.
std::vector<SweepRow> sweep(const Parallelogram& p, int n);

/// Header row "v,<metrics...>" then one row per sample; 17 significant digits.
std::string sweep_csv(const std::vector<SweepRow>& rows, std::span<const SweepMetric> metrics);

}  // namespace inell
