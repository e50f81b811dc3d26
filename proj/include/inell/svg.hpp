#pragma once

#include <string>

#include "inell/analysis.hpp"

namespace inell {

/// Optional drawing layers; the parallelogram outline is always drawn.
struct SvgLayers {
  bool diagonals = false;
  bool inscribed = false;
  bool circumscribed = false;
  bool tangency = false;
  bool diameters = false;

  static SvgLayers all() { return {true, true, true, true, true}; }
  /// Comma-separated names from: diagonals, inscribed, circumscribed,
  /// tangency, diameters, all. Empty text selects nothing. Throws InvalidInput.
  static SvgLayers parse(const std::string& text);
};

/// Standalone SVG of the report geometry in the input frame (y axis up).
/// The viewBox covers every drawn element with a 5% margin. The diameters
/// group carries data-two-theta / data-psi attributes. Deterministic.
std::string render_svg(const AnalysisReport& report, const SvgLayers& layers);

}  // namespace inell
