#pragma once

#include <array>
#include <string>

#include <json.hpp>

#include "inell/conic.hpp"
#include "inell/parallelogram.hpp"

namespace inell {

using json = nlohmann::json;

/// {"xx": A, "yy": B, "xy": 2C, "x": D, "y": E, "1": F}: the full xy
/// coefficient is stored, not the halved C.
json conic_to_json(const Conic& c);
Conic conic_from_json(const json& j);

json point_to_json(Vec2 p);
json geometry_to_json(const EllipseGeometry& g);

/// {"l", "k", "d", "isometry": {"matrix": [[..],[..]], "translation": [..]}}
json parallelogram_to_json(const Parallelogram& p);

/// Reads {"vertices": [[x, y] x 4]}. Throws InvalidInput on any schema error.
std::array<Vec2, 4> vertices_from_json(const json& j);

/// Parses "x1,y1 x2,y2 x3,y3 x4,y4". Throws InvalidInput.
std::array<Vec2, 4> vertices_from_string(const std::string& text);

/// Deterministic rendering: keys sorted, floating-point numbers with 17
/// significant digits, two-space indentation. Throws InvalidInput on
/// non-finite numbers.
std::string dump_stable(const json& j);

}  // namespace inell
