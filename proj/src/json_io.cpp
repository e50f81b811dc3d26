#include "inell/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "inell/errors.hpp"

namespace inell {

json conic_to_json(const Conic& c) {
  return json{{"xx", c.A}, {"yy", c.B}, {"xy", 2 * c.C}, {"x", c.D}, {"y", c.E}, {"1", c.F}};
}

Conic conic_from_json(const json& j) {
  try {
    return {j.at("xx").get<double>(),     j.at("yy").get<double>(), j.at("xy").get<double>() / 2,
            j.at("x").get<double>(),      j.at("y").get<double>(),  j.at("1").get<double>()};
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed conic JSON: ") + e.what());
  }
}

json point_to_json(Vec2 p) { return json::array({p.x, p.y}); }

json geometry_to_json(const EllipseGeometry& g) {
  return json{{"center", point_to_json(g.center)},
              {"a", g.a},
              {"b", g.b},
              {"phi", g.phi},
              {"e", g.e},
              {"e2", g.e2}};
}

json parallelogram_to_json(const Parallelogram& p) {
  const auto& m = p.iso.m;
  return json{{"l", p.l},
              {"k", p.k},
              {"d", p.d},
              {"isometry",
               {{"matrix", json::array({json::array({m[0][0], m[0][1]}),
                                        json::array({m[1][0], m[1][1]})})},
                {"translation", point_to_json(p.iso.t)}}}};
}

std::array<Vec2, 4> vertices_from_json(const json& j) {
  try {
    const json& vs = j.at("vertices");
    if (!vs.is_array() || vs.size() != 4) throw InvalidInput("\"vertices\" must hold 4 points");
    std::array<Vec2, 4> out;
    for (std::size_t i = 0; i < 4; ++i) {
      const json& p = vs[i];
      if (!p.is_array() || p.size() != 2) throw InvalidInput("each vertex must be [x, y]");
      out[i] = {p[0].get<double>(), p[1].get<double>()};
    }
    return out;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed vertices JSON: ") + e.what());
  }
}

std::array<Vec2, 4> vertices_from_string(const std::string& text) {
  std::istringstream in(text);
  std::array<Vec2, 4> out;
  std::string token;
  std::size_t n = 0;
  while (in >> token) {
    if (n == 4) throw InvalidInput("expected exactly 4 vertices in \"" + text + "\"");
    const auto comma = token.find(',');
    if (comma == std::string::npos) throw InvalidInput("vertex \"" + token + "\" is not x,y");
    try {
      std::size_t used_x = 0, used_y = 0;
      const std::string xs = token.substr(0, comma), ys = token.substr(comma + 1);
      out[n] = {std::stod(xs, &used_x), std::stod(ys, &used_y)};
      if (used_x != xs.size() || used_y != ys.size()) throw std::invalid_argument(token);
    } catch (const std::logic_error&) {
      throw InvalidInput("vertex \"" + token + "\" is not a pair of numbers");
    }
    ++n;
  }
  if (n != 4) throw InvalidInput("expected exactly 4 vertices in \"" + text + "\"");
  return out;
}

namespace {

void write_string(std::string& out, const std::string& s) { out += json(s).dump(); }

void write(std::string& out, const json& j, int depth) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close_pad(2 * depth, ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {  // std::map order: sorted keys
        if (!first) out += ",\n";
        first = false;
        out += pad;
        write_string(out, key);
        out += ": ";
        write(out, value, depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        write(out, j[i], depth + 1);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) throw InvalidInput("refusing to serialize a non-finite number");
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", v == 0 ? 0.0 : v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump_stable(const json& j) {
  std::string out;
  write(out, j, 0);
  out += "\n";
  return out;
}

}  // namespace inell
