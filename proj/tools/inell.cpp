#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "inell/analysis.hpp"
#include "inell/errors.hpp"
#include "inell/inscribed.hpp"
#include "inell/json_io.hpp"
#include "inell/svg.hpp"
#include "inell/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kBadInput = 2;

struct VertexSource {
  std::string vertices;
  std::string input;

  std::array<inell::Vec2, 4> load() const {
    if (!vertices.empty() && !input.empty())
      throw inell::InvalidInput("give either --vertices or --input, not both");
    if (!vertices.empty()) return inell::vertices_from_string(vertices);
    if (input.empty()) throw inell::InvalidInput("missing --vertices or --input");
    std::ifstream in(input);
    if (!in) throw inell::InvalidInput("cannot read input file: " + input);
    inell::json j;
    try {
      j = inell::json::parse(in);
    } catch (const inell::json::parse_error& e) {
      throw inell::InvalidInput(std::string("malformed JSON in ") + input + ": " + e.what());
    }
    return inell::vertices_from_json(j);
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--vertices", vertices, "Four vertices as \"x1,y1 x2,y2 x3,y3 x4,y4\"");
    cmd->add_option("--input", input, "JSON file with {\"vertices\": [[x, y], ...]}");
  }
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw inell::InvalidInput("cannot write output file: " + out_path);
  out << text;
  if (!out.flush()) throw inell::InvalidInput("failed writing output file: " + out_path);
}

std::string text_summary(const inell::AnalysisReport& r) {
  char buf[1024];
  const auto& ig = r.inscribed_original.geometry;
  const auto& og = r.circumscribed_geometry_original;
  std::snprintf(buf, sizeof buf,
                "frame       l=%.12g k=%.12g d=%.12g\n"
                "inscribed   v=%.12g e2=%.12g center=(%.12g, %.12g) a=%.12g b=%.12g\n"
                "circum      u=%.12g e2=%.12g center=(%.12g, %.12g) a=%.12g b=%.12g\n"
                "angles      two_theta=%.12g psi=%.12g delta=%.3e\n"
                "bielliptic  %s\n",
                r.frame.l, r.frame.k, r.frame.d, r.inscribed_canonical.v, ig.e2, ig.center.x,
                ig.center.y, ig.a, ig.b, r.circumscribed_canonical.u, og.e2, og.center.x,
                og.center.y, og.a, og.b, r.angles.two_theta, r.angles.psi, r.angles.delta,
                r.bielliptic.is_bielliptic ? "yes" : "no");
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal ellipses inscribed in and circumscribed about parallelograms"};
  app.require_subcommand(1);

  VertexSource source;
  std::string out_path;
  std::string format;
  int n = 101;
  std::string metrics = "e2,area,arc_length,a,b,phi";
  std::string layers = "all";
  std::uint64_t seed = 42;
  int trials = 100;
  std::string fault;

  auto* analyze = app.add_subcommand("analyze", "Minimal-eccentricity ellipses and diagnostics");
  source.attach(analyze);
  analyze->add_option("--out", out_path, "Output file (default stdout)");
  analyze->add_option("--format", format, "json (default) or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* sweep = app.add_subcommand("sweep", "Tabulate the inscribed family over v");
  source.attach(sweep);
  sweep->add_option("--n", n, "Number of samples (>= 3)");
  sweep->add_option("--metrics", metrics, "Comma-separated columns");
  sweep->add_option("--out", out_path, "Output file (default stdout)");
  sweep->add_option("--format", format, "csv (default) or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* plot = app.add_subcommand("plot", "Render an SVG figure");
  source.attach(plot);
  plot->add_option("--layers", layers,
                   "Comma-separated: diagonals,inscribed,circumscribed,tangency,diameters,all");
  plot->add_option("--out", out_path, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run the randomized property suites");
  verify->add_option("--seed", seed, "Generator seed");
  verify->add_option("--trials", trials, "Trials per property (>= 1)");
  verify->add_option("--format", format, "text (default) or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--inject-fault", fault)->group("")->check(CLI::IsMember({"v-epsilon"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*analyze) {
      const inell::AnalysisReport r = inell::analyze(source.load());
      emit(format == "text" ? text_summary(r) : inell::dump_stable(inell::report_to_json(r)),
           out_path);
    } else if (*sweep) {
      if (n < 3) throw inell::InvalidInput("--n must be at least 3");
      std::vector<inell::SweepMetric> cols;
      std::stringstream ss(metrics);
      for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) cols.push_back(inell::sweep_metric_from_string(item));
      if (cols.empty()) cols = inell::all_sweep_metrics();
      const auto rows = inell::sweep(inell::canonicalize(source.load()), n);
      if (format == "json") {
        inell::json arr = inell::json::array();
        for (const auto& row : rows) {
          inell::json o{{"v", row.v}};
          for (auto m : cols) {
            const double values[] = {row.e2, row.area, row.arc_length, row.a, row.b, row.phi};
            o[inell::to_string(m)] = values[static_cast<int>(m)];
          }
          arr.push_back(o);
        }
        emit(inell::dump_stable(arr), out_path);
      } else {
        emit(inell::sweep_csv(rows, cols), out_path);
      }
    } else if (*plot) {
      const inell::SvgLayers selected = inell::SvgLayers::parse(layers);
      emit(inell::render_svg(inell::analyze(source.load()), selected), out_path);
    } else if (*verify) {
      if (trials < 1) throw inell::InvalidInput("--trials must be at least 1");
      inell::VerifyOptions options;
      options.seed = seed;
      options.trials = trials;
      if (fault == "v-epsilon")
        options.v_epsilon_override = [](const inell::Parallelogram& p) {
          return 0.9 * inell::v_epsilon(p);
        };
      const inell::VerifyReport report = inell::run_verification(options);
      if (format == "json") {
        inell::json arr = inell::json::array();
        for (const auto& prop : report.properties)
          arr.push_back({{"name", prop.name},
                         {"passed", prop.passed},
                         {"total", prop.total},
                         {"worst", std::isfinite(prop.worst) ? inell::json(prop.worst) : nullptr},
                         {"threshold", prop.threshold},
                         {"failures", prop.failures}});
        std::cout << inell::dump_stable({{"all_passed", report.all_passed()}, {"properties", arr}});
      } else {
        inell::print_report(std::cout, report);
      }
      return report.all_passed() ? kOk : kVerificationFailed;
    }
  } catch (const inell::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  return kOk;
}
