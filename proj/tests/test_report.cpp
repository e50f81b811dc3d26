#include <gtest/gtest.h>

#include <cmath>
#include <regex>

#include "inell/analysis.hpp"
#include "inell/errors.hpp"
#include "inell/json_io.hpp"
#include "inell/svg.hpp"

using namespace inell;

namespace {
const std::array<Vec2, 4> kExample = {{{0, 0}, {2, 4}, {7, 4}, {5, 0}}};
const std::array<Vec2, 4> kSquare = {{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
}  // namespace

TEST(Json, ConicRoundTrip) {
  const Conic c{1, 2, 0.5, -1, 3, -4};
  const json j = conic_to_json(c);
  EXPECT_DOUBLE_EQ(j["xy"].get<double>(), 1.0);
  EXPECT_EQ(conic_from_json(j), c);
  EXPECT_THROW(conic_from_json(json{{"xx", 1}}), InvalidInput);
}

TEST(Json, VertexParsing) {
  const auto v = vertices_from_string("0,0 2,4  7,4 5,0");
  EXPECT_EQ(v[2].x, 7);
  EXPECT_THROW(vertices_from_string("0,0 2,4 7,4"), InvalidInput);
  EXPECT_THROW(vertices_from_string("0,0 2,4 7,4 5,x"), InvalidInput);
  EXPECT_THROW(vertices_from_string("0,0 2,4 7,4 5,0 1,1"), InvalidInput);
  const auto w = vertices_from_json(json::parse(R"({"vertices": [[0,0],[2,4],[7,4],[5,0]]})"));
  EXPECT_EQ(w[1].y, 4);
  EXPECT_THROW(vertices_from_json(json::parse(R"({"vertices": [[0,0]]})")), InvalidInput);
}

TEST(Json, StableDump) {
  const json j = {{"b", 0.1}, {"a", {1, 2.5}}, {"c", "x"}, {"d", -0.0}};
  const std::string s = dump_stable(j);
  EXPECT_EQ(s,
            "{\n  \"a\": [\n    1,\n    2.5\n  ],\n  \"b\": 0.10000000000000001,\n"
            "  \"c\": \"x\",\n  \"d\": 0\n}\n");
  EXPECT_THROW(dump_stable(json{{"x", NAN}}), InvalidInput);
}

TEST(Report, WorkedExample) {
  const AnalysisReport r = analyze(kExample);
  const json j = report_to_json(r);
  EXPECT_NEAR(j["inscribed"]["v_epsilon"].get<double>(), 26.0 / 9, 1e-14);
  const double r65 = std::sqrt(65.0);
  EXPECT_NEAR(j["inscribed"]["e2"].get<double>(), 1 - (65 - r65) / (65 + r65), 1e-12);
  EXPECT_NEAR(j["angles"]["two_theta"].get<double>(), std::atan(8.0), 1e-12);
  EXPECT_NEAR(j["angles"]["psi"].get<double>(), std::atan(8.0), 1e-15);
  EXPECT_FALSE(j["bielliptic"]["is_bielliptic"].get<bool>());
  EXPECT_TRUE(j["inscribed"].contains("canonical_frame"));
  EXPECT_TRUE(j["inscribed"].contains("original_frame"));
  EXPECT_TRUE(j.contains("diagnostics"));
  EXPECT_EQ(dump_stable(j), dump_stable(report_to_json(analyze(kExample))));
}

TEST(Report, OriginalFrameFollowsInput) {
  // Same shape, rotated and translated: e2 identical, centers differ.
  std::array<Vec2, 4> moved;
  const Affine2 f = Affine2::translation({3, -1}).compose(Affine2::rotation(0.9));
  for (int i = 0; i < 4; ++i) moved[i] = f.apply(kExample[i]);
  const AnalysisReport a = analyze(kExample), b = analyze(moved);
  EXPECT_NEAR(a.inscribed_original.geometry.e2, b.inscribed_original.geometry.e2, 1e-12);
  const Vec2 want = f.apply(a.inscribed_original.geometry.center);
  EXPECT_NEAR(b.inscribed_original.geometry.center.x, want.x, 1e-12);
  EXPECT_NEAR(b.inscribed_original.geometry.center.y, want.y, 1e-12);
  for (const Vec2& t : b.inscribed_original.tangency)
    EXPECT_LT(relative_residual(b.inscribed_original.conic, t), 1e-12);
  EXPECT_LT(b.diagnostics.vertex_incidence_original, 1e-12);
}

TEST(Report, SquareConcentricCircles) {
  const AnalysisReport r = analyze(kSquare);
  EXPECT_NEAR(r.inscribed_original.geometry.e2, 0, 1e-14);
  EXPECT_NEAR(r.circumscribed_geometry_original.e2, 0, 1e-14);
  EXPECT_NEAR(norm(r.inscribed_original.geometry.center - r.circumscribed_geometry_original.center),
              0, 1e-14);
  EXPECT_TRUE(r.bielliptic.is_bielliptic);
}

TEST(Sweep, RowsAndCsv) {
  const auto rows = sweep(canonicalize(kExample), 3);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_DOUBLE_EQ(rows[1].v, 2);
  const std::vector<SweepMetric> cols = {SweepMetric::e2, SweepMetric::arc_length};
  const std::string csv = sweep_csv(rows, cols);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "v,e2,arc_length");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
  EXPECT_THROW(sweep(canonicalize(kExample), 2), InvalidInput);
  EXPECT_THROW(sweep_metric_from_string("volume"), InvalidInput);
}

TEST(Sweep, RectangleArcLengthPeaksAtMidpoint) {
  const auto rows = sweep(canonicalize(std::array<Vec2, 4>{{{0, 0}, {4, 0}, {4, 2}, {0, 2}}}), 101);
  const auto best = std::max_element(rows.begin(), rows.end(),
                                     [](auto& a, auto& b) { return a.arc_length < b.arc_length; });
  EXPECT_DOUBLE_EQ(best->v, 1.0);
}

TEST(Sweep, ParallelogramArgminDiffersFromArgmax) {
  const auto rows = sweep(canonicalize(kExample), 1001);
  const auto e2min = std::min_element(rows.begin(), rows.end(),
                                      [](auto& a, auto& b) { return a.e2 < b.e2; });
  const auto arcmax = std::max_element(rows.begin(), rows.end(),
                                       [](auto& a, auto& b) { return a.arc_length < b.arc_length; });
  EXPECT_NEAR(e2min->v, 26.0 / 9, 4.0 / 1002);
  EXPECT_GT(std::abs(arcmax->v - e2min->v), 1e-3 * 4);
}

TEST(Svg, LayersAndMetadata) {
  const AnalysisReport r = analyze(kExample);
  const std::string all = render_svg(r, SvgLayers::all());
  EXPECT_NE(all.find("id=\"parallelogram\""), std::string::npos);
  EXPECT_EQ(std::count(all.begin(), all.end(), '\n') > 5, true);
  EXPECT_NE(all.find("<ellipse"), std::string::npos);
  std::smatch m;
  ASSERT_TRUE(std::regex_search(all, m, std::regex("data-two-theta=\"([^\"]+)\" data-psi=\"([^\"]+)\"")));
  EXPECT_DOUBLE_EQ(std::stod(m[1]), r.angles.two_theta);
  EXPECT_DOUBLE_EQ(std::stod(m[2]), r.angles.psi);
  EXPECT_EQ(all, render_svg(analyze(kExample), SvgLayers::all()));

  const std::string bare = render_svg(r, SvgLayers::parse(""));
  EXPECT_NE(bare.find("<polygon"), std::string::npos);
  EXPECT_EQ(bare.find("<ellipse"), std::string::npos);
  EXPECT_EQ(bare.find("<line"), std::string::npos);
  EXPECT_THROW(SvgLayers::parse("inscribed,bogus"), InvalidInput);
}

TEST(Svg, SquareConcentricCircles) {
  const std::string s = render_svg(analyze(kSquare), SvgLayers::parse("inscribed,circumscribed"));
  std::regex el("<ellipse id=\"[^\"]+\" cx=\"([^\"]+)\" cy=\"([^\"]+)\" rx=\"([^\"]+)\" ry=\"([^\"]+)\"");
  std::vector<std::smatch> found;
  for (auto it = std::sregex_iterator(s.begin(), s.end(), el); it != std::sregex_iterator(); ++it)
    found.push_back(*it);
  ASSERT_EQ(found.size(), 2u);
  for (const auto& m : found) {
    EXPECT_EQ(m[1], found[0][1]);
    EXPECT_EQ(m[2], found[0][2]);
    EXPECT_EQ(m[3], m[4]);
  }
}
