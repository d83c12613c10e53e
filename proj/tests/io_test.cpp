#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "egs/corpus.hpp"
#include "egs/io.hpp"
#include "test_support.hpp"

using namespace egs;
using namespace egs::testing;

TEST(Io, RingRoundTrip) {
  for (const auto& r : {zz(), zz_xy(), qq_x()}) EXPECT_EQ(parse_ring(ring_to_json(r)), r);
  EXPECT_THROW(parse_ring(nlohmann::json{{"kind", "reals"}}), FormatError);
  EXPECT_THROW(parse_ring(nlohmann::json{{"kind", "polynomial"}, {"variables", {"x"}}, {"base", "complex"}}),
               FormatError);
}

TEST(Io, InstanceRoundTrip) {
  for (const auto& f : corpus::files()) {
    const auto j = nlohmann::json::parse(f.json);
    if (!j.contains("ring")) continue;
    const auto g = parse_instance(j);
    const auto again = parse_instance(instance_to_json(g));
    ASSERT_EQ(again.num_vertices(), g.num_vertices()) << f.name;
    ASSERT_EQ(again.num_edges(), g.num_edges());
    for (std::size_t v = 0; v < g.num_vertices(); ++v) EXPECT_EQ(again.vertex_label(v), g.vertex_label(v));
    for (std::size_t e = 0; e < g.num_edges(); ++e) EXPECT_EQ(again.edge_label(e), g.edge_label(e));
  }
}

TEST(Io, InstanceErrors) {
  EXPECT_THROW(parse_instance_text("{"), FormatError);
  EXPECT_THROW(parse_instance_text(R"({"ring":{"kind":"integers"},"vertices":[{"name":"a","label":"2*"}],"edges":[]})"),
               FormatError);
  EXPECT_THROW(parse_instance_text(R"({"ring":{"kind":"integers"},"vertices":[{"name":"a","label":"2"},
      {"name":"a","label":"3"}],"edges":[{"u":"a","v":"a","label":"1"}]})"),
               ValidationError);
  EXPECT_THROW(parse_instance_text(R"({"ring":{"kind":"integers"},"vertices":[{"name":"a","label":"2"}],
      "edges":[{"u":"a","v":"b","label":"1"}]})"),
               ValidationError);
  EXPECT_THROW(parse_instance_text(R"({"ring":{"kind":"integers"},"vertices":[{"name":"a","label":"2"},
      {"name":"b","label":"3"}],"edges":[]})"),
               ValidationError);
}

TEST(Io, SplineSets) {
  const auto t4 = corpus::instance("t4.json");
  const auto b = corpus::spline_set("t4_set_b.json", t4);
  const auto again = parse_spline_set(spline_set_to_json(b.columns()), t4);
  EXPECT_EQ(again.columns(), b.columns());
  EXPECT_THROW(parse_spline_set(nlohmann::json::parse(R"({"splines":[["x","0"]]})"), t4), DimensionError);
  EXPECT_THROW(parse_spline_set(nlohmann::json::parse(R"({"splines":[["x","0","0","1/2"]]})"), t4), FormatError);
  EXPECT_EQ(parse_target(nlohmann::json::parse(R"({"splines":[["x","0","0","0"]]})"), t4)[0], P("x", t4.ring()));
}

TEST(Corpus, DataDirectoryMatchesBundledFiles) {
  for (const auto& f : corpus::files()) {
    std::ifstream in(std::string(EGS_DATA_DIR) + "/" + std::string(f.name));
    ASSERT_TRUE(in) << f.name;
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), f.json) << f.name;
  }
}

TEST(Corpus, AllChecksPass) {
  for (const auto& c : corpus::run_checks()) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}
