#include <gtest/gtest.h>

#include <set>

#include "mselab/error.hpp"
#include "mselab/gadgets.hpp"
#include "mselab/graph_io.hpp"
#include "mselab/instance_io.hpp"
#include "mselab/reduction.hpp"

namespace mselab {
namespace {

TEST(GraphJson, OneChain) {
  const auto chain = make_chain(1);
  const auto doc = nlohmann::json::parse(export_graph(chain.graph, ExportFormat::kJson));
  EXPECT_EQ(doc.at("vertices").size(), 2u);
  EXPECT_EQ(doc.at("edges").size(), 1u);
  EXPECT_EQ(doc.at("rotation").size(), 2u);
}

TEST(GraphJson, KeyOrderIsStable) {
  const std::string text = export_graph(make_chain(2).graph, ExportFormat::kJson);
  const auto vertices = text.find("\"vertices\"");
  const auto edges = text.find("\"edges\"");
  const auto rotation = text.find("\"rotation\"");
  EXPECT_LT(vertices, edges);
  EXPECT_LT(edges, rotation);
  EXPECT_EQ(text, export_graph(import_graph_json(text), ExportFormat::kJson));
}

TEST(GraphJson, RoundTripPreservesIds) {
  MultiGraph g = build_base(VcInstance{2, {{1, 2}}, 1}).instance.graph;
  // Punch holes in the id space.
  const VertexId hub = g.add_vertex(TreeNode{1, 2});
  const VertexId leaf = g.add_vertex();
  const EdgeId spare = g.add_edge(hub, leaf, true);
  g.add_edge(hub, leaf);
  g.remove_edge(spare);
  const MultiGraph back = import_graph_json(export_graph(g, ExportFormat::kJson));
  EXPECT_TRUE(back == g);
  EXPECT_EQ(back.edge_bound(), g.edge_bound());
  EXPECT_FALSE(back.has_edge(spare));
}

TEST(GraphJson, MalformedInput) {
  EXPECT_THROW(import_graph_json("{"), ParseError);
  EXPECT_THROW(import_graph_json(R"({"vertices": []})"), ParseError);
  EXPECT_THROW(import_graph_json(R"({"vertices": [{"id": 0, "label": null}],
      "edges": [{"id": 0, "a": 0, "b": 3, "directed": false}]})"),
               ParseError);
  EXPECT_THROW(import_graph_json(R"({"vertices": [{"id": 0, "label": null},
      {"id": 1, "label": null}], "edges": [{"id": 0, "a": 0, "b": 1, "directed": false}],
      "rotation": {"0": [], "1": [0]}})"),
               ParseError);
}

TEST(GraphDot, Arrows) {
  const auto plain = export_graph(make_chain(2).graph, ExportFormat::kDot);
  EXPECT_EQ(plain.rfind("graph G {", 0), 0u);
  EXPECT_NE(plain.find(" -- "), std::string::npos);
  const auto directed = export_graph(make_directed_connector(2).graph, ExportFormat::kDot);
  EXPECT_EQ(directed.rfind("digraph G {", 0), 0u);
  EXPECT_NE(directed.find(" -> "), std::string::npos);
  EXPECT_EQ(directed.find(" -- "), std::string::npos);
}

TEST(GraphDot, OneLinePerEdge) {
  const auto g = make_bundle(3, 2).graph;
  const auto dot = export_graph(g, ExportFormat::kDot);
  std::size_t lines = 0;
  for (std::size_t at = dot.find(" -- "); at != std::string::npos; at = dot.find(" -- ", at + 1)) {
    ++lines;
  }
  EXPECT_EQ(lines, g.edge_count());
}

TEST(GraphDot, WorkedExampleGridCoordinates) {
  const Reduction r = build_base(VcInstance{4, {{1, 2}, {2, 3}, {3, 4}, {1, 3}}, 2});
  const auto dot = export_graph(r.instance.graph, ExportFormat::kDot);
  std::set<std::pair<int, int>> cells;
  for (std::size_t at = dot.find("row="); at != std::string::npos; at = dot.find("row=", at + 1)) {
    const int row = std::stoi(dot.substr(at + 4));
    const int col = std::stoi(dot.substr(dot.find("col=", at) + 4));
    cells.insert({row, col});
  }
  EXPECT_EQ(cells.size(), 20u);
  EXPECT_EQ(cells.rbegin()->first, 4);
  int max_col = 0;
  for (auto [row, col] : cells) max_col = std::max(max_col, col);
  EXPECT_EQ(max_col, 5);
}

TEST(ExportFormat, Parse) {
  EXPECT_EQ(parse_export_format("dot"), ExportFormat::kDot);
  EXPECT_EQ(parse_export_format("json"), ExportFormat::kJson);
  EXPECT_THROW(parse_export_format("svg"), ParseError);
}

TEST(VcText, ParseAndFormat) {
  const VcInstance vc = parse_vc_instance("# figure\n4 4 2\n1 2\n2 3\n\n3 4\n  # tail\n1 3\n");
  EXPECT_EQ(vc, (VcInstance{4, {{1, 2}, {2, 3}, {3, 4}, {1, 3}}, 2}));
  EXPECT_EQ(parse_vc_instance(format_vc_instance(vc)), vc);
}

TEST(VcText, ErrorsCarryLineNumbers) {
  try {
    parse_vc_instance("3 2 1\n1 2\n1 1\n");
    FAIL();
  } catch (const ParseError& ex) {
    EXPECT_EQ(ex.line(), 3u);
  }
  EXPECT_THROW(parse_vc_instance("3 2 1\n1 2\n"), ParseError);
  EXPECT_THROW(parse_vc_instance("3 1 1\n1 4\n"), ParseError);
  EXPECT_THROW(parse_vc_instance("3 1 5\n1 2\n"), ParseError);
  EXPECT_THROW(parse_vc_instance("3 2 1\n1 2\n2 1\n"), ParseError);
  EXPECT_THROW(parse_vc_instance("x y z\n"), ParseError);
}

TEST(LayoutJson, RoundTripEveryStage) {
  const VcInstance vc{3, {{1, 2}}, 1};
  Reduction r = build_base(vc);
  auto check = [](const Reduction& x) {
    const std::string text = layout_to_json(x.layout).dump();
    const LayoutMap back = layout_from_json(nlohmann::json::parse(text));
    EXPECT_EQ(back, x.layout);
    EXPECT_EQ(layout_digest(back), layout_digest(x.layout));
    EXPECT_EQ(layout_digest(x.layout), fnv1a_hex(text));
  };
  check(r);
  r = subdivision_rounds(std::move(r));
  check(r);
  r = replace_bundles_with_rainbows(std::move(r));
  check(r);
  r = replace_terminals_with_trees(std::move(r));
  check(r);
  r = make_directed(std::move(r));
  check(r);
}

TEST(LayoutJson, Malformed) {
  EXPECT_THROW(layout_from_json(nlohmann::json::parse(R"({"stage": "base"})")), ParseError);
  EXPECT_THROW(stage_from_string("sideways"), ParseError);
}

TEST(InstanceJson, RoundTrip) {
  const Reduction r = build_base(VcInstance{2, {{1, 2}}, 1});
  const auto text = instance_to_json(r.instance, "00ff").dump();
  const LoadedInstance back = instance_from_json(nlohmann::json::parse(text));
  EXPECT_TRUE(back.instance.graph == r.instance.graph);
  EXPECT_EQ(back.instance.s, r.instance.s);
  EXPECT_EQ(back.instance.t, r.instance.t);
  EXPECT_EQ(back.instance.p, 8);
  EXPECT_EQ(back.instance.k, 3);
  EXPECT_EQ(back.instance.stage, Stage::kBase);
  EXPECT_EQ(back.layout_digest, "00ff");
}

TEST(Fnv1a, KnownVectors) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
}

}  // namespace
}  // namespace mselab
