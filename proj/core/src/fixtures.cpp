#include "mselab/fixtures.hpp"

namespace mselab {

MseInstance gadget_instance(const GadgetHandle& gadget, std::int64_t p, std::int64_t k) {
  MseInstance inst;
  inst.graph = gadget.graph;
  inst.graph.set_label(gadget.end_a, Terminal{TerminalKind::kSource});
  inst.graph.set_label(gadget.end_b, Terminal{TerminalKind::kSink});
  inst.s = gadget.end_a;
  inst.t = gadget.end_b;
  inst.p = p;
  inst.k = k;
  inst.stage = Stage::kFixture;
  return inst;
}

namespace {

// Copies a connector into g and returns its (v, w).
std::pair<VertexId, VertexId> add_connector(MultiGraph& g, int chain_length) {
  const GadgetHandle c = make_directed_connector(chain_length);
  std::vector<VertexId> vmap(c.graph.vertex_bound(), kNoVertex);
  for (VertexId x : c.graph.vertices()) vmap[index_of(x)] = g.add_vertex(c.graph.label(x));
  for (EdgeId e : c.graph.edges()) {
    const Edge& ed = c.graph.edge(e);
    g.add_edge(vmap[index_of(ed.a)], vmap[index_of(ed.b)], ed.directed);
  }
  return {vmap[index_of(c.end_a)], vmap[index_of(c.end_b)]};
}

}  // namespace

MseInstance connector_traversal_fixture(int chain_length, std::int64_t k) {
  MseInstance inst;
  MultiGraph& g = inst.graph;
  inst.s = g.add_vertex(Terminal{TerminalKind::kSource});
  inst.t = g.add_vertex(Terminal{TerminalKind::kSink});
  const auto [v, w] = add_connector(g, chain_length);
  for (int i = 0; i < 2; ++i) {
    g.add_edge(inst.s, v, true);
    g.add_edge(w, inst.t, true);
  }
  inst.p = 2;
  inst.k = k;
  inst.stage = Stage::kFixture;
  return inst;
}

MseInstance opposite_crossing_fixture(int chain_length, std::int64_t k) {
  MseInstance inst;
  MultiGraph& g = inst.graph;
  inst.s = g.add_vertex(Terminal{TerminalKind::kSource});
  inst.t = g.add_vertex(Terminal{TerminalKind::kSink});
  const auto [v1, w1] = add_connector(g, chain_length);
  const auto [v2, w2] = add_connector(g, chain_length);
  g.add_edge(inst.s, v1, true);
  g.add_edge(w1, inst.t, true);
  g.add_edge(inst.s, w2, true);
  g.add_edge(v2, inst.t, true);
  inst.p = 2;
  inst.k = k;
  inst.stage = Stage::kFixture;
  return inst;
}

}  // namespace mselab
