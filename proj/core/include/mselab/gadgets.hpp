#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "mselab/multigraph.hpp"

namespace mselab {

enum class GadgetEdgeKind : std::uint8_t {
  kChainEdge,       // (position)
  kShaftEdge,       // (position)
  kBundleChain,     // (chain, position); also the chains of a rainbow
  kRailEdge,        // (side 1|2, position)
  kGridHorizontal,  // (row, col) joins (row, col) and (row, col + 1)
  kGridVertical,    // (row, col) joins (row, col) and (row + 1, col)
  kConnectorArc,    // (0: v->a, 1: w->a, 2: b->v, 3: b->w)
  kConnectorChain,  // (position)
};

std::string_view to_string(GadgetEdgeKind kind);

struct GadgetEdgeRole {
  GadgetEdgeKind kind = GadgetEdgeKind::kChainEdge;
  int first = 0;
  int second = 0;
  friend bool operator==(const GadgetEdgeRole&, const GadgetEdgeRole&) = default;
};

// A two-terminal building block with a planar rotation system.
//
// Edges are stored oriented from end_a towards end_b (the direction routes
// take through the gadget). The rotations at the terminals are linear
// blocks, cut at the face that is outside the gadget, so splicing them into
// a host rotation keeps the embedding planar.
struct GadgetHandle {
  MultiGraph graph;
  VertexId end_a = kNoVertex;
  VertexId end_b = kNoVertex;
  std::vector<GadgetEdgeRole> roles;  // indexed by edge id

  const GadgetEdgeRole& role(EdgeId e) const { return roles.at(index_of(e)); }
};

// m-chain: m + 1 vertices, m edges. Throws PreconditionError if m == 0.
GadgetHandle make_chain(int m);

// (l, m)-bundle: l m-chains sharing both endpoints, in fan order.
GadgetHandle make_bundle(int l, int m);

// (q, l, m)-feather: a q-shaft from end_a glued to an (l, m)-bundle whose
// far endpoint is end_b.
GadgetHandle make_feather(int q, int l, int m);

// (l, m)-rainbow: rails p1_1..p1_{l+1} and p2_1..p2_{l+1} with an m-chain
// joining p1_x and p2_x for x in [l]. Terminals are the rail ends p1_{l+1}
// (end_a) and p2_{l+1} (end_b); chains nest with x = 1 innermost.
GadgetHandle make_rainbow(int l, int m);

// a x b grid; vertex (i, j) has id (i - 1) * b + (j - 1). Terminals are
// (1, 1) and (a, b).
GadgetHandle make_grid(int a, int b);

// Directed vertical connector for the top vertex v (end_a) and bottom
// vertex w (end_b): arcs v->a, w->a, b->v, b->w and a directed chain a->b
// of the given length.
GadgetHandle make_directed_connector(int chain_length);

// Same gadget traversed from end_b to end_a: terminals swap and every edge
// is re-oriented. Rotations are unchanged.
GadgetHandle reversed(const GadgetHandle& gadget);

// Gadget ids mapped to host ids; indexed by gadget ids.
struct SpliceResult {
  std::vector<VertexId> vertex_map;
  std::vector<EdgeId> edge_map;
};

// Replaces `replaced` (a connected subgraph between u and v) by `gadget`,
// identifying end_a with u and end_b with v. At u and at v the replaced
// edges must form a contiguous run of the rotation; the gadget's terminal
// rotation takes its place. Interior vertices left isolated are removed.
SpliceResult splice_gadget(MultiGraph& host, VertexId u, VertexId v,
                           std::span<const EdgeId> replaced, const GadgetHandle& gadget);

}  // namespace mselab
