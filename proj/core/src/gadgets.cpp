#include "mselab/gadgets.hpp"

#include <algorithm>
#include <string>

#include "mselab/error.hpp"

namespace mselab {

std::string_view to_string(GadgetEdgeKind kind) {
  switch (kind) {
    case GadgetEdgeKind::kChainEdge: return "chain_edge";
    case GadgetEdgeKind::kShaftEdge: return "shaft_edge";
    case GadgetEdgeKind::kBundleChain: return "bundle_chain";
    case GadgetEdgeKind::kRailEdge: return "rail_edge";
    case GadgetEdgeKind::kGridHorizontal: return "grid_horizontal";
    case GadgetEdgeKind::kGridVertical: return "grid_vertical";
    case GadgetEdgeKind::kConnectorArc: return "connector_arc";
    case GadgetEdgeKind::kConnectorChain: return "connector_chain";
  }
  return "unknown";
}

namespace {

void require_positive(int value, const char* what) {
  if (value < 1) {
    throw PreconditionError(std::string(what) + " must be at least 1, got " +
                            std::to_string(value));
  }
}

EdgeId add_role_edge(GadgetHandle& g, VertexId a, VertexId b, GadgetEdgeRole role,
                     bool directed = false) {
  const EdgeId e = g.graph.add_edge(a, b, directed);
  g.roles.resize(g.graph.edge_bound());
  g.roles[index_of(e)] = role;
  return e;
}

// Lays a path of `length` edges from `from` to `to` with fresh interior
// vertices. Interior rotations are [incoming, outgoing]; the caller orders
// the endpoint rotations. Returns the path's edges in order.
std::vector<EdgeId> lay_path(GadgetHandle& g, VertexId from, VertexId to, int length,
                             InternalRole interior, std::uint32_t ordinal,
                             GadgetEdgeKind kind, int first_coord, bool directed = false) {
  std::vector<EdgeId> path;
  path.reserve(static_cast<std::size_t>(length));
  VertexId cur = from;
  for (int pos = 0; pos < length; ++pos) {
    const VertexId next =
        pos + 1 == length ? to : g.graph.add_vertex(GadgetInternal{interior, ordinal});
    GadgetEdgeRole role{kind, first_coord, pos};
    if (kind == GadgetEdgeKind::kChainEdge || kind == GadgetEdgeKind::kShaftEdge ||
        kind == GadgetEdgeKind::kConnectorChain) {
      role = GadgetEdgeRole{kind, pos, 0};
    }
    path.push_back(add_role_edge(g, cur, next, role, directed));
    cur = next;
  }
  return path;
}

}  // namespace

GadgetHandle make_chain(int m) {
  if (m < 1) throw PreconditionError("an m-chain needs m >= 1 (terminals would coincide)");
  GadgetHandle g;
  g.end_a = g.graph.add_vertex();
  g.end_b = g.graph.add_vertex();
  lay_path(g, g.end_a, g.end_b, m, InternalRole::kChain, 0, GadgetEdgeKind::kChainEdge, 0);
  return g;
}

namespace {

// Adds l m-chains from `near` to `far`. Rotation at `near` gets the chains in
// order 0..l-1 appended after whatever is already there; `far` receives the
// reverse order, matching a fan drawn from left to right.
void lay_bundle(GadgetHandle& g, VertexId near, VertexId far, int l, int m) {
  std::vector<EdgeId> near_block;
  std::vector<EdgeId> far_block;
  for (int c = 0; c < l; ++c) {
    const auto path = lay_path(g, near, far, m, InternalRole::kBundle,
                               static_cast<std::uint32_t>(c), GadgetEdgeKind::kBundleChain, c);
    near_block.push_back(path.front());
    far_block.push_back(path.back());
  }
  std::vector<EdgeId> near_rot;
  for (EdgeId e : g.graph.rotation(near)) {
    if (std::find(near_block.begin(), near_block.end(), e) == near_block.end()) {
      near_rot.push_back(e);
    }
  }
  near_rot.insert(near_rot.end(), near_block.begin(), near_block.end());
  g.graph.set_rotation(near, std::move(near_rot));
  std::reverse(far_block.begin(), far_block.end());
  g.graph.set_rotation(far, std::move(far_block));
}

}  // namespace

GadgetHandle make_bundle(int l, int m) {
  require_positive(l, "bundle chain count l");
  require_positive(m, "bundle chain length m");
  GadgetHandle g;
  g.end_a = g.graph.add_vertex();
  g.end_b = g.graph.add_vertex();
  lay_bundle(g, g.end_a, g.end_b, l, m);
  return g;
}

GadgetHandle make_feather(int q, int l, int m) {
  require_positive(q, "feather shaft length q");
  require_positive(l, "feather chain count l");
  require_positive(m, "feather chain length m");
  GadgetHandle g;
  g.end_a = g.graph.add_vertex();
  const VertexId joint = g.graph.add_vertex(GadgetInternal{InternalRole::kJoint, 0});
  g.end_b = g.graph.add_vertex();
  lay_path(g, g.end_a, joint, q, InternalRole::kChain, 0, GadgetEdgeKind::kShaftEdge, 0);
  lay_bundle(g, joint, g.end_b, l, m);
  return g;
}

GadgetHandle make_rainbow(int l, int m) {
  require_positive(l, "rainbow rail length l");
  require_positive(m, "rainbow chain length m");
  GadgetHandle g;
  const auto n = static_cast<std::size_t>(l) + 1;
  // rail[side][x] for x = 1..l+1 (index 0 unused)
  std::vector<VertexId> rail[2];
  for (int side = 0; side < 2; ++side) {
    rail[side].assign(n + 1, kNoVertex);
    const auto role = side == 0 ? InternalRole::kEntryRail : InternalRole::kExitRail;
    for (std::size_t x = 1; x <= n; ++x) {
      rail[side][x] = g.graph.add_vertex(
          x == n ? Label{} : Label{GadgetInternal{role, static_cast<std::uint32_t>(x)}});
    }
  }
  g.end_a = rail[0][n];
  g.end_b = rail[1][n];
  // outer[side][x]: rail edge between p_x and p_{x+1}; oriented entry -> exit.
  std::vector<EdgeId> outer[2];
  std::vector<EdgeId> arc_first(n, kNoEdge);
  std::vector<EdgeId> arc_last(n, kNoEdge);
  for (int side = 0; side < 2; ++side) {
    outer[side].assign(n, kNoEdge);
    for (std::size_t x = 1; x < n; ++x) {
      const VertexId from = side == 0 ? rail[0][x + 1] : rail[1][x];
      const VertexId to = side == 0 ? rail[0][x] : rail[1][x + 1];
      outer[side][x] = add_role_edge(
          g, from, to, {GadgetEdgeKind::kRailEdge, side + 1, static_cast<int>(x)});
    }
  }
  for (std::size_t x = 1; x < n; ++x) {
    const auto path = lay_path(g, rail[0][x], rail[1][x], m, InternalRole::kRainbowChain,
                               static_cast<std::uint32_t>(x), GadgetEdgeKind::kBundleChain,
                               static_cast<int>(x));
    arc_first[x] = path.front();
    arc_last[x] = path.back();
  }
  // Arcs are drawn above the rails; the entry rail runs left to right towards
  // the innermost arc and the exit rail continues to the right.
  for (std::size_t x = 1; x <= n; ++x) {
    std::vector<EdgeId> entry;
    std::vector<EdgeId> exit;
    if (x >= 2) entry.push_back(outer[0][x - 1]);  // towards p1_{x-1}, right
    if (x < n) entry.push_back(arc_first[x]);
    if (x < n) entry.push_back(outer[0][x]);  // towards p1_{x+1}, left
    if (x < n) exit.push_back(outer[1][x]);   // towards p2_{x+1}, right
    if (x < n) exit.push_back(arc_last[x]);
    if (x >= 2) exit.push_back(outer[1][x - 1]);  // towards p2_{x-1}, left
    g.graph.set_rotation(rail[0][x], std::move(entry));
    g.graph.set_rotation(rail[1][x], std::move(exit));
  }
  return g;
}

GadgetHandle make_grid(int a, int b) {
  require_positive(a, "grid rows a");
  require_positive(b, "grid columns b");
  GadgetHandle g;
  auto at = [b](int i, int j) {
    return vertex_id(static_cast<std::size_t>((i - 1) * b + (j - 1)));
  };
  for (int i = 1; i <= a; ++i) {
    for (int j = 1; j <= b; ++j) g.graph.add_vertex(GridVertex{i, j});
  }
  const auto cells = static_cast<std::size_t>(a) * static_cast<std::size_t>(b);
  std::vector<EdgeId> right(cells, kNoEdge);
  std::vector<EdgeId> down(cells, kNoEdge);
  for (int i = 1; i <= a; ++i) {
    for (int j = 1; j <= b; ++j) {
      if (j < b) {
        right[index_of(at(i, j))] =
            add_role_edge(g, at(i, j), at(i, j + 1), {GadgetEdgeKind::kGridHorizontal, i, j});
      }
      if (i < a) {
        down[index_of(at(i, j))] =
            add_role_edge(g, at(i, j), at(i + 1, j), {GadgetEdgeKind::kGridVertical, i, j});
      }
    }
  }
  // Counter-clockwise with row 1 on top: right, up, left, down.
  for (int i = 1; i <= a; ++i) {
    for (int j = 1; j <= b; ++j) {
      std::vector<EdgeId> rot;
      if (j < b) rot.push_back(right[index_of(at(i, j))]);
      if (i > 1) rot.push_back(down[index_of(at(i - 1, j))]);
      if (j > 1) rot.push_back(right[index_of(at(i, j - 1))]);
      if (i < a) rot.push_back(down[index_of(at(i, j))]);
      g.graph.set_rotation(at(i, j), std::move(rot));
    }
  }
  g.end_a = at(1, 1);
  g.end_b = at(a, b);
  return g;
}

GadgetHandle make_directed_connector(int chain_length) {
  require_positive(chain_length, "connector chain length");
  GadgetHandle g;
  g.end_a = g.graph.add_vertex();
  g.end_b = g.graph.add_vertex();
  const VertexId in = g.graph.add_vertex(GadgetInternal{InternalRole::kConnectorIn, 0});
  const VertexId out = g.graph.add_vertex(GadgetInternal{InternalRole::kConnectorOut, 0});
  const EdgeId va = add_role_edge(g, g.end_a, in, {GadgetEdgeKind::kConnectorArc, 0, 0}, true);
  const EdgeId wa = add_role_edge(g, g.end_b, in, {GadgetEdgeKind::kConnectorArc, 1, 0}, true);
  const EdgeId bv = add_role_edge(g, out, g.end_a, {GadgetEdgeKind::kConnectorArc, 2, 0}, true);
  const EdgeId bw = add_role_edge(g, out, g.end_b, {GadgetEdgeKind::kConnectorArc, 3, 0}, true);
  const auto chain = lay_path(g, in, out, chain_length, InternalRole::kConnectorChain, 0,
                              GadgetEdgeKind::kConnectorChain, 0, true);
  // v on top, w below, a on the left, b on the right, chain a -> b between.
  g.graph.set_rotation(g.end_a, {va, bv});
  g.graph.set_rotation(g.end_b, {bw, wa});
  g.graph.set_rotation(in, {wa, chain.front(), va});
  g.graph.set_rotation(out, {bv, chain.back(), bw});
  return g;
}

GadgetHandle reversed(const GadgetHandle& gadget) {
  GadgetHandle out;
  out.roles = gadget.roles;
  MultiGraph& h = out.graph;
  const MultiGraph& g = gadget.graph;
  for (std::size_t i = 0; i < g.vertex_bound(); ++i) {
    const VertexId v = vertex_id(i);
    if (g.has_vertex(v)) {
      h.add_vertex(g.label(v));
    } else {
      h.extend_bounds(i + 1, 0);
    }
  }
  for (std::size_t i = 0; i < g.edge_bound(); ++i) {
    const EdgeId e = edge_id(i);
    if (!g.has_edge(e)) {
      h.extend_bounds(0, i + 1);
      continue;
    }
    const Edge& ed = g.edge(e);
    h.add_edge(ed.b, ed.a, ed.directed);
  }
  for (VertexId v : g.vertices()) {
    const auto rot = g.rotation(v);
    h.set_rotation(v, {rot.begin(), rot.end()});
  }
  out.end_a = gadget.end_b;
  out.end_b = gadget.end_a;
  return out;
}

SpliceResult splice_gadget(MultiGraph& host, VertexId u, VertexId v,
                           std::span<const EdgeId> replaced, const GadgetHandle& gadget) {
  if (u == v) throw GraphError("splice terminals must differ");
  const MultiGraph& g = gadget.graph;
  const auto rot_u = host.rotation(u);
  const auto rot_v = host.rotation(v);
  std::vector<EdgeId> original_u(rot_u.begin(), rot_u.end());
  std::vector<EdgeId> original_v(rot_v.begin(), rot_v.end());
  std::vector<EdgeId> sorted_replaced(replaced.begin(), replaced.end());
  std::sort(sorted_replaced.begin(), sorted_replaced.end());
  auto block_at = [&](const std::vector<EdgeId>& rot) {
    std::vector<EdgeId> block;
    for (EdgeId e : rot) {
      if (std::binary_search(sorted_replaced.begin(), sorted_replaced.end(), e)) {
        block.push_back(e);
      }
    }
    return block;
  };
  const auto block_u = block_at(original_u);
  const auto block_v = block_at(original_v);
  if (block_u.empty() || block_v.empty()) {
    throw GraphError("replaced edges must touch both splice terminals");
  }

  SpliceResult result;
  result.vertex_map.assign(g.vertex_bound(), kNoVertex);
  result.edge_map.assign(g.edge_bound(), kNoEdge);
  host.reserve(g.vertex_count(), g.edge_count());
  for (VertexId x : g.vertices()) {
    if (x == gadget.end_a) {
      result.vertex_map[index_of(x)] = u;
    } else if (x == gadget.end_b) {
      result.vertex_map[index_of(x)] = v;
    } else {
      result.vertex_map[index_of(x)] = host.add_vertex(g.label(x));
    }
  }
  for (EdgeId e : g.edges()) {
    const Edge& ed = g.edge(e);
    result.edge_map[index_of(e)] = host.add_edge(result.vertex_map[index_of(ed.a)],
                                                 result.vertex_map[index_of(ed.b)], ed.directed);
  }
  auto mapped_rotation = [&](VertexId x) {
    std::vector<EdgeId> rot;
    for (EdgeId e : g.rotation(x)) rot.push_back(result.edge_map[index_of(e)]);
    return rot;
  };
  for (VertexId x : g.vertices()) {
    if (x == gadget.end_a || x == gadget.end_b) continue;
    host.set_rotation(result.vertex_map[index_of(x)], mapped_rotation(x));
  }
  host.set_rotation(u, std::move(original_u));
  host.replace_in_rotation(u, block_u, mapped_rotation(gadget.end_a));
  host.set_rotation(v, std::move(original_v));
  host.replace_in_rotation(v, block_v, mapped_rotation(gadget.end_b));

  std::vector<VertexId> touched;
  for (EdgeId e : replaced) {
    const Edge ed = host.edge(e);
    host.remove_edge(e);
    for (VertexId x : {ed.a, ed.b}) {
      if (x != u && x != v) touched.push_back(x);
    }
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  for (VertexId x : touched) {
    if (host.has_vertex(x) && host.degree(x) == 0) host.remove_vertex(x);
  }
  return result;
}

}  // namespace mselab
