#include "mselab/multigraph.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <utility>

#include "mselab/error.hpp"

namespace mselab {

namespace {

constexpr std::array<std::pair<InternalRole, std::string_view>, 10> kRoleNames{{
    {InternalRole::kChain, "chain"},
    {InternalRole::kBundle, "bundle"},
    {InternalRole::kJoint, "joint"},
    {InternalRole::kEntryRail, "entry_rail"},
    {InternalRole::kExitRail, "exit_rail"},
    {InternalRole::kRainbowChain, "rainbow_chain"},
    {InternalRole::kSubdivision, "subdivision"},
    {InternalRole::kConnectorIn, "connector_in"},
    {InternalRole::kConnectorOut, "connector_out"},
    {InternalRole::kConnectorChain, "connector_chain"},
}};

}  // namespace

std::string_view to_string(InternalRole role) {
  for (const auto& [r, name] : kRoleNames) {
    if (r == role) return name;
  }
  return "unknown";
}

InternalRole internal_role_from_string(std::string_view name) {
  for (const auto& [r, n] : kRoleNames) {
    if (n == name) return r;
  }
  throw ParseError("unknown internal vertex role '" + std::string(name) + "'");
}

std::string describe(const Label& label) {
  std::ostringstream os;
  std::visit(
      [&os](const auto& l) {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, GridVertex>) {
          os << '(' << l.row << ',' << l.col << ')';
        } else if constexpr (std::is_same_v<T, Terminal>) {
          os << (l.which == TerminalKind::kSource ? "s" : "t");
        } else if constexpr (std::is_same_v<T, GadgetInternal>) {
          os << to_string(l.role) << '#' << l.ordinal;
        } else if constexpr (std::is_same_v<T, TreeNode>) {
          os << "tree[" << l.depth << ',' << l.index << ']';
        }
      },
      label);
  return os.str();
}

VertexId MultiGraph::add_vertex(Label label) {
  const VertexId v = vertex_id(vertex_alive_.size());
  vertex_alive_.push_back(true);
  labels_.push_back(std::move(label));
  rotation_.emplace_back();
  ++live_vertices_;
  return v;
}

EdgeId MultiGraph::add_edge(VertexId a, VertexId b, bool directed) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) {
    std::ostringstream os;
    os << "loop at " << a << " rejected";
    throw GraphError(os.str());
  }
  const EdgeId e = edge_id(edges_.size());
  edges_.push_back(Edge{a, b, directed});
  edge_alive_.push_back(true);
  rotation_[index_of(a)].push_back(e);
  rotation_[index_of(b)].push_back(e);
  ++live_edges_;
  return e;
}

void MultiGraph::remove_edge(EdgeId e) {
  check_edge(e);
  const Edge ed = edges_[index_of(e)];
  for (VertexId v : {ed.a, ed.b}) {
    auto& rot = rotation_[index_of(v)];
    std::erase(rot, e);
  }
  edges_[index_of(e)] = Edge{};
  edge_alive_[index_of(e)] = false;
  --live_edges_;
}

void MultiGraph::remove_vertex(VertexId v) {
  check_vertex(v);
  if (!rotation_[index_of(v)].empty()) {
    std::ostringstream os;
    os << "cannot remove " << v << ": it still has " << rotation_[index_of(v)].size()
       << " incident edges";
    throw GraphError(os.str());
  }
  vertex_alive_[index_of(v)] = false;
  labels_[index_of(v)] = Label{};
  --live_vertices_;
}

void MultiGraph::reattach(EdgeId e, VertexId from, VertexId to) {
  check_edge(e);
  check_vertex(to);
  Edge& ed = edges_[index_of(e)];
  VertexId& slot = ed.a == from ? ed.a : ed.b;
  if (slot != from) {
    std::ostringstream os;
    os << e << " is not incident to " << from;
    throw GraphError(os.str());
  }
  if ((ed.a == from ? ed.b : ed.a) == to) throw GraphError("reattach would create a loop");
  std::erase(rotation_[index_of(from)], e);
  slot = to;
  rotation_[index_of(to)].push_back(e);
}

void MultiGraph::set_rotation(VertexId v, std::vector<EdgeId> order) {
  check_vertex(v);
  rotation_[index_of(v)] = std::move(order);
}

void MultiGraph::replace_in_rotation(VertexId v, std::span<const EdgeId> block,
                                     std::span<const EdgeId> replacement) {
  check_vertex(v);
  auto& rot = rotation_[index_of(v)];
  const std::size_t deg = rot.size();
  if (block.empty() || block.size() > deg) throw GraphError("invalid rotation block");
  std::vector<bool> in_block(deg, false);
  std::size_t found = 0;
  for (std::size_t i = 0; i < deg; ++i) {
    if (std::find(block.begin(), block.end(), rot[i]) != block.end()) {
      in_block[i] = true;
      ++found;
    }
  }
  if (found != block.size()) {
    std::ostringstream os;
    os << "rotation block not present at " << v;
    throw GraphError(os.str());
  }
  // Start of the run: a block position whose cyclic predecessor is outside.
  std::size_t start = deg;
  for (std::size_t i = 0; i < deg; ++i) {
    if (in_block[i] && (found == deg || !in_block[(i + deg - 1) % deg])) {
      start = i;
      break;
    }
  }
  for (std::size_t step = 0; step < found; ++step) {
    if (!in_block[(start + step) % deg]) {
      std::ostringstream os;
      os << "rotation block at " << v << " is not contiguous";
      throw GraphError(os.str());
    }
  }
  std::vector<EdgeId> next;
  next.reserve(deg - found + replacement.size());
  next.insert(next.end(), replacement.begin(), replacement.end());
  for (std::size_t step = found; step < deg; ++step) next.push_back(rot[(start + step) % deg]);
  rot = std::move(next);
}

std::pair<VertexId, EdgeId> MultiGraph::subdivide_edge(EdgeId e, Label midpoint_label) {
  check_edge(e);
  const Edge old = edges_[index_of(e)];
  const VertexId x = add_vertex(std::move(midpoint_label));
  const EdgeId second = edge_id(edges_.size());
  edges_.push_back(Edge{x, old.b, old.directed});
  edge_alive_.push_back(true);
  ++live_edges_;
  edges_[index_of(e)].b = x;
  auto& rot_b = rotation_[index_of(old.b)];
  *std::find(rot_b.begin(), rot_b.end(), e) = second;
  rotation_[index_of(x)] = {e, second};
  return {x, second};
}

void MultiGraph::set_directed(EdgeId e, bool directed) {
  check_edge(e);
  edges_[index_of(e)].directed = directed;
}

void MultiGraph::set_label(VertexId v, Label label) {
  check_vertex(v);
  labels_[index_of(v)] = std::move(label);
}

void MultiGraph::extend_bounds(std::size_t vertex_bound, std::size_t edge_bound) {
  if (vertex_bound > vertex_alive_.size()) {
    vertex_alive_.resize(vertex_bound, false);
    labels_.resize(vertex_bound);
    rotation_.resize(vertex_bound);
  }
  if (edge_bound > edges_.size()) {
    edges_.resize(edge_bound);
    edge_alive_.resize(edge_bound, false);
  }
}

bool operator==(const MultiGraph& x, const MultiGraph& y) {
  if (x.live_vertices_ != y.live_vertices_ || x.live_edges_ != y.live_edges_) return false;
  const auto xv = x.vertices();
  if (xv != y.vertices()) return false;
  for (VertexId v : xv) {
    if (x.label(v) != y.label(v)) return false;
    const auto rx = x.rotation(v);
    const auto ry = y.rotation(v);
    if (!std::equal(rx.begin(), rx.end(), ry.begin(), ry.end())) return false;
  }
  const auto xe = x.edges();
  if (xe != y.edges()) return false;
  for (EdgeId e : xe) {
    if (x.edge(e) != y.edge(e)) return false;
  }
  return true;
}

void MultiGraph::reserve(std::size_t vertices, std::size_t edges) {
  vertex_alive_.reserve(vertex_alive_.size() + vertices);
  labels_.reserve(labels_.size() + vertices);
  rotation_.reserve(rotation_.size() + vertices);
  edges_.reserve(edges_.size() + edges);
  edge_alive_.reserve(edge_alive_.size() + edges);
}

bool MultiGraph::has_vertex(VertexId v) const {
  return index_of(v) < vertex_alive_.size() && vertex_alive_[index_of(v)];
}

bool MultiGraph::has_edge(EdgeId e) const {
  return index_of(e) < edge_alive_.size() && edge_alive_[index_of(e)];
}

const Edge& MultiGraph::edge(EdgeId e) const {
  check_edge(e);
  return edges_[index_of(e)];
}

VertexId MultiGraph::other_end(EdgeId e, VertexId v) const {
  const Edge& ed = edge(e);
  if (ed.a == v) return ed.b;
  if (ed.b == v) return ed.a;
  std::ostringstream os;
  os << e << " is not incident to " << v;
  throw GraphError(os.str());
}

std::span<const EdgeId> MultiGraph::rotation(VertexId v) const {
  check_vertex(v);
  return rotation_[index_of(v)];
}

const Label& MultiGraph::label(VertexId v) const {
  check_vertex(v);
  return labels_[index_of(v)];
}

std::vector<VertexId> MultiGraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(live_vertices_);
  for (std::size_t i = 0; i < vertex_alive_.size(); ++i) {
    if (vertex_alive_[i]) out.push_back(vertex_id(i));
  }
  return out;
}

std::vector<EdgeId> MultiGraph::edges() const {
  std::vector<EdgeId> out;
  out.reserve(live_edges_);
  for (std::size_t i = 0; i < edge_alive_.size(); ++i) {
    if (edge_alive_[i]) out.push_back(edge_id(i));
  }
  return out;
}

bool MultiGraph::any_directed() const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edge_alive_[i] && edges_[i].directed) return true;
  }
  return false;
}

void MultiGraph::validate() const {
  // seen[e]: bit 1 = listed at endpoint a, bit 2 = listed at endpoint b.
  std::vector<std::uint8_t> seen(edges_.size(), 0);
  for (std::size_t vi = 0; vi < vertex_alive_.size(); ++vi) {
    const VertexId v = vertex_id(vi);
    if (!vertex_alive_[vi]) {
      if (!rotation_[vi].empty()) throw GraphError("removed vertex has a rotation");
      continue;
    }
    for (EdgeId e : rotation_[vi]) {
      std::ostringstream os;
      if (!has_edge(e)) {
        os << "rotation of " << v << " lists unknown edge " << e;
        throw GraphError(os.str());
      }
      const Edge& ed = edges_[index_of(e)];
      if (ed.a != v && ed.b != v) {
        os << "rotation of " << v << " lists non-incident edge " << e;
        throw GraphError(os.str());
      }
      const std::uint8_t bit = ed.a == v ? 1 : 2;
      if (seen[index_of(e)] & bit) {
        os << "edge " << e << " appears twice in the rotation of " << v;
        throw GraphError(os.str());
      }
      seen[index_of(e)] |= bit;
    }
  }
  for (std::size_t ei = 0; ei < edges_.size(); ++ei) {
    if (!edge_alive_[ei]) continue;
    const Edge& ed = edges_[ei];
    std::ostringstream os;
    if (!has_vertex(ed.a) || !has_vertex(ed.b)) {
      os << "edge " << edge_id(ei) << " has a removed endpoint";
      throw GraphError(os.str());
    }
    if (ed.a == ed.b) {
      os << "edge " << edge_id(ei) << " is a loop";
      throw GraphError(os.str());
    }
    if (seen[ei] != 3) {
      os << "edge " << edge_id(ei) << " is missing from the rotation of "
         << ((seen[ei] & 1) ? ed.b : ed.a);
      throw GraphError(os.str());
    }
  }
}

void MultiGraph::check_vertex(VertexId v) const {
  if (!has_vertex(v)) {
    std::ostringstream os;
    os << "unknown vertex " << v;
    throw GraphError(os.str());
  }
}

void MultiGraph::check_edge(EdgeId e) const {
  if (!has_edge(e)) {
    std::ostringstream os;
    os << "unknown edge " << e;
    throw GraphError(os.str());
  }
}

Compaction compact(const MultiGraph& g) {
  Compaction out;
  out.vertex_map.assign(g.vertex_bound(), kNoVertex);
  out.edge_map.assign(g.edge_bound(), kNoEdge);
  out.graph.reserve(g.vertex_count(), g.edge_count());
  for (VertexId v : g.vertices()) {
    out.vertex_map[index_of(v)] = out.graph.add_vertex(g.label(v));
  }
  for (EdgeId e : g.edges()) {
    const Edge& ed = g.edge(e);
    out.edge_map[index_of(e)] = out.graph.add_edge(out.vertex_map[index_of(ed.a)],
                                                   out.vertex_map[index_of(ed.b)], ed.directed);
  }
  for (VertexId v : g.vertices()) {
    std::vector<EdgeId> rot;
    rot.reserve(g.degree(v));
    for (EdgeId e : g.rotation(v)) rot.push_back(out.edge_map[index_of(e)]);
    out.graph.set_rotation(out.vertex_map[index_of(v)], std::move(rot));
  }
  return out;
}

}  // namespace mselab
