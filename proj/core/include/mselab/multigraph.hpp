#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "mselab/ids.hpp"

namespace mselab {

enum class TerminalKind : std::uint8_t { kSource, kSink };

// Role of a vertex created inside a gadget or by a graph transformation.
enum class InternalRole : std::uint8_t {
  kChain,           // interior vertex of a plain chain
  kBundle,          // interior vertex of a bundle chain
  kJoint,           // shaft/bundle junction of a feather
  kEntryRail,       // first rail of a rainbow
  kExitRail,        // second rail of a rainbow
  kRainbowChain,    // interior vertex of a rainbow chain
  kSubdivision,     // midpoint created by subdivision; ordinal = parent edge
  kConnectorIn,     // a_vw of a directed vertical connector
  kConnectorOut,    // b_vw of a directed vertical connector
  kConnectorChain,  // interior vertex of a connector chain
};

std::string_view to_string(InternalRole role);
InternalRole internal_role_from_string(std::string_view name);

struct GridVertex {
  int row = 0;
  int col = 0;
  friend bool operator==(const GridVertex&, const GridVertex&) = default;
};

struct Terminal {
  TerminalKind which = TerminalKind::kSource;
  friend bool operator==(const Terminal&, const Terminal&) = default;
};

struct GadgetInternal {
  InternalRole role = InternalRole::kChain;
  std::uint32_t ordinal = 0;
  friend bool operator==(const GadgetInternal&, const GadgetInternal&) = default;
};

struct TreeNode {
  int depth = 0;
  int index = 0;
  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

using Label = std::variant<std::monostate, GridVertex, Terminal, GadgetInternal, TreeNode>;

std::string describe(const Label& label);

struct Edge {
  VertexId a = kNoVertex;
  VertexId b = kNoVertex;
  bool directed = false;  // a -> b when set

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Multigraph with an embedded rotation system.
//
// The rotation of a vertex is the cyclic order of its incident edges and is
// also the incidence list: degree(v) == rotation(v).size(). Parallel edges
// are distinct ids; loops are rejected. Removed vertices and edges leave
// tombstones so ids stay stable.
class MultiGraph {
 public:
  MultiGraph() = default;

  VertexId add_vertex(Label label = {});

  // Appends the new edge to the end of both endpoint rotations.
  EdgeId add_edge(VertexId a, VertexId b, bool directed = false);

  // Drops the edge and erases it from its endpoints' rotations.
  void remove_edge(EdgeId e);

  // The vertex must have no incident edges.
  void remove_vertex(VertexId v);

  // Moves the `from` endpoint of `e` to `to`. The edge leaves from's
  // rotation and is appended to to's rotation.
  void reattach(EdgeId e, VertexId from, VertexId to);

  // Replaces the rotation of `v`. The order must list every incident edge
  // exactly once; validate() checks this globally.
  void set_rotation(VertexId v, std::vector<EdgeId> order);

  // Replaces a cyclically contiguous run of `block` edges in v's rotation by
  // `replacement`. Throws GraphError if the block is not contiguous.
  void replace_in_rotation(VertexId v, std::span<const EdgeId> block,
                           std::span<const EdgeId> replacement);

  // Splits e = (a, b) in place: e becomes (a, x) and a fresh edge (x, b)
  // takes e's slot in b's rotation. Returns the midpoint and the new edge.
  std::pair<VertexId, EdgeId> subdivide_edge(EdgeId e, Label midpoint_label);

  void set_directed(EdgeId e, bool directed);
  void set_label(VertexId v, Label label);

  // Grows the id space with removed placeholders so the next allocated ids
  // are at least the given bounds. Used to restore ids on import.
  void extend_bounds(std::size_t vertex_bound, std::size_t edge_bound);

  // Reserve storage for the given number of additional elements.
  void reserve(std::size_t vertices, std::size_t edges);

  std::size_t vertex_count() const { return live_vertices_; }
  std::size_t edge_count() const { return live_edges_; }
  // One past the largest id ever allocated.
  std::size_t vertex_bound() const { return vertex_alive_.size(); }
  std::size_t edge_bound() const { return edges_.size(); }

  bool has_vertex(VertexId v) const;
  bool has_edge(EdgeId e) const;

  const Edge& edge(EdgeId e) const;
  VertexId other_end(EdgeId e, VertexId v) const;
  std::span<const EdgeId> rotation(VertexId v) const;
  std::size_t degree(VertexId v) const { return rotation(v).size(); }
  const Label& label(VertexId v) const;

  std::vector<VertexId> vertices() const;
  std::vector<EdgeId> edges() const;
  bool any_directed() const;

  // Throws GraphError describing the first inconsistency found.
  void validate() const;

  // Compares live vertices, labels, live edges and rotations by id.
  friend bool operator==(const MultiGraph& x, const MultiGraph& y);

 private:
  void check_vertex(VertexId v) const;
  void check_edge(EdgeId e) const;

  std::vector<Edge> edges_;
  std::vector<bool> edge_alive_;
  std::vector<bool> vertex_alive_;
  std::vector<Label> labels_;
  std::vector<std::vector<EdgeId>> rotation_;
  std::size_t live_vertices_ = 0;
  std::size_t live_edges_ = 0;
};

// Dense renumbering of a graph with tombstones. Maps are indexed by old id
// and hold kNoVertex / kNoEdge for dropped ids.
struct Compaction {
  MultiGraph graph;
  std::vector<VertexId> vertex_map;
  std::vector<EdgeId> edge_map;
};
Compaction compact(const MultiGraph& g);

}  // namespace mselab
