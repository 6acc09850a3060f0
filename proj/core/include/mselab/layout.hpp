#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mselab/ids.hpp"
#include "mselab/vc_instance.hpp"

namespace mselab {

enum class Stage : std::uint8_t { kFixture, kBase, kSubdivided, kRainbow, kTree, kDirected };

std::string_view to_string(Stage stage);
Stage stage_from_string(std::string_view name);

// Which connection of the construction an edge belongs to.
enum class Connection : std::uint8_t {
  kSourceFeather,  // s to (row, 1); col = 0
  kSinkFeather,    // (row, m + 1) to t; col = m + 1
  kHorizontal,     // (row, col) to (row, col + 1)
  kVertical,       // (row, col) to (row + 1, col)
  kValidation,     // col = 0: s to (1, 1); col = m + 1: (n, m + 1) to t
  kSourceTree,
  kSinkTree,
};

enum class Part : std::uint8_t {
  kPlain,
  kShaft,
  kBundleChain,   // index = chain
  kChain,
  kEntryRail,     // index = rail position
  kExitRail,
  kRainbowChain,  // index = chain
  kTree,          // row = depth of the child node, index = heap index of the child
  kConnectorArc,  // index 0..3: v->a, w->a, b->v, b->w
  kConnectorChain,
};

std::string_view to_string(Connection c);
std::string_view to_string(Part p);

struct EdgeRole {
  Connection conn = Connection::kHorizontal;
  Part part = Part::kPlain;
  std::int32_t row = 0;
  std::int32_t col = 0;
  std::int32_t index = 0;

  bool same_connection(const EdgeRole& o) const {
    return conn == o.conn && row == o.row && col == o.col;
  }
  friend bool operator==(const EdgeRole&, const EdgeRole&) = default;
};

// An (M, d)-bundle of the construction, identified by its connection. Routes
// enter at `upstream` and leave at `downstream`.
struct BundleRecord {
  Connection conn = Connection::kHorizontal;
  std::int32_t row = 0;
  std::int32_t col = 0;
  VertexId upstream = kNoVertex;
  VertexId downstream = kNoVertex;
  std::int64_t chain_length = 0;
  bool rainbow = false;  // replaced by a rainbow
  friend bool operator==(const BundleRecord&, const BundleRecord&) = default;
};

struct Params {
  std::int64_t big_m = 0;    // M = 2(m + 1) + 2
  std::int64_t k_prime = 0;  // k' = k (m^3 + m + 1)
  std::int64_t p = 0;        // k M + (n - k) + 1
  friend bool operator==(const Params&, const Params&) = default;
};

// Provenance registry of a constructed instance.
struct LayoutMap {
  Stage stage = Stage::kBase;
  VcInstance vc;        // the instance that was reduced (after padding)
  int original_n = 0;   // vertex count before padding
  Params params;
  int rounds = 0;                     // subdivision rounds applied
  std::int64_t c_prime = 0;           // number of (M, .)-bundles
  std::int64_t budget = 0;            // current shared-edge budget
  std::int64_t rainbow_increment = 0; // 2 M c' once rainbows are in
  std::int64_t tree_increment = 0;    // 2 l once trees are in

  // grid[i - 1][j - 1] is grid vertex (i, j).
  std::vector<std::vector<VertexId>> grid;
  std::vector<int> row_of;  // VC vertex (1-based; slot 0 unused) -> row
  std::vector<int> col_of;  // VC edge e_j (1-based; slot 0 unused) -> column j + 1
  std::vector<BundleRecord> bundles;

  // Indexed by current edge id; empty for removed ids.
  std::vector<std::optional<EdgeRole>> roles;
  // Indexed by current edge id: the base-stage edge this one descends from,
  // or the first base edge of the connection it replaced. kNoEdge for tree
  // edges, which have no base ancestor.
  std::vector<EdgeId> origin;
  // Roles of the base-stage edges, indexed by base edge id.
  std::vector<EdgeRole> base_roles;
  std::vector<EdgeId> tree_edges;

  int rows() const { return vc.n; }
  int cols() const { return vc.m() + 1; }
  VertexId grid_vertex(int row, int col) const {
    return grid.at(static_cast<std::size_t>(row - 1)).at(static_cast<std::size_t>(col - 1));
  }
  const EdgeRole& role(EdgeId e) const { return roles.at(index_of(e)).value(); }
  bool has_role(EdgeId e) const {
    return index_of(e) < roles.size() && roles[index_of(e)].has_value();
  }
  // True when row's horizontal connection between col and col + 1 is a plain edge.
  bool plain_horizontal(int row, int col) const { return vc.incident(row, col - 1); }

  friend bool operator==(const LayoutMap&, const LayoutMap&) = default;
};

class MultiGraph;

// Every live edge has a role and every removed id has none; ancestry
// resolves to a base edge of the same connection (tree edges excepted);
// grid, bundle and terminal references name live vertices. Returns a
// description of the first violation, or an empty string.
std::string check_layout_totality(const MultiGraph& g, const LayoutMap& layout);

nlohmann::ordered_json layout_to_json(const LayoutMap& layout);
LayoutMap layout_from_json(const nlohmann::json& doc);

// 64-bit FNV-1a of the compact layout JSON, as 16 hex digits.
std::string layout_digest(const LayoutMap& layout);
std::string fnv1a_hex(std::string_view bytes);

}  // namespace mselab
