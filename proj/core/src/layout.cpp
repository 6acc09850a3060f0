#include "mselab/layout.hpp"

#include <array>
#include <cstdio>
#include <utility>

#include "mselab/error.hpp"
#include "mselab/multigraph.hpp"

namespace mselab {

using nlohmann::ordered_json;

namespace {

template <typename Enum, std::size_t N>
std::string_view name_of(const std::array<std::pair<Enum, std::string_view>, N>& table, Enum v) {
  for (const auto& [value, name] : table) {
    if (value == v) return name;
  }
  return "unknown";
}

template <typename Enum, std::size_t N>
Enum value_of(const std::array<std::pair<Enum, std::string_view>, N>& table,
              std::string_view name, const char* what) {
  for (const auto& [value, n] : table) {
    if (n == name) return value;
  }
  throw ParseError(std::string("unknown ") + what + " '" + std::string(name) + "'");
}

constexpr std::array<std::pair<Stage, std::string_view>, 6> kStages{{
    {Stage::kFixture, "fixture"},
    {Stage::kBase, "base"},
    {Stage::kSubdivided, "subdivided"},
    {Stage::kRainbow, "rainbow"},
    {Stage::kTree, "tree"},
    {Stage::kDirected, "directed"},
}};

constexpr std::array<std::pair<Connection, std::string_view>, 7> kConnections{{
    {Connection::kSourceFeather, "s_feather"},
    {Connection::kSinkFeather, "t_feather"},
    {Connection::kHorizontal, "horizontal"},
    {Connection::kVertical, "vertical"},
    {Connection::kValidation, "validation"},
    {Connection::kSourceTree, "s_tree"},
    {Connection::kSinkTree, "t_tree"},
}};

constexpr std::array<std::pair<Part, std::string_view>, 10> kParts{{
    {Part::kPlain, "plain"},
    {Part::kShaft, "shaft"},
    {Part::kBundleChain, "bundle_chain"},
    {Part::kChain, "chain"},
    {Part::kEntryRail, "entry_rail"},
    {Part::kExitRail, "exit_rail"},
    {Part::kRainbowChain, "rainbow_chain"},
    {Part::kTree, "tree"},
    {Part::kConnectorArc, "connector_arc"},
    {Part::kConnectorChain, "connector_chain"},
}};

std::int64_t id_or_null(const nlohmann::json& j) {
  return j.is_null() ? -1 : j.get<std::int64_t>();
}

}  // namespace

std::string_view to_string(Stage stage) { return name_of(kStages, stage); }
Stage stage_from_string(std::string_view name) { return value_of(kStages, name, "stage"); }
std::string_view to_string(Connection c) { return name_of(kConnections, c); }
std::string_view to_string(Part p) { return name_of(kParts, p); }

ordered_json layout_to_json(const LayoutMap& layout) {
  ordered_json doc;
  doc["stage"] = std::string(to_string(layout.stage));
  ordered_json vc;
  vc["n"] = layout.vc.n;
  vc["k"] = layout.vc.k;
  ordered_json vc_edges = ordered_json::array();
  for (const auto& [u, v] : layout.vc.edges) vc_edges.push_back({u, v});
  vc["edges"] = std::move(vc_edges);
  doc["vc"] = std::move(vc);
  doc["originalN"] = layout.original_n;
  doc["M"] = layout.params.big_m;
  doc["kPrime"] = layout.params.k_prime;
  doc["p"] = layout.params.p;
  doc["rounds"] = layout.rounds;
  doc["cPrime"] = layout.c_prime;
  doc["budget"] = layout.budget;
  doc["rainbowIncrement"] = layout.rainbow_increment;
  doc["treeIncrement"] = layout.tree_increment;
  ordered_json grid = ordered_json::array();
  for (const auto& row : layout.grid) {
    ordered_json r = ordered_json::array();
    for (VertexId v : row) r.push_back(index_of(v));
    grid.push_back(std::move(r));
  }
  doc["grid"] = std::move(grid);
  doc["rowOf"] = layout.row_of;
  doc["colOf"] = layout.col_of;
  ordered_json bundles = ordered_json::array();
  for (const auto& b : layout.bundles) {
    bundles.push_back({{"conn", std::string(to_string(b.conn))},
                       {"row", b.row},
                       {"col", b.col},
                       {"upstream", index_of(b.upstream)},
                       {"downstream", index_of(b.downstream)},
                       {"chainLength", b.chain_length},
                       {"rainbow", b.rainbow}});
  }
  doc["bundles"] = std::move(bundles);
  auto role_entry = [](const EdgeRole& r) {
    return ordered_json{std::string(to_string(r.conn)), std::string(to_string(r.part)), r.row,
                        r.col, r.index};
  };
  ordered_json base = ordered_json::array();
  for (const EdgeRole& r : layout.base_roles) base.push_back(role_entry(r));
  doc["baseRoles"] = std::move(base);
  // One entry per live edge: [id, origin|null, conn, part, row, col, index].
  ordered_json roles = ordered_json::array();
  for (std::size_t i = 0; i < layout.roles.size(); ++i) {
    if (!layout.roles[i]) continue;
    const EdgeId origin = i < layout.origin.size() ? layout.origin[i] : kNoEdge;
    ordered_json entry = {i, origin == kNoEdge ? ordered_json(nullptr)
                                                : ordered_json(index_of(origin))};
    for (auto& field : role_entry(*layout.roles[i])) entry.push_back(std::move(field));
    roles.push_back(std::move(entry));
  }
  doc["roles"] = std::move(roles);
  ordered_json tree = ordered_json::array();
  for (EdgeId e : layout.tree_edges) tree.push_back(index_of(e));
  doc["treeEdges"] = std::move(tree);
  return doc;
}

LayoutMap layout_from_json(const nlohmann::json& doc) {
  LayoutMap layout;
  try {
    layout.stage = stage_from_string(doc.at("stage").get<std::string>());
    const auto& vc = doc.at("vc");
    layout.vc.n = vc.at("n").get<int>();
    layout.vc.k = vc.at("k").get<int>();
    for (const auto& e : vc.at("edges")) {
      layout.vc.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    layout.original_n = doc.at("originalN").get<int>();
    layout.params.big_m = doc.at("M").get<std::int64_t>();
    layout.params.k_prime = doc.at("kPrime").get<std::int64_t>();
    layout.params.p = doc.at("p").get<std::int64_t>();
    layout.rounds = doc.at("rounds").get<int>();
    layout.c_prime = doc.at("cPrime").get<std::int64_t>();
    layout.budget = doc.at("budget").get<std::int64_t>();
    layout.rainbow_increment = doc.at("rainbowIncrement").get<std::int64_t>();
    layout.tree_increment = doc.at("treeIncrement").get<std::int64_t>();
    for (const auto& row : doc.at("grid")) {
      std::vector<VertexId> r;
      for (const auto& v : row) r.push_back(vertex_id(v.get<std::size_t>()));
      layout.grid.push_back(std::move(r));
    }
    layout.row_of = doc.at("rowOf").get<std::vector<int>>();
    layout.col_of = doc.at("colOf").get<std::vector<int>>();
    for (const auto& b : doc.at("bundles")) {
      BundleRecord rec;
      rec.conn = value_of(kConnections, b.at("conn").get<std::string>(), "connection");
      rec.row = b.at("row").get<std::int32_t>();
      rec.col = b.at("col").get<std::int32_t>();
      rec.upstream = vertex_id(b.at("upstream").get<std::size_t>());
      rec.downstream = vertex_id(b.at("downstream").get<std::size_t>());
      rec.chain_length = b.at("chainLength").get<std::int64_t>();
      rec.rainbow = b.at("rainbow").get<bool>();
      layout.bundles.push_back(rec);
    }
    auto read_role = [](const nlohmann::json& entry, std::size_t offset) {
      EdgeRole r;
      r.conn = value_of(kConnections, entry.at(offset).get<std::string>(), "connection");
      r.part = value_of(kParts, entry.at(offset + 1).get<std::string>(), "part");
      r.row = entry.at(offset + 2).get<std::int32_t>();
      r.col = entry.at(offset + 3).get<std::int32_t>();
      r.index = entry.at(offset + 4).get<std::int32_t>();
      return r;
    };
    for (const auto& entry : doc.at("baseRoles")) layout.base_roles.push_back(read_role(entry, 0));
    for (const auto& entry : doc.at("roles")) {
      const auto id = entry.at(0).get<std::size_t>();
      if (id >= layout.roles.size()) {
        layout.roles.resize(id + 1);
        layout.origin.resize(id + 1, kNoEdge);
      }
      layout.roles[id] = read_role(entry, 2);
      const auto origin = id_or_null(entry.at(1));
      layout.origin[id] = origin < 0 ? kNoEdge : edge_id(static_cast<std::size_t>(origin));
    }
    for (const auto& e : doc.at("treeEdges")) {
      layout.tree_edges.push_back(edge_id(e.get<std::size_t>()));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed layout JSON: ") + ex.what());
  }
  return layout;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

std::string check_layout_totality(const MultiGraph& g, const LayoutMap& layout) {
  auto fail = [](auto... parts) {
    std::string msg;
    ((msg += parts), ...);
    return msg;
  };
  if (layout.roles.size() < g.edge_bound()) return "role table shorter than edge id space";
  for (std::size_t i = 0; i < layout.roles.size(); ++i) {
    const EdgeId e = edge_id(i);
    const bool live = i < g.edge_bound() && g.has_edge(e);
    if (live != layout.roles[i].has_value()) {
      return fail("edge ", std::to_string(i), live ? " has no role" : " is removed but keeps a role");
    }
    if (!live) continue;
    const EdgeRole& r = *layout.roles[i];
    const EdgeId origin = i < layout.origin.size() ? layout.origin[i] : kNoEdge;
    const bool tree = r.conn == Connection::kSourceTree || r.conn == Connection::kSinkTree;
    if (tree) {
      if (origin != kNoEdge) return fail("tree edge ", std::to_string(i), " claims a base ancestor");
      continue;
    }
    if (origin == kNoEdge || index_of(origin) >= layout.base_roles.size()) {
      return fail("edge ", std::to_string(i), " has no base ancestor");
    }
    if (!layout.base_roles[index_of(origin)].same_connection(r)) {
      return fail("edge ", std::to_string(i), " and its ancestor belong to different connections");
    }
  }
  for (const auto& row : layout.grid) {
    for (VertexId v : row) {
      if (!g.has_vertex(v)) return "grid refers to a missing vertex";
    }
  }
  for (const auto& b : layout.bundles) {
    if (!g.has_vertex(b.upstream) || !g.has_vertex(b.downstream)) {
      return "bundle refers to a missing vertex";
    }
  }
  return {};
}

std::string layout_digest(const LayoutMap& layout) {
  return fnv1a_hex(layout_to_json(layout).dump());
}

}  // namespace mselab
