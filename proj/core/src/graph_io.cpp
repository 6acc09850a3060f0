#include "mselab/graph_io.hpp"

#include <sstream>

#include "mselab/error.hpp"

namespace mselab {

using nlohmann::ordered_json;

ExportFormat parse_export_format(std::string_view name) {
  if (name == "dot") return ExportFormat::kDot;
  if (name == "json") return ExportFormat::kJson;
  throw ParseError("unsupported export format '" + std::string(name) + "' (expected dot or json)");
}

ordered_json label_to_json(const Label& label) {
  return std::visit(
      [](const auto& l) -> ordered_json {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, GridVertex>) {
          return {{"kind", "grid"}, {"row", l.row}, {"col", l.col}};
        } else if constexpr (std::is_same_v<T, Terminal>) {
          return {{"kind", "terminal"}, {"which", l.which == TerminalKind::kSource ? "s" : "t"}};
        } else if constexpr (std::is_same_v<T, GadgetInternal>) {
          return {{"kind", "internal"}, {"role", std::string(to_string(l.role))},
                  {"ordinal", l.ordinal}};
        } else {
          return {{"kind", "tree"}, {"depth", l.depth}, {"index", l.index}};
        }
      },
      label);
}

Label label_from_json(const nlohmann::json& doc) {
  if (doc.is_null()) return std::monostate{};
  const std::string kind = doc.at("kind").get<std::string>();
  if (kind == "grid") return GridVertex{doc.at("row").get<int>(), doc.at("col").get<int>()};
  if (kind == "terminal") {
    const std::string which = doc.at("which").get<std::string>();
    if (which != "s" && which != "t") throw ParseError("terminal label must be s or t");
    return Terminal{which == "s" ? TerminalKind::kSource : TerminalKind::kSink};
  }
  if (kind == "internal") {
    return GadgetInternal{internal_role_from_string(doc.at("role").get<std::string>()),
                          doc.at("ordinal").get<std::uint32_t>()};
  }
  if (kind == "tree") return TreeNode{doc.at("depth").get<int>(), doc.at("index").get<int>()};
  throw ParseError("unknown label kind '" + kind + "'");
}

ordered_json graph_to_json(const MultiGraph& g) {
  ordered_json doc;
  ordered_json vertices = ordered_json::array();
  for (VertexId v : g.vertices()) {
    vertices.push_back({{"id", index_of(v)}, {"label", label_to_json(g.label(v))}});
  }
  ordered_json edges = ordered_json::array();
  for (EdgeId e : g.edges()) {
    const Edge& ed = g.edge(e);
    edges.push_back({{"id", index_of(e)},
                     {"a", index_of(ed.a)},
                     {"b", index_of(ed.b)},
                     {"directed", ed.directed}});
  }
  // Keys are unique by construction, so entries go straight into the
  // underlying vector instead of through the linear-time key lookup.
  ordered_json rotation = ordered_json::object();
  auto& slots = static_cast<std::vector<std::pair<const std::string, ordered_json>>&>(
      rotation.get_ref<ordered_json::object_t&>());
  slots.reserve(g.vertex_count());
  for (VertexId v : g.vertices()) {
    ordered_json order = ordered_json::array();
    for (EdgeId e : g.rotation(v)) order.push_back(index_of(e));
    slots.emplace_back(std::to_string(index_of(v)), std::move(order));
  }
  doc["vertices"] = std::move(vertices);
  doc["edges"] = std::move(edges);
  doc["rotation"] = std::move(rotation);
  return doc;
}

MultiGraph graph_from_json(const nlohmann::json& doc) {
  MultiGraph g;
  try {
    const auto& vertices = doc.at("vertices");
    const auto& edges = doc.at("edges");
    // Ids are preserved; gaps become removed placeholders.
    for (const auto& jv : vertices) {
      const std::size_t id = jv.at("id").get<std::size_t>();
      if (id < g.vertex_bound()) throw ParseError("vertex ids must be strictly increasing");
      g.extend_bounds(id, 0);
      g.add_vertex(label_from_json(jv.at("label")));
    }
    for (const auto& je : edges) {
      const std::size_t id = je.at("id").get<std::size_t>();
      if (id < g.edge_bound()) throw ParseError("edge ids must be strictly increasing");
      g.extend_bounds(0, id);
      const auto a = vertex_id(je.at("a").get<std::size_t>());
      const auto b = vertex_id(je.at("b").get<std::size_t>());
      if (!g.has_vertex(a) || !g.has_vertex(b)) {
        throw ParseError("edge " + std::to_string(id) + " references an unknown vertex");
      }
      g.add_edge(a, b, je.at("directed").get<bool>());
    }
    if (doc.contains("rotation")) {
      for (const auto& [key, order] : doc.at("rotation").items()) {
        const auto v = vertex_id(std::stoul(key));
        if (!g.has_vertex(v)) throw ParseError("rotation for unknown vertex " + key);
        std::vector<EdgeId> rot;
        rot.reserve(order.size());
        for (const auto& e : order) rot.push_back(edge_id(e.get<std::size_t>()));
        g.set_rotation(v, std::move(rot));
      }
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed graph JSON: ") + ex.what());
  } catch (const GraphError& ex) {
    throw ParseError(std::string("inconsistent graph JSON: ") + ex.what());
  }
  try {
    g.validate();
  } catch (const GraphError& ex) {
    throw ParseError(std::string("inconsistent graph JSON: ") + ex.what());
  }
  return g;
}

namespace {

std::string dot_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string to_dot(const MultiGraph& g) {
  const bool directed = g.any_directed();
  std::ostringstream os;
  os << (directed ? "digraph" : "graph") << " G {\n";
  for (VertexId v : g.vertices()) {
    const Label& label = g.label(v);
    os << "  v" << index_of(v) << " [label=\"" << dot_escape(describe(label)) << '"';
    if (const auto* grid = std::get_if<GridVertex>(&label)) {
      os << ", row=" << grid->row << ", col=" << grid->col;
    }
    os << "];\n";
  }
  const char* arrow = directed ? " -> " : " -- ";
  for (EdgeId e : g.edges()) {
    const Edge& ed = g.edge(e);
    os << "  v" << index_of(ed.a) << arrow << 'v' << index_of(ed.b) << " [id=\"e" << index_of(e)
       << '"';
    if (directed && !ed.directed) os << ", dir=none";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace

std::string export_graph(const MultiGraph& g, ExportFormat format) {
  switch (format) {
    case ExportFormat::kDot:
      return to_dot(g);
    case ExportFormat::kJson:
      return graph_to_json(g).dump(1) + "\n";
  }
  throw ParseError("unsupported export format");
}

MultiGraph import_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParseError(std::string("invalid JSON: ") + ex.what());
  }
  return graph_from_json(doc);
}

}  // namespace mselab
