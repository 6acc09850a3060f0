#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "mselab/multigraph.hpp"

namespace mselab {

enum class ExportFormat { kDot, kJson };

// Accepts "dot" or "json"; throws ParseError otherwise.
ExportFormat parse_export_format(std::string_view name);

// JSON schema (keys in this order):
//   {"vertices": [{"id", "label"}], "edges": [{"id", "a", "b", "directed"}],
//    "rotation": {"<vertex id>": [edge ids]}}
nlohmann::ordered_json graph_to_json(const MultiGraph& g);
MultiGraph graph_from_json(const nlohmann::json& doc);

nlohmann::ordered_json label_to_json(const Label& label);
Label label_from_json(const nlohmann::json& doc);

// DOT uses `graph`/`--` for undirected graphs and `digraph`/`->` otherwise,
// with dir=none on undirected edges of mixed graphs. Grid vertices carry
// row/col attributes.
std::string export_graph(const MultiGraph& g, ExportFormat format);
MultiGraph import_graph_json(std::string_view text);

}  // namespace mselab
