#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "mselab/mse_instance.hpp"

namespace mselab {

// An s-t route as alternating vertices and edges.
struct Route {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  friend bool operator==(const Route&, const Route&) = default;
};

struct RouteSet {
  std::vector<Route> routes;
  friend bool operator==(const RouteSet&, const RouteSet&) = default;
};

struct SharedEdgeReport {
  std::vector<EdgeId> shared;          // usage >= 2, increasing id
  std::int64_t count = 0;              // shared.size()
  std::map<EdgeId, std::int64_t> usage;  // routes using each edge
};

SharedEdgeReport shared_edges(const RouteSet& routes);

struct RouteVerdict {
  bool accepted = false;
  std::string reason;  // empty when accepted
  SharedEdgeReport report;
};

// Accepts iff there are exactly p routes, each a simple s-t path that
// follows edge directions, and at most k edges are shared.
RouteVerdict verify_routes(const MseInstance& inst, const RouteSet& routes);

// {"routes": [[vertex ids]], "edges": [[edge ids]]}
nlohmann::ordered_json routes_to_json(const RouteSet& routes);

// The "edges" array is optional. Without it each step takes the
// lowest-id edge usable from the first vertex to the second, so `g` must
// be given.
RouteSet routes_from_json(const nlohmann::json& doc, const MultiGraph* g = nullptr);

// {"shared": [edge ids], "count": n}
nlohmann::ordered_json report_to_json(const SharedEdgeReport& report);

}  // namespace mselab
