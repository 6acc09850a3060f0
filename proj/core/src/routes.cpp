#include "mselab/routes.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "mselab/error.hpp"

namespace mselab {

using nlohmann::ordered_json;

SharedEdgeReport shared_edges(const RouteSet& routes) {
  SharedEdgeReport report;
  for (const Route& r : routes.routes) {
    // An edge repeated inside one route still counts once for that route.
    std::vector<EdgeId> seen(r.edges);
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (EdgeId e : seen) ++report.usage[e];
  }
  for (const auto& [e, uses] : report.usage) {
    if (uses >= 2) report.shared.push_back(e);
  }
  report.count = static_cast<std::int64_t>(report.shared.size());
  return report;
}

namespace {

std::string check_route(const MultiGraph& g, VertexId s, VertexId t, const Route& r) {
  std::ostringstream os;
  if (r.vertices.empty()) return "empty route";
  if (r.vertices.size() != r.edges.size() + 1) {
    os << "has " << r.vertices.size() << " vertices but " << r.edges.size() << " edges";
    return os.str();
  }
  if (r.vertices.front() != s) {
    os << "starts at " << r.vertices.front() << " instead of s = " << s;
    return os.str();
  }
  if (r.vertices.back() != t) {
    os << "ends at " << r.vertices.back() << " instead of t = " << t;
    return os.str();
  }
  std::unordered_set<std::uint32_t> visited;
  for (std::size_t i = 0; i < r.vertices.size(); ++i) {
    const VertexId v = r.vertices[i];
    if (!g.has_vertex(v)) {
      os << "step " << i << ": unknown vertex " << v;
      return os.str();
    }
    if (!visited.insert(static_cast<std::uint32_t>(v)).second) {
      os << "step " << i << ": revisits " << v << " (routes must be simple paths)";
      return os.str();
    }
    if (i == 0) continue;
    const EdgeId e = r.edges[i - 1];
    const VertexId u = r.vertices[i - 1];
    if (!g.has_edge(e)) {
      os << "step " << i << ": unknown edge " << e;
      return os.str();
    }
    const Edge& ed = g.edge(e);
    const bool forward = ed.a == u && ed.b == v;
    const bool backward = ed.b == u && ed.a == v;
    if (!forward && !backward) {
      os << "step " << i << ": edge " << e << " does not join " << u << " and " << v;
      return os.str();
    }
    if (ed.directed && !forward) {
      os << "step " << i << ": edge " << e << " is directed against the route";
      return os.str();
    }
  }
  return {};
}

}  // namespace

RouteVerdict verify_routes(const MseInstance& inst, const RouteSet& routes) {
  RouteVerdict verdict;
  verdict.report = shared_edges(routes);
  std::ostringstream os;
  const auto count = static_cast<std::int64_t>(routes.routes.size());
  if (count != inst.p) {
    os << "wrong route count: got " << count << ", expected " << inst.p;
    verdict.reason = os.str();
    return verdict;
  }
  for (std::size_t i = 0; i < routes.routes.size(); ++i) {
    const std::string problem = check_route(inst.graph, inst.s, inst.t, routes.routes[i]);
    if (!problem.empty()) {
      os << "route " << i << ": " << problem;
      verdict.reason = os.str();
      return verdict;
    }
  }
  if (verdict.report.count > inst.k) {
    os << "shared " << verdict.report.count << " edges, exceeding the budget " << inst.k << " by "
       << verdict.report.count - inst.k;
    verdict.reason = os.str();
    return verdict;
  }
  verdict.accepted = true;
  return verdict;
}

ordered_json routes_to_json(const RouteSet& routes) {
  ordered_json vertices = ordered_json::array();
  ordered_json edges = ordered_json::array();
  for (const Route& r : routes.routes) {
    ordered_json vs = ordered_json::array();
    for (VertexId v : r.vertices) vs.push_back(index_of(v));
    vertices.push_back(std::move(vs));
    ordered_json es = ordered_json::array();
    for (EdgeId e : r.edges) es.push_back(index_of(e));
    edges.push_back(std::move(es));
  }
  return ordered_json{{"routes", std::move(vertices)}, {"edges", std::move(edges)}};
}

namespace {

EdgeId lowest_edge_between(const MultiGraph& g, VertexId u, VertexId v) {
  EdgeId best = kNoEdge;
  if (!g.has_vertex(u) || !g.has_vertex(v)) return best;
  for (EdgeId e : g.rotation(u)) {
    const Edge& ed = g.edge(e);
    if (ed.directed && ed.a != u) continue;
    if (g.other_end(e, u) == v && (best == kNoEdge || e < best)) best = e;
  }
  return best;
}

}  // namespace

RouteSet routes_from_json(const nlohmann::json& doc, const MultiGraph* g) {
  RouteSet out;
  try {
    const auto& vertices = doc.at("routes");
    const bool with_edges = doc.contains("edges");
    if (with_edges && doc.at("edges").size() != vertices.size()) {
      throw ParseError("\"edges\" and \"routes\" list different numbers of routes");
    }
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      Route r;
      for (const auto& v : vertices.at(i)) r.vertices.push_back(vertex_id(v.get<std::size_t>()));
      if (with_edges) {
        for (const auto& e : doc.at("edges").at(i)) r.edges.push_back(edge_id(e.get<std::size_t>()));
      } else {
        if (g == nullptr) throw ParseError("routes without edge ids need the instance graph");
        for (std::size_t j = 1; j < r.vertices.size(); ++j) {
          const EdgeId e = lowest_edge_between(*g, r.vertices[j - 1], r.vertices[j]);
          if (e == kNoEdge) {
            std::ostringstream os;
            os << "route " << i << ": no edge joins " << r.vertices[j - 1] << " and "
               << r.vertices[j];
            throw ParseError(os.str());
          }
          r.edges.push_back(e);
        }
      }
      out.routes.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed routes JSON: ") + ex.what());
  }
  return out;
}

ordered_json report_to_json(const SharedEdgeReport& report) {
  ordered_json shared = ordered_json::array();
  for (EdgeId e : report.shared) shared.push_back(index_of(e));
  return ordered_json{{"shared", std::move(shared)}, {"count", report.count}};
}

}  // namespace mselab
