#include "mselab/canonical.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace mselab {

namespace {

using GroupKey = std::tuple<Connection, int, int, Part, int>;

class ConnectionIndex {
 public:
  ConnectionIndex(const MultiGraph& g, const LayoutMap& layout) : g_(g) {
    for (EdgeId e : g.edges()) {
      const EdgeRole& r = layout.role(e);
      const int chain = r.part == Part::kBundleChain ? r.index : 0;
      groups_[{r.conn, r.row, r.col, r.part, chain}].push_back(e);
    }
  }

  // Appends the path formed by the group's edges, starting at the route's
  // current end.
  void walk(Route& route, Connection conn, int row, int col, Part part, int chain = 0) const {
    const auto it = groups_.find({conn, row, col, part, chain});
    if (it == groups_.end()) {
      std::ostringstream os;
      os << "layout has no " << to_string(part) << " edges in " << to_string(conn) << " (" << row
         << ", " << col << ")";
      throw PreconditionError(os.str());
    }
    std::vector<EdgeId> rest = it->second;
    while (!rest.empty()) {
      const VertexId cur = route.vertices.back();
      auto next = std::find_if(rest.begin(), rest.end(), [&](EdgeId e) {
        const Edge& ed = g_.edge(e);
        return ed.a == cur || ed.b == cur;
      });
      if (next == rest.end()) throw PreconditionError("connection edges do not form a path");
      route.edges.push_back(*next);
      route.vertices.push_back(g_.other_end(*next, cur));
      rest.erase(next);
    }
  }

 private:
  const MultiGraph& g_;
  std::map<GroupKey, std::vector<EdgeId>> groups_;
};

}  // namespace

RouteSet build_canonical_routes(const MseInstance& inst, const LayoutMap& layout,
                                const std::vector<int>& cover) {
  if (layout.stage != Stage::kBase || inst.stage != Stage::kBase) {
    throw PreconditionError("canonical routes need a base-stage instance");
  }
  const VcInstance& vc = layout.vc;
  const int n = vc.n;
  const int m = vc.m();
  const int cols = m + 1;
  std::vector<bool> selected(static_cast<std::size_t>(n) + 1, false);
  for (int v : cover) {
    if (v < 1 || v > n) throw PreconditionError("cover vertex " + std::to_string(v) + " out of range");
    if (selected[v]) throw PreconditionError("cover lists vertex " + std::to_string(v) + " twice");
    selected[v] = true;
  }
  if (static_cast<int>(cover.size()) != vc.k) {
    throw PreconditionError("cover has " + std::to_string(cover.size()) + " vertices, expected k = " +
                            std::to_string(vc.k));
  }
  // Row crossed by the validation route in each column: the smallest
  // selected endpoint of e_j.
  std::vector<int> cross(static_cast<std::size_t>(m) + 1, 0);
  for (int j = 1; j <= m; ++j) {
    const auto [u, v] = vc.edges[j - 1];
    const int lo = std::min(u, v);
    const int hi = std::max(u, v);
    cross[j] = selected[lo] ? lo : selected[hi] ? hi : 0;
    if (cross[j] == 0) {
      std::ostringstream os;
      os << "cover leaves e" << j << " = {v" << u << ", v" << v << "} uncovered; column " << j + 1
         << " has no shared plain edge for the validation route";
      throw UncoveredColumn(j, j + 1, os.str());
    }
  }

  const ConnectionIndex index(inst.graph, layout);
  const auto big_m = static_cast<int>(layout.params.big_m);
  RouteSet out;
  for (int i = 1; i <= n; ++i) {
    const int copies = selected[i] ? big_m : 1;
    for (int c = 0; c < copies; ++c) {
      Route r;
      r.vertices.push_back(inst.s);
      index.walk(r, Connection::kSourceFeather, i, 0, Part::kShaft);
      index.walk(r, Connection::kSourceFeather, i, 0, Part::kBundleChain, c);
      for (int j = 1; j <= m; ++j) {
        if (layout.plain_horizontal(i, j)) {
          index.walk(r, Connection::kHorizontal, i, j, Part::kPlain);
        } else {
          index.walk(r, Connection::kHorizontal, i, j, Part::kShaft);
          index.walk(r, Connection::kHorizontal, i, j, Part::kBundleChain, c);
        }
      }
      index.walk(r, Connection::kSinkFeather, i, cols, Part::kBundleChain, c);
      index.walk(r, Connection::kSinkFeather, i, cols, Part::kShaft);
      out.routes.push_back(std::move(r));
    }
  }

  Route val;
  val.vertices.push_back(inst.s);
  index.walk(val, Connection::kValidation, 1, 0, Part::kChain);
  int row = 1;
  auto move_to = [&](int target, int col) {
    for (; row < target; ++row) index.walk(val, Connection::kVertical, row, col, Part::kChain);
    for (; row > target; --row) index.walk(val, Connection::kVertical, row - 1, col, Part::kChain);
  };
  for (int j = 1; j <= m; ++j) {
    move_to(cross[j], j);
    index.walk(val, Connection::kHorizontal, row, j, Part::kPlain);
  }
  move_to(n, cols);
  index.walk(val, Connection::kValidation, n, cols, Part::kChain);
  out.routes.push_back(std::move(val));
  return out;
}

namespace {

// Routes entering each source feather (index = row) and the source
// validation chain (index 0).
std::vector<int> source_loads(const MseInstance& inst, const LayoutMap& layout,
                              const RouteSet& routes) {
  std::vector<int> load(static_cast<std::size_t>(layout.vc.n) + 1, 0);
  for (const Route& r : routes.routes) {
    if (r.edges.empty()) continue;
    const EdgeRole& role = layout.role(r.edges.front());
    if (role.conn == Connection::kSourceFeather) {
      ++load.at(static_cast<std::size_t>(role.row));
    } else if (role.conn == Connection::kValidation) {
      ++load[0];
    }
  }
  (void)inst;
  return load;
}

}  // namespace

InvariantVerdict check_invariant_1(const MseInstance& inst, const LayoutMap& layout,
                                   const RouteSet& routes) {
  const auto load = source_loads(inst, layout, routes);
  const int big_m = static_cast<int>(layout.params.big_m);
  int heavy = 0;
  int single = 0;
  std::ostringstream os;
  os << "source feather loads:";
  for (int i = 1; i <= layout.vc.n; ++i) {
    os << ' ' << load[i];
    if (load[i] == big_m) ++heavy;
    else if (load[i] == 1) ++single;
  }
  os << "; validation chain load " << load[0];
  InvariantVerdict v;
  v.pass = heavy == layout.vc.k && single == layout.vc.n - layout.vc.k && load[0] == 1;
  if (!v.pass) {
    os << "; expected " << layout.vc.k << " feathers with " << big_m << " routes, "
       << layout.vc.n - layout.vc.k << " with one, and one validation route";
  }
  v.details = os.str();
  return v;
}

InvariantVerdict check_invariant_2(const MseInstance& inst, const LayoutMap& layout,
                                   const RouteSet& routes) {
  const auto load = source_loads(inst, layout, routes);
  const int big_m = static_cast<int>(layout.params.big_m);
  const int m = layout.vc.m();
  const SharedEdgeReport report = shared_edges(routes);
  std::vector<int> in_row(static_cast<std::size_t>(layout.vc.n) + 1, 0);
  std::ostringstream stray;
  for (EdgeId e : report.shared) {
    const EdgeRole& r = layout.role(e);
    const bool row_conn = r.conn == Connection::kHorizontal || r.conn == Connection::kSinkFeather;
    if (row_conn && load.at(static_cast<std::size_t>(r.row)) == big_m) {
      ++in_row[r.row];
    } else if (r.conn == Connection::kSourceFeather && load.at(static_cast<std::size_t>(r.row)) == big_m) {
      // shaft of a selected row
    } else if (stray.tellp() == 0) {
      stray << "shared edge " << e << " lies in " << to_string(r.conn) << " (" << r.row << ", "
            << r.col << ")";
    }
  }
  InvariantVerdict v;
  v.pass = stray.tellp() == 0;
  std::ostringstream os;
  int selected = 0;
  for (int i = 1; i <= layout.vc.n; ++i) {
    if (load[i] != big_m) continue;
    ++selected;
    os << "row " << i << ": " << in_row[i] << " shared; ";
    if (in_row[i] != m + 1) v.pass = false;
  }
  if (selected == 0) os << "no selected rows; ";
  os << "expected " << m + 1 << " per selected row";
  if (stray.tellp() != 0) os << "; " << stray.str();
  v.details = os.str();
  return v;
}

}  // namespace mselab
