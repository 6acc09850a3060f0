#include "mselab/oracles.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "mselab/error.hpp"
#include "mselab/max_flow.hpp"

namespace mselab {

namespace {

// Calls visit(subset) for subsets of {1..n} of the given size in
// lexicographic order until it returns true.
template <typename Visit>
bool for_each_subset(int n, int size, Visit&& visit) {
  if (size > n) return false;
  std::vector<int> pick(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) pick[i] = i + 1;
  while (true) {
    if (visit(pick)) return true;
    int i = size - 1;
    while (i >= 0 && pick[i] == n - size + i + 1) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

void check_vc_cap(const VcInstance& vc, int max_n) {
  if (vc.n > max_n) {
    throw CapExceeded("vertex cover brute force is capped at n = " + std::to_string(max_n) +
                      ", got n = " + std::to_string(vc.n));
  }
}

}  // namespace

std::optional<std::vector<int>> solve_vc_bruteforce(const VcInstance& vc, int max_n) {
  vc.validate();
  check_vc_cap(vc, max_n);
  std::optional<std::vector<int>> found;
  for (int size = 0; size <= vc.k && !found; ++size) {
    for_each_subset(vc.n, size, [&](const std::vector<int>& w) {
      if (!is_vertex_cover(vc, w)) return false;
      found = w;
      return true;
    });
  }
  return found;
}

std::vector<std::vector<int>> enumerate_covers(const VcInstance& vc, int size, int max_n) {
  check_vc_cap(vc, max_n);
  std::vector<std::vector<int>> covers;
  for_each_subset(vc.n, size, [&](const std::vector<int>& w) {
    if (is_vertex_cover(vc, w)) covers.push_back(w);
    return false;
  });
  return covers;
}

namespace {

struct FlowSetup {
  FlowNetwork network;
  std::vector<EdgeId> edges;  // network edge index -> graph edge
  std::size_t s = 0;
  std::size_t t = 0;
};

FlowSetup make_flow_setup(const MultiGraph& g, VertexId s, VertexId t) {
  FlowSetup setup{FlowNetwork(g.vertex_bound()), g.edges(), index_of(s), index_of(t)};
  for (EdgeId e : setup.edges) {
    const Edge& ed = g.edge(e);
    setup.network.add_edge(index_of(ed.a), index_of(ed.b), 1, !ed.directed);
  }
  return setup;
}

// Splits the current flow into `p` unit routes found by BFS over edges that
// still carry flow; each BFS path is simple.
RouteSet decompose(const MultiGraph& g, const FlowSetup& setup, FlowNetwork& net, std::int64_t p) {
  const std::size_t nodes = net.node_count();
  std::vector<std::int64_t> units(setup.edges.size());
  std::vector<std::vector<std::size_t>> out(nodes);  // edge indices by tail
  for (std::size_t i = 0; i < setup.edges.size(); ++i) {
    const std::int64_t f = net.flow(i);
    if (f == 0) continue;
    const Edge& ed = g.edge(setup.edges[i]);
    units[i] = f > 0 ? f : -f;
    out[index_of(f > 0 ? ed.a : ed.b)].push_back(i);
  }
  RouteSet routes;
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> via(nodes);
  std::vector<std::size_t> queue;
  for (std::int64_t r = 0; r < p; ++r) {
    std::fill(via.begin(), via.end(), kUnseen);
    via[setup.s] = kUnseen - 1;
    queue.assign(1, setup.s);
    for (std::size_t qi = 0; qi < queue.size() && via[setup.t] == kUnseen; ++qi) {
      const std::size_t u = queue[qi];
      for (std::size_t i : out[u]) {
        if (units[i] == 0) continue;
        const std::size_t v = index_of(g.other_end(setup.edges[i], vertex_id(u)));
        if (via[v] != kUnseen) continue;
        via[v] = i;
        queue.push_back(v);
      }
    }
    if (via[setup.t] == kUnseen) throw GraphError("flow decomposition lost a unit of flow");
    Route route;
    for (std::size_t v = setup.t; v != setup.s;) {
      const std::size_t i = via[v];
      --units[i];
      route.vertices.push_back(vertex_id(v));
      route.edges.push_back(setup.edges[i]);
      v = index_of(g.other_end(setup.edges[i], vertex_id(v)));
    }
    route.vertices.push_back(vertex_id(setup.s));
    std::reverse(route.vertices.begin(), route.vertices.end());
    std::reverse(route.edges.begin(), route.edges.end());
    routes.routes.push_back(std::move(route));
  }
  return routes;
}

bool feasible(FlowNetwork& net, const std::vector<std::size_t>& subset, std::size_t s,
              std::size_t t, std::int64_t p) {
  net.reset_flow();
  for (std::size_t i : subset) net.set_capacity(i, p);
  const bool ok = net.max_flow(s, t, p) >= p;
  for (std::size_t i : subset) net.set_capacity(i, 1);
  return ok;
}

// Searches the subsets of one size. Blocks are fixed prefixes of up to two
// indices in lexicographic order; the suffixes of a block are visited
// lexicographically, so the first hit in the lowest block is the overall
// lexicographic first.
std::optional<std::vector<std::size_t>> search_size(const FlowSetup& setup, std::size_t size,
                                                    std::int64_t p, unsigned jobs) {
  const std::size_t n = setup.edges.size();
  if (size > n) return std::nullopt;
  const std::size_t prefix_len = std::min<std::size_t>(size, 2);
  std::vector<std::vector<std::size_t>> prefixes;
  if (prefix_len == 0) {
    prefixes.emplace_back();
  } else if (prefix_len == 1) {
    for (std::size_t i = 0; i + size <= n; ++i) prefixes.push_back({i});
  } else {
    for (std::size_t i = 0; i + size <= n; ++i) {
      for (std::size_t j = i + 1; j + size - 1 <= n; ++j) prefixes.push_back({i, j});
    }
  }
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{kNone};
  std::vector<std::optional<std::vector<std::size_t>>> hits(prefixes.size());

  auto worker = [&]() {
    FlowNetwork net = setup.network;
    std::vector<std::size_t> subset(size);
    while (true) {
      const std::size_t block = next.fetch_add(1);
      if (block >= prefixes.size() || block > best.load()) return;
      const auto& prefix = prefixes[block];
      std::copy(prefix.begin(), prefix.end(), subset.begin());
      const std::size_t rest = size - prefix_len;
      const std::size_t base = prefix_len == 0 ? 0 : prefix.back() + 1;
      for (std::size_t i = 0; i < rest; ++i) subset[prefix_len + i] = base + i;
      while (true) {
        if (feasible(net, subset, setup.s, setup.t, p)) {
          hits[block] = subset;
          std::size_t cur = best.load();
          while (block < cur && !best.compare_exchange_weak(cur, block)) {
          }
          break;
        }
        // Next suffix in lexicographic order.
        std::size_t i = rest;
        while (i > 0 && subset[prefix_len + i - 1] == n - rest + i - 1) --i;
        if (i == 0) break;
        ++subset[prefix_len + i - 1];
        for (std::size_t j = i; j < rest; ++j) {
          subset[prefix_len + j] = subset[prefix_len + j - 1] + 1;
        }
      }
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(prefixes.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  const std::size_t b = best.load();
  if (b == kNone) return std::nullopt;
  return hits[b];
}

}  // namespace

MseVerdict solve_mse_exact_flow(const MseInstance& inst, const OracleLimits& limits) {
  inst.validate();
  const MultiGraph& g = inst.graph;
  if (g.edge_count() > limits.max_edges) {
    throw CapExceeded("flow oracle is capped at " + std::to_string(limits.max_edges) +
                      " edges, instance has " + std::to_string(g.edge_count()));
  }
  if (inst.k > limits.max_budget) {
    throw CapExceeded("flow oracle is capped at budget " + std::to_string(limits.max_budget) +
                      ", instance has k = " + std::to_string(inst.k));
  }
  FlowSetup setup = make_flow_setup(g, inst.s, inst.t);
  MseVerdict verdict;
  const auto max_size = std::min<std::size_t>(static_cast<std::size_t>(inst.k), setup.edges.size());
  for (std::size_t size = 0; size <= max_size; ++size) {
    auto subset = search_size(setup, size, inst.p, limits.jobs);
    if (!subset) continue;
    FlowNetwork net = setup.network;
    feasible(net, *subset, setup.s, setup.t, inst.p);
    verdict.yes = true;
    for (std::size_t i : *subset) verdict.shared_set.push_back(setup.edges[i]);
    verdict.routes = decompose(g, setup, net, inst.p);
    verdict.shared_count = shared_edges(verdict.routes).count;
    return verdict;
  }
  return verdict;
}

std::vector<Route> enumerate_simple_paths(const MultiGraph& g, VertexId s, VertexId t,
                                          std::size_t cap) {
  std::vector<Route> paths;
  std::vector<bool> on_path(g.vertex_bound(), false);
  Route cur;
  cur.vertices.push_back(s);
  on_path[index_of(s)] = true;
  // Iterative DFS: frame = (vertex, next rotation position).
  std::vector<std::pair<VertexId, std::size_t>> stack{{s, 0}};
  while (!stack.empty()) {
    auto& [v, pos] = stack.back();
    if (v == t) {
      paths.push_back(cur);
      if (paths.size() > cap) {
        throw CapExceeded("more than " + std::to_string(cap) + " simple s-t paths");
      }
    } else {
      const auto rot = g.rotation(v);
      bool descended = false;
      while (pos < rot.size()) {
        const EdgeId e = rot[pos++];
        const Edge& ed = g.edge(e);
        if (ed.directed && ed.a != v) continue;
        const VertexId w = g.other_end(e, v);
        if (on_path[index_of(w)]) continue;
        on_path[index_of(w)] = true;
        cur.vertices.push_back(w);
        cur.edges.push_back(e);
        stack.emplace_back(w, 0);
        descended = true;
        break;
      }
      if (descended) continue;
    }
    on_path[index_of(stack.back().first)] = false;
    stack.pop_back();
    cur.vertices.pop_back();
    if (!cur.edges.empty()) cur.edges.pop_back();
  }
  return paths;
}

MseVerdict solve_mse_exact_paths(const MseInstance& inst, const OracleLimits& limits) {
  inst.validate();
  if (inst.p > limits.max_routes) {
    throw CapExceeded("path oracle is capped at p = " + std::to_string(limits.max_routes) +
                      ", instance has p = " + std::to_string(inst.p));
  }
  const MultiGraph& g = inst.graph;
  const std::vector<Route> paths = enumerate_simple_paths(g, inst.s, inst.t, limits.max_paths);
  MseVerdict verdict;
  if (paths.empty()) return verdict;

  const auto p = static_cast<std::size_t>(inst.p);
  std::vector<int> usage(g.edge_bound(), 0);
  std::vector<std::size_t> pick(p);
  std::vector<std::size_t> best_pick;
  std::int64_t bound = inst.k;  // accept multisets sharing at most `bound` edges
  std::int64_t shared = 0;

  auto add = [&](std::size_t path, int delta) {
    for (EdgeId e : paths[path].edges) {
      int& u = usage[index_of(e)];
      if (delta > 0 && ++u == 2) ++shared;
      if (delta < 0 && u-- == 2) --shared;
    }
  };
  // Depth-first over nondecreasing index tuples with branch and bound.
  auto search = [&](auto&& self, std::size_t depth, std::size_t from) -> void {
    if (depth == p) {
      best_pick = pick;
      verdict.shared_count = shared;
      bound = shared - 1;
      return;
    }
    for (std::size_t i = from; i < paths.size(); ++i) {
      add(i, +1);
      if (shared <= bound) {
        pick[depth] = i;
        self(self, depth + 1, i);
      }
      add(i, -1);
      if (bound < 0) return;
    }
  };
  search(search, 0, 0);
  if (best_pick.empty()) return verdict;
  verdict.yes = true;
  for (std::size_t i : best_pick) verdict.routes.routes.push_back(paths[i]);
  verdict.shared_set = shared_edges(verdict.routes).shared;
  return verdict;
}

}  // namespace mselab
