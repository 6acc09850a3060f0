#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mselab/mse_instance.hpp"
#include "mselab/routes.hpp"
#include "mselab/vc_instance.hpp"

namespace mselab {

inline constexpr int kDefaultVcCap = 20;

// Smallest cover of size at most vc.k, searching subsets by size and then
// lexicographically; nullopt when none exists. Vertices are 1-based.
// Throws CapExceeded when vc.n exceeds `max_n`.
std::optional<std::vector<int>> solve_vc_bruteforce(const VcInstance& vc,
                                                    int max_n = kDefaultVcCap);

// Every vertex cover with exactly `size` vertices, in lexicographic order.
std::vector<std::vector<int>> enumerate_covers(const VcInstance& vc, int size,
                                               int max_n = kDefaultVcCap);

struct OracleLimits {
  std::size_t max_edges = 200;     // flow oracle: live edges
  std::int64_t max_budget = 4;     // flow oracle: k
  std::size_t max_paths = 20000;   // path oracle: simple s-t paths
  std::int64_t max_routes = 5;     // path oracle: p
  unsigned jobs = 1;               // flow oracle worker threads
};

struct MseVerdict {
  bool yes = false;
  // Minimum number of shared edges over all solutions; set when yes.
  std::int64_t shared_count = 0;
  // Flow oracle: the smallest edge set S whose lift admits p units of flow.
  std::vector<EdgeId> shared_set;
  RouteSet routes;
};

// Tries edge sets S by size 0..k, then lexicographically by edge id, and
// asks whether p units of s-t flow fit when S-edges carry capacity p and all
// other edges capacity 1. The first feasible S is decomposed into p simple
// routes whose shared edges lie in S. Throws CapExceeded beyond the limits.
MseVerdict solve_mse_exact_flow(const MseInstance& inst, const OracleLimits& limits = {});

// Enumerates all simple s-t paths, then multisets of p of them with
// nondecreasing path indices, pruning once more than k edges are shared.
// Returns a multiset with the fewest shared edges. Throws CapExceeded beyond
// the limits.
MseVerdict solve_mse_exact_paths(const MseInstance& inst, const OracleLimits& limits = {});

// All simple s-t paths that respect edge directions, in DFS order over the
// rotation. Throws CapExceeded once more than `cap` paths exist.
std::vector<Route> enumerate_simple_paths(const MultiGraph& g, VertexId s, VertexId t,
                                          std::size_t cap);

}  // namespace mselab
