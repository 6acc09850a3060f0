#pragma once

// Reference computations used by the tests. Nothing here calls into the
// library's own algorithms, so agreement is a real cross-check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "mselab/multigraph.hpp"
#include "mselab/vc_instance.hpp"

namespace mselab::testing {

// Minimum vertex cover size by bitmask enumeration.
inline int min_cover_size(const VcInstance& vc) {
  int best = vc.n;
  for (std::uint32_t mask = 0; mask < (1u << vc.n); ++mask) {
    bool ok = true;
    for (auto [u, v] : vc.edges) {
      if (!((mask >> (u - 1)) & 1u) && !((mask >> (v - 1)) & 1u)) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::min(best, __builtin_popcount(mask));
  }
  return best;
}

inline bool vc_yes(const VcInstance& vc) { return min_cover_size(vc) <= vc.k; }

struct BaseCounts {
  std::int64_t big_m = 0;
  std::int64_t k_prime = 0;
  std::int64_t p = 0;
  std::int64_t row_feathers = 0;
  std::int64_t c_prime = 0;
  std::int64_t edges = 0;
};

// Recount of the base construction: n rows of m + 1 grid vertices, a source
// feather (shaft m^3) and a sink feather (shaft 1) per row, a feather (shaft 1)
// for every non-incident row/edge pair and a plain edge otherwise, vertical
// chains and two validation chains, all chains of length k' + 1.
inline BaseCounts base_counts(const VcInstance& vc) {
  BaseCounts c;
  const std::int64_t n = vc.n, m = vc.m(), k = vc.k;
  c.big_m = 2 * (m + 1) + 2;
  c.k_prime = k * (m * m * m + m + 1);
  c.p = k * c.big_m + (n - k) + 1;
  const std::int64_t len = c.k_prime + 1;
  std::int64_t plain = 0;
  for (int row = 1; row <= n; ++row) {
    for (auto [u, v] : vc.edges) plain += (u == row || v == row) ? 1 : 0;
  }
  c.row_feathers = n * m - plain;
  c.c_prime = 2 * n + c.row_feathers;
  c.edges = n * (m * m * m + c.big_m * len)      // source feathers
            + n * (1 + c.big_m * len)            // sink feathers
            + c.row_feathers * (1 + c.big_m * len) + plain
            + (n - 1) * (m + 1) * len            // vertical chains
            + 2 * len;                           // validation chains
  return c;
}

// Face count of a rotation system by an explicit dart walk.
inline std::size_t reference_faces(const MultiGraph& g) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> position;  // (vertex, edge) -> slot
  for (VertexId v : g.vertices()) {
    const auto rot = g.rotation(v);
    for (std::size_t i = 0; i < rot.size(); ++i) position[{index_of(v), index_of(rot[i])}] = i;
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;  // (edge, tail vertex)
  std::size_t faces = 0;
  for (EdgeId e0 : g.edges()) {
    for (VertexId tail0 : {g.edge(e0).a, g.edge(e0).b}) {
      if (seen.count({index_of(e0), index_of(tail0)})) continue;
      ++faces;
      EdgeId e = e0;
      VertexId tail = tail0;
      while (seen.insert({index_of(e), index_of(tail)}).second) {
        const VertexId head = g.other_end(e, tail);
        const auto rot = g.rotation(head);
        const std::size_t slot = position.at({index_of(head), index_of(e)});
        e = rot[(slot + 1) % rot.size()];
        tail = head;
      }
    }
  }
  return faces;
}

inline bool reference_planar(const MultiGraph& g) {
  const auto v = static_cast<std::int64_t>(g.vertex_count());
  const auto e = static_cast<std::int64_t>(g.edge_count());
  return v - e + static_cast<std::int64_t>(reference_faces(g)) == 2;
}

inline std::map<std::size_t, std::size_t> reference_degrees(const MultiGraph& g) {
  std::map<std::size_t, std::size_t> count;
  std::map<std::size_t, std::size_t> degree;
  for (VertexId v : g.vertices()) degree[index_of(v)] = 0;
  for (EdgeId e : g.edges()) {
    ++degree[index_of(g.edge(e).a)];
    ++degree[index_of(g.edge(e).b)];
  }
  for (auto [v, d] : degree) ++count[d];
  return count;
}

// Length of the shortest maximal run of degree-two vertices, measured in
// edges, starting from every edge whose tail has degree other than two.
inline std::optional<std::size_t> reference_min_chain(const MultiGraph& g) {
  std::optional<std::size_t> best;
  for (EdgeId e0 : g.edges()) {
    for (VertexId tail0 : {g.edge(e0).a, g.edge(e0).b}) {
      if (g.degree(tail0) == 2) continue;
      std::size_t len = 1;
      EdgeId e = e0;
      VertexId at = g.other_end(e0, tail0);
      while (g.degree(at) == 2) {
        const auto rot = g.rotation(at);
        e = rot[0] == e ? rot[1] : rot[0];
        at = g.other_end(e, at);
        ++len;
      }
      if (!best || len < *best) best = len;
    }
  }
  return best;
}

}  // namespace mselab::testing
