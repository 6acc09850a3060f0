#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace mselab {

// Integral max flow by shortest augmenting paths (Edmonds-Karp).
//
// Each edge owns a pair of arcs. A directed edge u -> v has capacity on the
// forward arc only; an undirected edge has the same capacity on both arcs,
// which serve as each other's residual, so the capacity bounds the net flow
// in either direction.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes = 0) : adjacency_(nodes) {}

  std::size_t add_edge(std::size_t u, std::size_t v, std::int64_t capacity, bool undirected);
  void set_capacity(std::size_t edge, std::int64_t capacity);
  void reset_flow();

  // Augments from s to t until the flow value reaches `limit` or no
  // augmenting path remains. Starts from the current flow.
  std::int64_t max_flow(std::size_t s, std::size_t t, std::int64_t limit);

  // Net flow along the edge from its first to its second endpoint.
  std::int64_t flow(std::size_t edge) const { return flow_[2 * edge]; }
  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return head_.size() / 2; }

 private:
  std::vector<std::vector<std::size_t>> adjacency_;  // arc indices leaving a node
  std::vector<std::size_t> head_;
  std::vector<std::int64_t> capacity_;
  std::vector<std::int64_t> flow_;
  std::vector<bool> undirected_;
  std::vector<std::size_t> parent_;  // scratch for BFS
  std::vector<std::size_t> queue_;
};

}  // namespace mselab
