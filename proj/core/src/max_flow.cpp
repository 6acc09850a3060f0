#include "mselab/max_flow.hpp"

#include <algorithm>
#include <limits>

namespace mselab {

namespace {
constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
}

std::size_t FlowNetwork::add_edge(std::size_t u, std::size_t v, std::int64_t capacity,
                                  bool undirected) {
  const std::size_t edge = head_.size() / 2;
  const std::size_t need = std::max(u, v) + 1;
  if (adjacency_.size() < need) adjacency_.resize(need);
  adjacency_[u].push_back(head_.size());
  head_.push_back(v);
  capacity_.push_back(capacity);
  flow_.push_back(0);
  adjacency_[v].push_back(head_.size());
  head_.push_back(u);
  capacity_.push_back(undirected ? capacity : 0);
  flow_.push_back(0);
  undirected_.push_back(undirected);
  return edge;
}

void FlowNetwork::set_capacity(std::size_t edge, std::int64_t capacity) {
  capacity_[2 * edge] = capacity;
  capacity_[2 * edge + 1] = undirected_[edge] ? capacity : 0;
}

void FlowNetwork::reset_flow() { std::fill(flow_.begin(), flow_.end(), 0); }

std::int64_t FlowNetwork::max_flow(std::size_t s, std::size_t t, std::int64_t limit) {
  std::int64_t value = 0;
  for (std::size_t arc : adjacency_[s]) value += flow_[arc];
  if (s == t) return value;
  parent_.assign(adjacency_.size(), kUnseen);
  while (value < limit) {
    std::fill(parent_.begin(), parent_.end(), kUnseen);
    queue_.clear();
    queue_.push_back(s);
    parent_[s] = kUnseen - 1;
    for (std::size_t qi = 0; qi < queue_.size() && parent_[t] == kUnseen; ++qi) {
      const std::size_t u = queue_[qi];
      for (std::size_t arc : adjacency_[u]) {
        const std::size_t v = head_[arc];
        if (parent_[v] == kUnseen && capacity_[arc] - flow_[arc] > 0) {
          parent_[v] = arc;
          queue_.push_back(v);
        }
      }
    }
    if (parent_[t] == kUnseen) break;
    std::int64_t push = limit - value;
    for (std::size_t v = t; v != s;) {
      const std::size_t arc = parent_[v];
      push = std::min(push, capacity_[arc] - flow_[arc]);
      v = head_[arc ^ 1];
    }
    for (std::size_t v = t; v != s;) {
      const std::size_t arc = parent_[v];
      flow_[arc] += push;
      flow_[arc ^ 1] -= push;
      v = head_[arc ^ 1];
    }
    value += push;
  }
  return value;
}

}  // namespace mselab
