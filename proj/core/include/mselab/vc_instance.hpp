#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mselab {

// Vertex Cover instance on vertices 1..n.
struct VcInstance {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // 1-indexed, unordered pairs
  int k = 0;

  int m() const { return static_cast<int>(edges.size()); }
  bool incident(int vertex, int edge_index) const {
    const auto& [u, v] = edges.at(static_cast<std::size_t>(edge_index));
    return u == vertex || v == vertex;
  }
  // Throws PreconditionError on loops, duplicate edges, out-of-range
  // endpoints, or k outside [0, n].
  void validate() const;

  friend bool operator==(const VcInstance&, const VcInstance&) = default;
};

// Text format: first non-comment line "n m k", then m lines "u v"
// (1-indexed). Lines whose first non-blank character is '#' are comments.
// Throws ParseError carrying the offending line number.
VcInstance parse_vc_instance(std::string_view text);
std::string format_vc_instance(const VcInstance& vc);

// Appends isolated vertices until n + 1 is a power of two.
VcInstance pad_to_power_of_two(const VcInstance& vc);

bool is_vertex_cover(const VcInstance& vc, const std::vector<int>& cover);

}  // namespace mselab
