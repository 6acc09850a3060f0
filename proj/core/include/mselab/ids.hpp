#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <ostream>

namespace mselab {

// Vertex and edge identifiers are opaque integers. They are never reused
// within a graph, so they stay valid across in-place graph transformations.
enum class VertexId : std::uint32_t {};
enum class EdgeId : std::uint32_t {};

inline constexpr VertexId kNoVertex{std::numeric_limits<std::uint32_t>::max()};
inline constexpr EdgeId kNoEdge{std::numeric_limits<std::uint32_t>::max()};

constexpr std::size_t index_of(VertexId v) { return static_cast<std::size_t>(v); }
constexpr std::size_t index_of(EdgeId e) { return static_cast<std::size_t>(e); }

constexpr VertexId vertex_id(std::size_t index) {
  return static_cast<VertexId>(static_cast<std::uint32_t>(index));
}
constexpr EdgeId edge_id(std::size_t index) {
  return static_cast<EdgeId>(static_cast<std::uint32_t>(index));
}

inline std::ostream& operator<<(std::ostream& os, VertexId v) {
  return os << 'v' << index_of(v);
}
inline std::ostream& operator<<(std::ostream& os, EdgeId e) {
  return os << 'e' << index_of(e);
}

}  // namespace mselab
