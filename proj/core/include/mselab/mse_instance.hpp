#pragma once

#include <cstdint>

#include "mselab/layout.hpp"
#include "mselab/multigraph.hpp"

namespace mselab {

// Minimum Shared Edges: route p s-t paths sharing at most k edges.
struct MseInstance {
  MultiGraph graph;
  VertexId s = kNoVertex;
  VertexId t = kNoVertex;
  std::int64_t p = 1;
  std::int64_t k = 0;
  Stage stage = Stage::kFixture;

  // Throws PreconditionError if s == t, a terminal is missing, p < 1 or k < 0.
  void validate() const;
};

}  // namespace mselab
