#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mselab/multigraph.hpp"

namespace mselab {

struct DegreeProfile {
  std::map<std::size_t, std::size_t> histogram;  // degree -> vertex count
  std::size_t max_degree = 0;
  // Directed edges only; undirected edges count toward neither.
  std::size_t max_in_degree = 0;
  std::size_t max_out_degree = 0;
};

DegreeProfile degree_profile(const MultiGraph& g);

bool is_connected(const MultiGraph& g);

enum class PlanarVerdict { kCertified, kEulerViolation };

struct PlanarityReport {
  PlanarVerdict verdict = PlanarVerdict::kEulerViolation;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  std::string details;

  bool certified() const { return verdict == PlanarVerdict::kCertified; }
};

// Traces the faces of the rotation system (leave v along the edge that
// follows the arrival edge in v's rotation) and checks V - E + F == 2 on the
// underlying undirected graph. Throws GraphError for disconnected input or a
// malformed rotation.
PlanarityReport verify_planar_embedding(const MultiGraph& g);

// Face count of the rotation system; every dart is consumed exactly once.
// `start_dart` only changes the tracing order (dart = 2 * edge + side).
std::size_t count_faces(const MultiGraph& g, std::size_t start_dart = 0);

struct Subdivision {
  MultiGraph graph;
  // Indexed by old edge id: the id of the new second half (x, b). The first
  // half keeps the old id and becomes (a, x).
  std::vector<EdgeId> second_half;
  // Indexed by old edge id: the new midpoint.
  std::vector<VertexId> midpoint;
};

// Replaces every edge by a 2-chain through a fresh midpoint labelled
// kSubdivision with the parent edge id as ordinal. Edge orientation and
// direction flags carry over to both halves; rotations keep the embedding.
Subdivision subdivide_all_edges(const MultiGraph& g);

// An alternating vertex/edge path: vertices.size() == edges.size() + 1.
struct ChainPath {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  std::size_t length() const { return edges.size(); }
};

struct ChainDecomposition {
  std::vector<ChainPath> chains;
  // Components where every vertex has degree two; these have no endpoints.
  // For a cycle, vertices.front() == vertices.back().
  std::vector<ChainPath> cycles;
};

// Every maximal proper chain: a path whose inner vertices have degree two and
// whose endpoints do not. Each edge lies in exactly one chain or cycle.
ChainDecomposition maximal_proper_chains(const MultiGraph& g);

// Minimum length over all maximal proper chains without materialising them.
// nullopt when the graph has no such chain.
std::optional<std::size_t> min_proper_chain_length(const MultiGraph& g);

}  // namespace mselab
