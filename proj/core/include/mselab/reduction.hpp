#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mselab/error.hpp"
#include "mselab/layout.hpp"
#include "mselab/mse_instance.hpp"
#include "mselab/vc_instance.hpp"

namespace mselab {

// A Vertex Cover instance without edges; always a yes-instance, and the
// construction has no columns to build.
class TrivialInstance : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// M = 2(m + 1) + 2, k' = k(m^3 + m + 1), p = kM + (n - k) + 1.
// Throws TrivialInstance when m == 0.
Params compute_params(const VcInstance& vc);

struct Reduction {
  MseInstance instance;
  LayoutMap layout;
};

// Grid of n rows and m + 1 columns with feathers, vertical chains,
// terminal feathers and validation chains. Does not pad.
Reduction build_base(const VcInstance& vc);

struct SubdivisionStep {
  std::size_t edges = 0;
  std::int64_t budget = 0;
  std::size_t min_chain = 0;  // minimum maximal proper chain length
};

struct SubdivisionLedger {
  std::int64_t threshold = 0;         // 2 M c'
  std::vector<SubdivisionStep> steps;  // steps[0] is the input, one more per round
  int rounds() const { return static_cast<int>(steps.size()) - 1; }
};

// One application of "subdivide every edge and double the budget".
Reduction subdivide_once(Reduction r);

// Subdivides until the minimum maximal proper chain length exceeds 2 M c'.
Reduction subdivision_rounds(Reduction r, SubdivisionLedger* ledger = nullptr);

// Replaces every (M, d)-bundle by an (M, d + 2 M c')-rainbow and adds 2 M c'
// to the budget. Throws PreconditionError unless the minimum maximal proper
// chain length exceeds 2 M c' and every bundle has d above the budget.
Reduction replace_bundles_with_rainbows(Reduction r);

// Replaces s and t by complete binary trees with (n + 1) / 2 leaves and adds
// 2(n - 1) to the budget. Throws PreconditionError unless
// deg(s) = deg(t) = n + 1 is a power of two.
Reduction replace_terminals_with_trees(Reduction r);

// Directs every edge along the flow of routes and swaps each vertical
// connection for a directed connector with a chain of the same length.
// Requires a tree-stage instance.
Reduction make_directed(Reduction r);

struct StageReport {
  Stage stage = Stage::kBase;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::int64_t budget = 0;
  std::optional<std::size_t> min_chain;
  std::size_t max_degree = 0;
  std::size_t max_in_degree = 0;
  std::size_t max_out_degree = 0;
  std::size_t over_degree_four = 0;  // vertices of degree above four
  bool planar = false;
  std::size_t faces = 0;
  double wall_ms = 0.0;
};

StageReport make_stage_report(const Reduction& r, double wall_ms = 0.0);

struct PipelineResult {
  Reduction reduction;
  std::vector<StageReport> reports;
  SubdivisionLedger ledger;
};

// Runs the stages after `from.instance.stage` up to and including `target`.
PipelineResult resume_pipeline(Reduction from, Stage target);

// Pads (when `pad` is set) so that n + 1 is a power of two, then builds the
// base stage and continues up to `target`.
PipelineResult full_pipeline(const VcInstance& vc, Stage target = Stage::kTree, bool pad = true);

// Closed-form sizes of each stage, used to keep sampled instances within
// memory. Assumes the base minimum chain length is one.
struct PipelineEstimate {
  int n = 0;  // after padding
  Params params;
  std::int64_t c_prime = 0;
  int rounds = 0;
  std::uint64_t base_edges = 0;
  std::uint64_t subdivided_edges = 0;
  std::uint64_t rainbow_edges = 0;
  std::uint64_t tree_edges = 0;
  std::uint64_t directed_edges = 0;
  std::int64_t final_budget = 0;  // after the tree stage
};

PipelineEstimate estimate_pipeline(const VcInstance& vc, bool pad = true);

}  // namespace mselab
