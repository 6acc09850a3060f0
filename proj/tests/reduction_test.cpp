#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <tuple>

#include "mselab/error.hpp"
#include "mselab/fixtures.hpp"
#include "mselab/gadgets.hpp"
#include "mselab/graph_algorithms.hpp"
#include "mselab/instance_io.hpp"
#include "mselab/oracles.hpp"
#include "mselab/reduction.hpp"
#include "support.hpp"

namespace mselab {
namespace {

const VcInstance kSingleEdge{2, {{1, 2}}, 1};
const VcInstance kWorkedExample{4, {{1, 2}, {2, 3}, {3, 4}, {1, 3}}, 2};

void expect_stage_sound(const Reduction& r) {
  EXPECT_EQ(check_layout_totality(r.instance.graph, r.layout), "");
  EXPECT_TRUE(verify_planar_embedding(r.instance.graph).certified());
  EXPECT_EQ(r.layout.stage, r.instance.stage);
  EXPECT_EQ(r.layout.budget, r.instance.k);
}

TEST(Params, WorkedExample) {
  for (int k = 0; k <= 4; ++k) {
    VcInstance vc = kWorkedExample;
    vc.k = k;
    const Params params = compute_params(vc);
    EXPECT_EQ(params.big_m, 12);
    EXPECT_EQ(params.k_prime, 69 * k);
  }
  EXPECT_EQ(compute_params(kWorkedExample).k_prime, 138);
  EXPECT_EQ(compute_params(kWorkedExample).p, 2 * 12 + 2 + 1);
}

TEST(Params, IdentitiesOverSmallInstances) {
  for (int n = 2; n <= 8; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 1; u <= n; ++u) {
      for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
    }
    for (int m = 1; m <= std::min<int>(8, static_cast<int>(pairs.size())); ++m) {
      for (int k = 0; k <= n; ++k) {
        VcInstance vc{n, {pairs.begin(), pairs.begin() + m}, k};
        const Params params = compute_params(vc);
        EXPECT_EQ(params.big_m, 2 * (m + 1) + 2);
        EXPECT_EQ(params.k_prime, std::int64_t{k} * (m * m * m + m + 1));
        EXPECT_EQ(params.p, std::int64_t{k} * params.big_m + (n - k) + 1);
      }
    }
  }
}

TEST(Params, EdgelessInstanceIsTrivial) {
  EXPECT_THROW(compute_params(VcInstance{3, {}, 1}), TrivialInstance);
  EXPECT_THROW(build_base(VcInstance{3, {}, 0}), TrivialInstance);
}

TEST(Padding, NextPowerOfTwo) {
  EXPECT_EQ(pad_to_power_of_two(kWorkedExample).n, 7);
  EXPECT_EQ(pad_to_power_of_two(kWorkedExample).edges, kWorkedExample.edges);
  EXPECT_EQ(pad_to_power_of_two(VcInstance{3, {{1, 2}}, 1}).n, 3);
  EXPECT_EQ(pad_to_power_of_two(VcInstance{1, {}, 0}).n, 1);
  EXPECT_EQ(pad_to_power_of_two(VcInstance{8, {{1, 2}}, 1}).n, 15);
}

TEST(Base, SingleEdgeInstance) {
  const Reduction r = build_base(kSingleEdge);
  const auto expected = testing::base_counts(kSingleEdge);
  EXPECT_EQ(expected.edges, 118);
  EXPECT_EQ(r.instance.graph.edge_count(), 118u);
  EXPECT_EQ(r.instance.p, 8);
  EXPECT_EQ(r.instance.k, 3);
  EXPECT_EQ(r.layout.params, (Params{6, 3, 8}));
  EXPECT_EQ(r.layout.c_prime, 4);
  EXPECT_EQ(r.instance.stage, Stage::kBase);
  expect_stage_sound(r);

  int plain = 0, validation = 0, vertical = 0;
  for (const EdgeRole& role : r.layout.base_roles) {
    plain += role.conn == Connection::kHorizontal && role.part == Part::kPlain;
    validation += role.conn == Connection::kValidation;
    vertical += role.conn == Connection::kVertical;
  }
  EXPECT_EQ(plain, 2);
  EXPECT_EQ(validation, 8);
  EXPECT_EQ(vertical, 8);
}

TEST(Base, EdgeCountMatchesRecount) {
  const std::vector<VcInstance> cases = {
      kSingleEdge, kWorkedExample, {3, {{1, 2}, {1, 3}}, 1}, {3, {{1, 2}, {2, 3}, {1, 3}}, 2},
      {2, {{1, 2}}, 0}, {5, {{1, 5}, {2, 4}}, 3}};
  for (const VcInstance& vc : cases) {
    const Reduction r = build_base(vc);
    const auto expected = testing::base_counts(vc);
    EXPECT_EQ(static_cast<std::int64_t>(r.instance.graph.edge_count()), expected.edges);
    EXPECT_EQ(r.layout.c_prime, expected.c_prime);
    EXPECT_EQ(r.instance.p, expected.p);
    EXPECT_EQ(r.instance.k, expected.k_prime);
    EXPECT_EQ(r.instance.graph.vertex_count() + testing::reference_faces(r.instance.graph),
              r.instance.graph.edge_count() + 2);
    expect_stage_sound(r);
  }
}

TEST(Base, WorkedExampleRowFour) {
  const Reduction r = build_base(kWorkedExample);
  EXPECT_EQ(r.layout.rows(), 4);
  EXPECT_EQ(r.layout.cols(), 5);
  // Row 4 meets e3 only: a plain edge after column 3, feathers elsewhere.
  for (int col = 1; col <= 4; ++col) {
    bool has_plain = false, has_shaft = false;
    for (const EdgeRole& role : r.layout.base_roles) {
      if (role.conn != Connection::kHorizontal || role.row != 4 || role.col != col) continue;
      has_plain |= role.part == Part::kPlain;
      has_shaft |= role.part == Part::kShaft;
    }
    EXPECT_EQ(has_plain, col == 3) << "column " << col;
    EXPECT_EQ(has_shaft, col != 3) << "column " << col;
    EXPECT_EQ(r.layout.plain_horizontal(4, col), col == 3);
  }
}

TEST(Subdivision, SingleEdgeLedger) {
  SubdivisionLedger ledger;
  const Reduction r = subdivision_rounds(build_base(kSingleEdge), &ledger);
  EXPECT_EQ(ledger.threshold, 48);
  EXPECT_EQ(ledger.rounds(), 6);
  EXPECT_EQ(r.instance.k, 192);
  EXPECT_EQ(r.layout.rounds, 6);
  for (int i = 1; i <= ledger.rounds(); ++i) {
    const auto& prev = ledger.steps[static_cast<std::size_t>(i - 1)];
    const auto& cur = ledger.steps[static_cast<std::size_t>(i)];
    EXPECT_EQ(cur.edges, 2 * prev.edges);
    EXPECT_EQ(cur.budget, 2 * prev.budget);
    EXPECT_EQ(cur.min_chain, 2 * prev.min_chain);
  }
  EXPECT_LE(static_cast<std::int64_t>(ledger.steps[5].min_chain), ledger.threshold);
  EXPECT_GT(static_cast<std::int64_t>(ledger.steps.back().min_chain), ledger.threshold);
  EXPECT_EQ(testing::reference_min_chain(r.instance.graph), ledger.steps.back().min_chain);
  expect_stage_sound(r);
}

TEST(Subdivision, OneRoundDoublesEverything) {
  const Reduction base = build_base(kSingleEdge);
  const Reduction once = subdivide_once(base);
  EXPECT_EQ(once.instance.graph.edge_count(), 2 * base.instance.graph.edge_count());
  EXPECT_EQ(once.instance.k, 2 * base.instance.k);
  EXPECT_EQ(once.instance.stage, Stage::kSubdivided);
  expect_stage_sound(once);
}

TEST(Subdivision, GadgetOptimumDoubles) {
  const std::vector<std::pair<GadgetHandle, std::int64_t>> cases = {
      {make_bundle(3, 1), 4}, {make_bundle(2, 2), 3}, {make_feather(1, 2, 1), 2},
      {make_chain(2), 2}};
  OracleLimits limits;
  for (const auto& [gadget, p] : cases) {
    const MseVerdict before = solve_mse_exact_paths(gadget_instance(gadget, p, 16), limits);
    GadgetHandle sub = gadget;
    sub.graph = subdivide_all_edges(gadget.graph).graph;
    const MseVerdict after = solve_mse_exact_paths(gadget_instance(sub, p, 32), limits);
    ASSERT_TRUE(before.yes);
    ASSERT_TRUE(after.yes);
    EXPECT_EQ(after.shared_count, 2 * before.shared_count);
    for (std::int64_t k = 0; k <= 3; ++k) {
      const bool yes_before = solve_mse_exact_flow(gadget_instance(gadget, p, k)).yes;
      const bool yes_after = solve_mse_exact_paths(gadget_instance(sub, p, 2 * k), limits).yes;
      EXPECT_EQ(yes_before, yes_after);
    }
  }
}

TEST(Rainbow, PrecheckFailsBeforeSubdivision) {
  EXPECT_THROW(replace_bundles_with_rainbows(build_base(kSingleEdge)), PreconditionError);
}

TEST(Rainbow, DegreeAtMostFourAwayFromTerminals) {
  const Reduction sub = subdivision_rounds(build_base(kSingleEdge));
  const Reduction r = replace_bundles_with_rainbows(sub);
  expect_stage_sound(r);
  EXPECT_EQ(r.layout.rainbow_increment, 2 * 6 * 4);
  EXPECT_EQ(r.instance.k, sub.instance.k + 48);
  for (VertexId v : r.instance.graph.vertices()) {
    if (v == r.instance.s || v == r.instance.t) continue;
    EXPECT_LE(r.instance.graph.degree(v), 4u);
  }
  for (const BundleRecord& b : r.layout.bundles) EXPECT_TRUE(b.rainbow);
}

TEST(Subdivision, VerticalChainsOutgrowBudget) {
  const VcInstance vc{3, {{1, 2}, {2, 3}}, 1};
  const Reduction r = subdivision_rounds(build_base(vc));
  std::map<std::tuple<int, int>, std::int64_t> lengths;
  for (EdgeId e : r.instance.graph.edges()) {
    const EdgeRole& role = r.layout.role(e);
    if (role.conn == Connection::kVertical) ++lengths[{role.row, role.col}];
  }
  ASSERT_FALSE(lengths.empty());
  for (const auto& [key, len] : lengths) {
    EXPECT_EQ(len, lengths.begin()->second);
    EXPECT_GT(len, r.instance.k);
  }
}

TEST(Rainbow, GadgetOptimumWithinClaimBound) {
  OracleLimits limits;
  // At most one route per bundle chain, as in the construction.
  for (int d = 1; d <= 2; ++d) {
    for (std::int64_t p = 1; p <= 2; ++p) {
      const auto bundle = solve_mse_exact_paths(gadget_instance(make_bundle(2, d), p, 64), limits);
      const auto rainbow =
          solve_mse_exact_paths(gadget_instance(make_rainbow(2, d + 4), p, 64), limits);
      ASSERT_TRUE(bundle.yes && rainbow.yes);
      EXPECT_LE(rainbow.shared_count, bundle.shared_count + 2 * 2);
    }
  }
}

TEST(Trees, FourLeafSlots) {
  const VcInstance padded{3, {{1, 2}}, 1};
  const PipelineResult result = full_pipeline(padded, Stage::kTree, false);
  const Reduction& r = result.reduction;
  expect_stage_sound(r);
  EXPECT_EQ(r.layout.tree_increment, 4);
  EXPECT_EQ(r.layout.tree_edges.size(), 4u);
  const DegreeProfile profile = degree_profile(r.instance.graph);
  EXPECT_LE(profile.max_degree, 4u);
  EXPECT_EQ(r.instance.graph.degree(r.instance.s), 2u);
  EXPECT_EQ(r.instance.graph.degree(r.instance.t), 2u);
  for (EdgeId e : r.layout.tree_edges) {
    const Edge& ed = r.instance.graph.edge(e);
    for (VertexId v : {ed.a, ed.b}) {
      if (v != r.instance.s && v != r.instance.t) EXPECT_EQ(r.instance.graph.degree(v), 3u);
    }
  }
}

TEST(Trees, NeedPowerOfTwo) {
  const Reduction sub = subdivision_rounds(build_base(VcInstance{2, {{1, 2}}, 1}));
  const Reduction rb = replace_bundles_with_rainbows(sub);
  EXPECT_THROW(replace_terminals_with_trees(rb), PreconditionError);
}

TEST(Pipeline, SingleEdgePadded) {
  const PipelineResult result = full_pipeline(kSingleEdge, Stage::kDirected);
  ASSERT_EQ(result.reports.size(), 5u);
  for (const StageReport& report : result.reports) EXPECT_TRUE(report.planar);
  const Reduction& r = result.reduction;
  expect_stage_sound(r);
  EXPECT_EQ(r.layout.vc.n, 3);
  EXPECT_EQ(r.layout.original_n, 2);

  const auto counts = testing::base_counts(r.layout.vc);
  const std::int64_t tree_budget = (std::int64_t{1} << r.layout.rounds) * counts.k_prime +
                                   2 * counts.big_m * counts.c_prime + 2 * (r.layout.vc.n - 1);
  EXPECT_EQ(result.reports[3].budget, tree_budget);
  EXPECT_EQ(result.reports[3].max_degree, 4u);

  const DegreeProfile profile = degree_profile(r.instance.graph);
  EXPECT_LE(profile.max_in_degree, 3u);
  EXPECT_LE(profile.max_out_degree, 3u);
  for (EdgeId e : r.instance.graph.edges()) EXPECT_TRUE(r.instance.graph.edge(e).directed);

  const PipelineEstimate est = estimate_pipeline(kSingleEdge);
  EXPECT_EQ(est.rounds, r.layout.rounds);
  EXPECT_EQ(est.base_edges, result.reports[0].edges);
  EXPECT_EQ(est.subdivided_edges, result.reports[1].edges);
  EXPECT_EQ(est.rainbow_edges, result.reports[2].edges);
  EXPECT_EQ(est.tree_edges, result.reports[3].edges);
  EXPECT_EQ(est.directed_edges, result.reports[4].edges);
  EXPECT_EQ(est.final_budget, tree_budget);
}

TEST(Pipeline, OnlyTerminalsExceedDegreeFourBeforeTrees) {
  // Padded to n = 7, so both terminals have degree 8.
  const PipelineResult result = full_pipeline(VcInstance{4, {{1, 2}}, 0}, Stage::kTree);
  ASSERT_EQ(result.reports.size(), 4u);
  EXPECT_EQ(result.reports[2].stage, Stage::kRainbow);
  EXPECT_EQ(result.reports[2].over_degree_four, 2u);
  EXPECT_EQ(result.reports[2].max_degree, 8u);
  EXPECT_EQ(result.reports[3].max_degree, 4u);
  EXPECT_EQ(result.reports[3].over_degree_four, 0u);
}

TEST(Pipeline, ResumeMatchesDirectRun) {
  const VcInstance vc{3, {{1, 2}, {1, 3}}, 1};
  const PipelineResult direct = full_pipeline(vc, Stage::kDirected);
  const PipelineResult base = full_pipeline(vc, Stage::kBase);
  const PipelineResult resumed = resume_pipeline(base.reduction, Stage::kDirected);
  EXPECT_TRUE(resumed.reduction.instance.graph == direct.reduction.instance.graph);
  EXPECT_EQ(resumed.reduction.layout, direct.reduction.layout);
  EXPECT_EQ(resumed.reduction.instance.k, direct.reduction.instance.k);
  EXPECT_THROW(resume_pipeline(direct.reduction, Stage::kBase), PreconditionError);
}

TEST(Pipeline, SaveLoadRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "mselab_reduction_test";
  std::filesystem::create_directories(dir);
  const Reduction r = full_pipeline(kSingleEdge, Stage::kRainbow).reduction;
  save_reduction(r, dir / "inst.json", dir / "layout.json");
  const Reduction back = load_reduction(dir / "inst.json", dir / "layout.json");
  EXPECT_TRUE(back.instance.graph == r.instance.graph);
  EXPECT_EQ(back.layout, r.layout);
  EXPECT_EQ(back.instance.p, r.instance.p);
  EXPECT_EQ(back.instance.k, r.instance.k);
  EXPECT_EQ(back.instance.stage, Stage::kRainbow);

  // A layout from another run no longer matches the digest.
  const Reduction other = build_base(kWorkedExample);
  save_reduction(other, dir / "other.json", dir / "other_layout.json");
  EXPECT_THROW(load_reduction(dir / "inst.json", dir / "other_layout.json"), ParseError);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace mselab
