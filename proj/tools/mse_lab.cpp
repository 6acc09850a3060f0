// mse-lab: reduce Vertex Cover instances to planar Minimum Shared Edges
// instances, verify route sets, and solve small instances exactly.

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "mselab/canonical.hpp"
#include "mselab/error.hpp"
#include "mselab/fixtures.hpp"
#include "mselab/gadgets.hpp"
#include "mselab/graph_io.hpp"
#include "mselab/instance_io.hpp"
#include "mselab/oracles.hpp"
#include "mselab/reduction.hpp"
#include "mselab/routes.hpp"

namespace fs = std::filesystem;
using namespace mselab;

namespace {

enum Exit : int { kYes = 0, kNo = 1, kUsage = 2, kCaps = 3 };

unsigned default_jobs() {
  if (const char* env = std::getenv("MSE_LAB_JOBS")) {
    unsigned value = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc{} && ptr == text.data() + text.size() && value > 0) return value;
    std::cerr << "warning: ignoring MSE_LAB_JOBS=" << env << "\n";
  }
  return 1;
}

void print_report(const StageReport& r) {
  std::cout << "stage=" << to_string(r.stage) << " vertices=" << r.vertices << " edges=" << r.edges
            << " budget=" << r.budget << " min_chain=";
  if (r.min_chain) {
    std::cout << *r.min_chain;
  } else {
    std::cout << "none";
  }
  std::cout << " max_degree=" << r.max_degree << " max_in=" << r.max_in_degree
            << " max_out=" << r.max_out_degree << " over_four=" << r.over_degree_four
            << " planar=" << (r.planar ? "certified" : "euler_violation") << " faces=" << r.faces
            << " wall_ms=" << std::fixed << std::setprecision(2) << r.wall_ms << "\n";
  std::cout.unsetf(std::ios::fixed);
}

void print_params(const LayoutMap& layout) {
  const Params& p = layout.params;
  const std::int64_t m = layout.vc.m();
  std::cout << "params n=" << layout.vc.n << " original_n=" << layout.original_n << " m=" << m
            << " k=" << layout.vc.k << " M=" << p.big_m << " k'=" << p.k_prime << " ("
            << m * m * m + m + 1 << "*k) p=" << p.p << " c'=" << layout.c_prime << "\n";
}

std::vector<int> parse_cover(const std::string& text) {
  std::vector<int> cover;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item.front() == 'v') item.erase(0, 1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size()) {
      throw ParseError("bad cover entry '" + item + "'");
    }
    cover.push_back(value);
  }
  return cover;
}

struct ReduceOpts {
  std::string input;
  std::string stage = "tree";
  std::string out;
  std::string layout;
  std::string from_instance;
  std::string from_layout;
  bool no_pad = false;
  std::uint64_t max_edges = 8'000'000;
};

std::uint64_t predicted_edges(const PipelineEstimate& est, Stage stage) {
  switch (stage) {
    case Stage::kBase: return est.base_edges;
    case Stage::kSubdivided: return est.subdivided_edges;
    case Stage::kRainbow: return est.rainbow_edges;
    case Stage::kTree: return est.tree_edges;
    case Stage::kDirected: return est.directed_edges;
    case Stage::kFixture: break;
  }
  return 0;
}

void check_size(const VcInstance& vc, bool pad, Stage target, std::uint64_t cap) {
  const PipelineEstimate est = estimate_pipeline(vc, pad);
  std::uint64_t peak = 0;
  for (Stage s : {Stage::kBase, Stage::kSubdivided, Stage::kRainbow, Stage::kTree, Stage::kDirected}) {
    peak = std::max(peak, predicted_edges(est, s));
    if (s == target) break;
  }
  if (peak > cap) {
    throw CapExceeded("the " + std::string(to_string(target)) + " stage would reach about " +
                      std::to_string(peak) + " edges, above --max-edges " + std::to_string(cap));
  }
}

int cmd_reduce(const ReduceOpts& o) {
  const Stage target = stage_from_string(o.stage);
  PipelineResult result;
  if (!o.from_instance.empty()) {
    if (o.from_layout.empty()) throw ParseError("--from-instance needs --from-layout");
    Reduction from = load_reduction(o.from_instance, o.from_layout);
    check_size(from.layout.vc, false, target, o.max_edges);
    result = resume_pipeline(std::move(from), target);
  } else {
    if (o.input.empty()) throw ParseError("reduce needs an input VC file or --from-instance");
    const VcInstance vc = parse_vc_instance(read_text_file(o.input));
    check_size(vc, !o.no_pad, target, o.max_edges);
    result = full_pipeline(vc, target, !o.no_pad);
  }
  print_params(result.reduction.layout);
  if (!result.ledger.steps.empty()) {
    std::cout << "subdivision rounds=" << result.ledger.rounds()
              << " threshold=" << result.ledger.threshold << "\n";
  }
  for (const StageReport& r : result.reports) print_report(r);
  if (!o.out.empty()) {
    const fs::path layout_path = o.layout.empty() ? fs::path(o.out + ".layout.json") : fs::path(o.layout);
    save_reduction(result.reduction, o.out, layout_path);
    std::cout << "wrote " << o.out << " and " << layout_path.string() << " (layout digest "
              << layout_digest(result.reduction.layout) << ")\n";
  }
  return kYes;
}

int cmd_verify(const std::string& instance_path, const std::string& routes_path,
               const std::string& layout_path) {
  std::optional<Reduction> red;
  MseInstance inst;
  if (!layout_path.empty()) {
    red = load_reduction(instance_path, layout_path);
    inst = red->instance;
  } else {
    inst = instance_from_json(read_json_file(instance_path)).instance;
  }
  const RouteSet routes = routes_from_json(read_json_file(routes_path), &inst.graph);
  const RouteVerdict verdict = verify_routes(inst, routes);
  std::cout << report_to_json(verdict.report).dump() << "\n";
  if (verdict.accepted) {
    std::cout << "accept: " << routes.routes.size() << " routes share " << verdict.report.count
              << " edges (budget " << inst.k << ")\n";
  } else {
    std::cout << "reject: " << verdict.reason << "\n";
  }
  if (red && verdict.accepted && red->layout.stage == Stage::kBase) {
    const auto inv1 = check_invariant_1(inst, red->layout, routes);
    const auto inv2 = check_invariant_2(inst, red->layout, routes);
    std::cout << "invariant1 " << (inv1.pass ? "pass" : "fail") << ": " << inv1.details << "\n";
    std::cout << "invariant2 " << (inv2.pass ? "pass" : "fail") << ": " << inv2.details << "\n";
  }
  return verdict.accepted ? kYes : kNo;
}

void print_verdict(const char* method, const MseVerdict& v) {
  std::cout << method << ": " << (v.yes ? "yes" : "no");
  if (v.yes) {
    std::cout << " shared=" << v.shared_count << " S=[";
    for (std::size_t i = 0; i < v.shared_set.size(); ++i) {
      std::cout << (i ? "," : "") << index_of(v.shared_set[i]);
    }
    std::cout << "]";
  }
  std::cout << "\n";
}

struct SolveOpts {
  std::string instance;
  std::string method = "flow";
  unsigned jobs = 1;
  std::size_t max_edges = 200;
  std::int64_t max_budget = 4;
  std::string routes_out;
};

int cmd_solve(const SolveOpts& o) {
  const MseInstance inst = instance_from_json(read_json_file(o.instance)).instance;
  OracleLimits limits;
  limits.jobs = o.jobs;
  limits.max_edges = o.max_edges;
  limits.max_budget = o.max_budget;
  std::optional<MseVerdict> flow;
  std::optional<MseVerdict> paths;
  if (o.method == "flow" || o.method == "both") {
    flow = solve_mse_exact_flow(inst, limits);
    print_verdict("flow", *flow);
  }
  if (o.method == "paths" || o.method == "both") {
    paths = solve_mse_exact_paths(inst, limits);
    print_verdict("paths", *paths);
  }
  if (flow && paths && flow->yes != paths->yes) {
    std::cerr << "error: oracles disagree\n";
    return kNo;
  }
  const MseVerdict& v = flow ? *flow : *paths;
  std::cout << (v.yes ? "yes" : "no") << "\n";
  if (v.yes) {
    const std::string routes = routes_to_json(v.routes).dump();
    if (o.routes_out.empty()) {
      std::cout << routes << "\n";
    } else {
      write_text_file(o.routes_out, routes);
    }
  }
  return v.yes ? kYes : kNo;
}

int cmd_canonical(const std::string& instance_path, const std::string& layout_path,
                  const std::string& cover_text, const std::string& out) {
  const Reduction red = load_reduction(instance_path, layout_path);
  const std::vector<int> cover = parse_cover(cover_text);
  RouteSet routes;
  try {
    routes = build_canonical_routes(red.instance, red.layout, cover);
  } catch (const UncoveredColumn& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kNo;
  }
  const RouteVerdict verdict = verify_routes(red.instance, routes);
  const std::string text = routes_to_json(routes).dump();
  if (out.empty()) {
    std::cout << text << "\n";
  } else {
    write_text_file(out, text);
    std::cout << "wrote " << routes.routes.size() << " routes to " << out << "\n";
  }
  std::cout << "routes=" << routes.routes.size() << " shared=" << verdict.report.count
            << " budget=" << red.instance.k << " " << (verdict.accepted ? "accept" : "reject") << "\n";
  return verdict.accepted ? kYes : kNo;
}

struct GadgetOpts {
  std::string kind;
  std::vector<int> params;
  std::int64_t p = 1;
  std::int64_t k = 0;
  std::string out;
};

int cmd_gadget(const GadgetOpts& o) {
  auto need = [&](std::size_t count, const char* usage) {
    if (o.params.size() != count) throw ParseError(std::string("gadget ") + o.kind + " takes " + usage);
  };
  MseInstance inst;
  if (o.kind == "chain") {
    need(1, "m");
    inst = gadget_instance(make_chain(o.params[0]), o.p, o.k);
  } else if (o.kind == "bundle") {
    need(2, "l m");
    inst = gadget_instance(make_bundle(o.params[0], o.params[1]), o.p, o.k);
  } else if (o.kind == "feather") {
    need(3, "q l m");
    inst = gadget_instance(make_feather(o.params[0], o.params[1], o.params[2]), o.p, o.k);
  } else if (o.kind == "rainbow") {
    need(2, "l m");
    inst = gadget_instance(make_rainbow(o.params[0], o.params[1]), o.p, o.k);
  } else if (o.kind == "grid") {
    need(2, "a b");
    inst = gadget_instance(make_grid(o.params[0], o.params[1]), o.p, o.k);
  } else if (o.kind == "connector") {
    need(1, "chain length");
    inst = connector_traversal_fixture(o.params[0], o.k);
  } else if (o.kind == "crossing") {
    need(1, "chain length");
    inst = opposite_crossing_fixture(o.params[0], o.k);
  } else {
    throw ParseError("unknown gadget kind '" + o.kind + "'");
  }
  const std::string text = instance_to_json(inst).dump(1);
  if (o.out.empty()) {
    std::cout << text << "\n";
  } else {
    write_text_file(o.out, text);
  }
  return kYes;
}

int cmd_export(const std::string& instance_path, const std::string& format, const std::string& out) {
  const MseInstance inst = instance_from_json(read_json_file(instance_path)).instance;
  const std::string text = export_graph(inst.graph, parse_export_format(format));
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text_file(out, text);
  }
  return kYes;
}

int cmd_vc(const std::string& input) {
  const VcInstance vc = parse_vc_instance(read_text_file(input));
  const auto cover = solve_vc_bruteforce(vc);
  if (!cover) {
    std::cout << "no: no vertex cover of size at most " << vc.k << "\n";
    return kNo;
  }
  std::cout << "yes: cover {";
  for (std::size_t i = 0; i < cover->size(); ++i) std::cout << (i ? "," : "") << (*cover)[i];
  std::cout << "}\n";
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex Cover to planar Minimum Shared Edges reduction lab"};
  app.require_subcommand(1);

  ReduceOpts reduce;
  auto* sub_reduce = app.add_subcommand("reduce", "Run the reduction up to a stage");
  sub_reduce->add_option("input", reduce.input, "VC instance file");
  sub_reduce->add_option("--stage", reduce.stage, "Last stage to run")
      ->check(CLI::IsMember({"base", "subdivided", "rainbow", "tree", "directed"}));
  sub_reduce->add_option("--out", reduce.out, "Write the instance JSON here");
  sub_reduce->add_option("--layout", reduce.layout, "Write the layout JSON here (default <out>.layout.json)");
  sub_reduce->add_option("--from-instance", reduce.from_instance, "Resume from a saved instance");
  sub_reduce->add_option("--from-layout", reduce.from_layout, "Layout of the resumed instance");
  sub_reduce->add_flag("--no-pad", reduce.no_pad, "Do not pad n + 1 to a power of two");
  sub_reduce->add_option("--max-edges", reduce.max_edges,
                         "Refuse stages predicted to exceed this many edges");

  std::string verify_instance, verify_routes_path, verify_layout;
  auto* sub_verify = app.add_subcommand("verify", "Check a route set against an instance");
  sub_verify->add_option("instance", verify_instance)->required();
  sub_verify->add_option("routes", verify_routes_path)->required();
  sub_verify->add_option("--layout", verify_layout, "Layout for invariant checks");

  SolveOpts solve;
  solve.jobs = default_jobs();
  auto* sub_solve = app.add_subcommand("solve", "Decide an instance with an exact oracle");
  sub_solve->add_option("instance", solve.instance)->required();
  sub_solve->add_option("--method", solve.method)->check(CLI::IsMember({"flow", "paths", "both"}));
  sub_solve->add_option("--jobs", solve.jobs, "Worker threads (default: MSE_LAB_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  sub_solve->add_option("--max-edges", solve.max_edges, "Flow oracle edge cap");
  sub_solve->add_option("--max-budget", solve.max_budget, "Flow oracle budget cap");
  sub_solve->add_option("--routes-out", solve.routes_out, "Write the witness routes here");

  std::string canon_instance, canon_layout, canon_cover, canon_out;
  auto* sub_canon = app.add_subcommand("canonical", "Build the canonical routes for a cover");
  sub_canon->add_option("instance", canon_instance)->required();
  sub_canon->add_option("layout", canon_layout)->required();
  sub_canon->add_option("--cover", canon_cover, "Comma separated VC vertices, e.g. 1,3")->required();
  sub_canon->add_option("--out", canon_out, "Write the routes JSON here");

  GadgetOpts gadget;
  auto* sub_gadget = app.add_subcommand("gadget", "Emit a standalone gadget instance");
  sub_gadget->add_option("kind", gadget.kind, "chain|bundle|feather|rainbow|grid|connector|crossing")
      ->required();
  sub_gadget->add_option("params", gadget.params, "Gadget parameters");
  sub_gadget->add_option("--p", gadget.p, "Route count");
  sub_gadget->add_option("--k", gadget.k, "Shared-edge budget");
  sub_gadget->add_option("--out", gadget.out, "Write the instance JSON here");

  std::string export_instance, export_format = "dot", export_out;
  auto* sub_export = app.add_subcommand("export", "Export an instance graph");
  sub_export->add_option("instance", export_instance)->required();
  sub_export->add_option("--format", export_format, "dot or json");
  sub_export->add_option("--out", export_out);

  std::string vc_input;
  auto* sub_vc = app.add_subcommand("vc", "Solve a VC instance by brute force");
  sub_vc->add_option("input", vc_input)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kYes : kUsage;
  }

  try {
    if (*sub_reduce) return cmd_reduce(reduce);
    if (*sub_verify) return cmd_verify(verify_instance, verify_routes_path, verify_layout);
    if (*sub_solve) return cmd_solve(solve);
    if (*sub_canon) return cmd_canonical(canon_instance, canon_layout, canon_cover, canon_out);
    if (*sub_gadget) return cmd_gadget(gadget);
    if (*sub_export) return cmd_export(export_instance, export_format, export_out);
    if (*sub_vc) return cmd_vc(vc_input);
  } catch (const TrivialInstance& e) {
    std::cout << e.what() << "\n";
    return kYes;
  } catch (const CapExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kCaps;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
