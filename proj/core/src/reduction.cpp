#include "mselab/reduction.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <map>
#include <tuple>
#include <utility>

#include "mselab/gadgets.hpp"
#include "mselab/graph_algorithms.hpp"

namespace mselab {

void MseInstance::validate() const {
  if (!graph.has_vertex(s) || !graph.has_vertex(t)) {
    throw PreconditionError("instance terminals must be vertices of the graph");
  }
  if (s == t) throw PreconditionError("instance terminals must differ");
  if (p < 1) throw PreconditionError("route count p must be at least 1");
  if (k < 0) throw PreconditionError("shared-edge budget k must be non-negative");
}

Params compute_params(const VcInstance& vc) {
  vc.validate();
  const std::int64_t m = vc.m();
  if (m == 0) {
    throw TrivialInstance("trivial instance: a graph without edges is covered by the empty set");
  }
  Params params;
  params.big_m = 2 * (m + 1) + 2;
  params.k_prime = vc.k * (m * m * m + m + 1);
  params.p = vc.k * params.big_m + (vc.n - vc.k) + 1;
  return params;
}

namespace {

using ConnKey = std::tuple<Connection, std::int32_t, std::int32_t>;

ConnKey key_of(const EdgeRole& r) { return {r.conn, r.row, r.col}; }

Part part_of(GadgetEdgeKind kind) {
  switch (kind) {
    case GadgetEdgeKind::kChainEdge: return Part::kChain;
    case GadgetEdgeKind::kShaftEdge: return Part::kShaft;
    case GadgetEdgeKind::kBundleChain: return Part::kBundleChain;
    case GadgetEdgeKind::kRailEdge: return Part::kEntryRail;
    case GadgetEdgeKind::kGridHorizontal:
    case GadgetEdgeKind::kGridVertical: return Part::kPlain;
    case GadgetEdgeKind::kConnectorArc: return Part::kConnectorArc;
    case GadgetEdgeKind::kConnectorChain: return Part::kConnectorChain;
  }
  return Part::kPlain;
}

EdgeRole role_from_gadget(const GadgetEdgeRole& g, Connection conn, int row, int col) {
  EdgeRole r{conn, part_of(g.kind), row, col, 0};
  switch (g.kind) {
    case GadgetEdgeKind::kBundleChain: r.index = g.first; break;
    case GadgetEdgeKind::kRailEdge:
      r.part = g.first == 1 ? Part::kEntryRail : Part::kExitRail;
      r.index = g.second;
      break;
    default: r.index = g.first; break;
  }
  return r;
}

void set_role(LayoutMap& layout, EdgeId e, EdgeRole role, EdgeId origin) {
  const auto i = index_of(e);
  if (i >= layout.roles.size()) {
    layout.roles.resize(i + 1);
    layout.origin.resize(i + 1, kNoEdge);
  }
  layout.roles[i] = role;
  layout.origin[i] = origin;
}

void clear_role(LayoutMap& layout, EdgeId e) {
  layout.roles.at(index_of(e)).reset();
  layout.origin.at(index_of(e)) = kNoEdge;
}

// Live edges grouped by connection, in increasing id order.
std::map<ConnKey, std::vector<EdgeId>> edges_by_connection(const MultiGraph& g,
                                                            const LayoutMap& layout,
                                                            auto&& keep) {
  std::map<ConnKey, std::vector<EdgeId>> groups;
  for (EdgeId e : g.edges()) {
    const EdgeRole& r = layout.role(e);
    if (keep(r)) groups[key_of(r)].push_back(e);
  }
  return groups;
}

std::int64_t bundle_chain_length_threshold(const LayoutMap& layout) {
  return 2 * layout.params.big_m * layout.c_prime;
}

void require_stage(const Reduction& r, std::initializer_list<Stage> allowed, const char* op) {
  for (Stage s : allowed) {
    if (r.instance.stage == s) return;
  }
  throw PreconditionError(std::string(op) + " cannot run on a " +
                          std::string(to_string(r.instance.stage)) + "-stage instance");
}

}  // namespace

Reduction build_base(const VcInstance& vc) {
  const Params params = compute_params(vc);
  const int n = vc.n;
  const int m = vc.m();
  const int cols = m + 1;
  const auto chain = static_cast<int>(params.k_prime + 1);
  const auto big_m = static_cast<int>(params.big_m);

  GadgetHandle grid = make_grid(n, cols);
  MultiGraph g = std::move(grid.graph);
  auto at = [cols](int i, int j) {
    return vertex_id(static_cast<std::size_t>((i - 1) * cols + (j - 1)));
  };

  // Roles of the placeholder edges, keyed by id; replaced by gadgets below.
  std::vector<EdgeRole> placeholder(g.edge_bound());
  for (EdgeId e : g.edges()) {
    const GadgetEdgeRole& gr = grid.role(e);
    const bool horizontal = gr.kind == GadgetEdgeKind::kGridHorizontal;
    placeholder[index_of(e)] = EdgeRole{horizontal ? Connection::kHorizontal : Connection::kVertical,
                                        Part::kPlain, gr.first, gr.second, 0};
  }
  auto add_placeholder = [&](VertexId a, VertexId b, EdgeRole role) {
    const EdgeId e = g.add_edge(a, b);
    placeholder.resize(g.edge_bound());
    placeholder[index_of(e)] = role;
    return e;
  };

  const VertexId s = g.add_vertex(Terminal{TerminalKind::kSource});
  const VertexId t = g.add_vertex(Terminal{TerminalKind::kSink});
  std::vector<EdgeId> s_edge(static_cast<std::size_t>(n) + 1, kNoEdge);
  std::vector<EdgeId> t_edge(static_cast<std::size_t>(n) + 1, kNoEdge);
  for (int i = 1; i <= n; ++i) {
    s_edge[i] = add_placeholder(s, at(i, 1), {Connection::kSourceFeather, Part::kPlain, i, 0, 0});
    t_edge[i] =
        add_placeholder(at(i, cols), t, {Connection::kSinkFeather, Part::kPlain, i, cols, 0});
  }
  const EdgeId val_s =
      add_placeholder(s, at(1, 1), {Connection::kValidation, Part::kPlain, 1, 0, 0});
  const EdgeId val_t =
      add_placeholder(at(n, cols), t, {Connection::kValidation, Part::kPlain, n, cols, 0});

  // Counter-clockwise rotations with s on the left, t on the right, the
  // s-side validation chain above row 1 and the t-side one below row n.
  {
    std::vector<EdgeId> rot;
    for (int i = n; i >= 1; --i) rot.push_back(s_edge[i]);
    rot.push_back(val_s);
    g.set_rotation(s, std::move(rot));
    rot.clear();
    for (int i = 1; i <= n; ++i) rot.push_back(t_edge[i]);
    rot.push_back(val_t);
    g.set_rotation(t, std::move(rot));
  }
  auto grid_edge = [&](int i, int j, bool horizontal) {
    for (EdgeId e : g.rotation(at(i, j))) {
      const EdgeRole& r = placeholder[index_of(e)];
      if (r.row == i && r.col == j &&
          r.conn == (horizontal ? Connection::kHorizontal : Connection::kVertical)) {
        return e;
      }
    }
    return kNoEdge;
  };
  for (int i = 1; i <= n; ++i) {
    // (i, 1): right, up (or the validation chain), s, down
    std::vector<EdgeId> rot;
    if (cols > 1) rot.push_back(grid_edge(i, 1, true));
    rot.push_back(i > 1 ? grid_edge(i - 1, 1, false) : val_s);
    rot.push_back(s_edge[i]);
    if (i < n) rot.push_back(grid_edge(i, 1, false));
    g.set_rotation(at(i, 1), std::move(rot));
    // (i, m + 1): t, up, left, down (or the validation chain)
    rot.clear();
    rot.push_back(t_edge[i]);
    if (i > 1) rot.push_back(grid_edge(i - 1, cols, false));
    rot.push_back(grid_edge(i, cols - 1, true));
    rot.push_back(i < n ? grid_edge(i, cols, false) : val_t);
    g.set_rotation(at(i, cols), std::move(rot));
  }

  LayoutMap layout;
  layout.stage = Stage::kBase;
  layout.vc = vc;
  layout.original_n = vc.n;
  layout.params = params;
  layout.budget = params.k_prime;

  // Roles of the spliced graph, keyed by pre-compaction id.
  std::vector<std::optional<EdgeRole>> roles;
  auto record = [&](const GadgetHandle& gadget, const SpliceResult& sr, const EdgeRole& conn) {
    roles.resize(g.edge_bound());
    for (EdgeId e : gadget.graph.edges()) {
      roles[index_of(sr.edge_map[index_of(e)])] =
          role_from_gadget(gadget.role(e), conn.conn, conn.row, conn.col);
    }
  };
  std::vector<BundleRecord> bundles;
  auto joint_of = [](const GadgetHandle& gadget) {
    for (VertexId v : gadget.graph.vertices()) {
      const auto* in = std::get_if<GadgetInternal>(&gadget.graph.label(v));
      if (in != nullptr && in->role == InternalRole::kJoint) return v;
    }
    return kNoVertex;
  };

  const GadgetHandle row_feather = make_feather(1, big_m, chain);
  const GadgetHandle s_feather = make_feather(m * m * m, big_m, chain);
  const GadgetHandle t_feather = reversed(row_feather);
  const GadgetHandle link = make_chain(chain);
  const VertexId row_joint = joint_of(row_feather);
  const VertexId s_joint = joint_of(s_feather);

  const std::vector<EdgeId> originals = g.edges();
  for (EdgeId e : originals) {
    const EdgeRole conn = placeholder[index_of(e)];
    const Edge ed = g.edge(e);
    const std::array<EdgeId, 1> replaced{e};
    switch (conn.conn) {
      case Connection::kHorizontal: {
        if (vc.incident(conn.row, conn.col - 1)) {
          roles.resize(g.edge_bound());
          roles[index_of(e)] = conn;
          break;
        }
        const SpliceResult sr = splice_gadget(g, ed.a, ed.b, replaced, row_feather);
        record(row_feather, sr, conn);
        bundles.push_back({conn.conn, conn.row, conn.col, sr.vertex_map[index_of(row_joint)], ed.b,
                           chain, false});
        break;
      }
      case Connection::kVertical:
      case Connection::kValidation: {
        const SpliceResult sr = splice_gadget(g, ed.a, ed.b, replaced, link);
        record(link, sr, conn);
        break;
      }
      case Connection::kSourceFeather: {
        const SpliceResult sr = splice_gadget(g, ed.a, ed.b, replaced, s_feather);
        record(s_feather, sr, conn);
        bundles.push_back({conn.conn, conn.row, conn.col, sr.vertex_map[index_of(s_joint)], ed.b,
                           chain, false});
        break;
      }
      case Connection::kSinkFeather: {
        const SpliceResult sr = splice_gadget(g, ed.a, ed.b, replaced, t_feather);
        record(t_feather, sr, conn);
        bundles.push_back({conn.conn, conn.row, conn.col, ed.a, sr.vertex_map[index_of(row_joint)],
                           chain, false});
        break;
      }
      default: break;
    }
  }

  Compaction c = compact(g);
  auto vmap = [&c](VertexId v) { return c.vertex_map.at(index_of(v)); };
  layout.roles.assign(c.graph.edge_bound(), std::nullopt);
  layout.origin.assign(c.graph.edge_bound(), kNoEdge);
  layout.base_roles.assign(c.graph.edge_bound(), EdgeRole{});
  for (std::size_t i = 0; i < c.edge_map.size(); ++i) {
    const EdgeId to = c.edge_map[i];
    if (to == kNoEdge) continue;
    const EdgeRole r = roles.at(i).value();
    layout.roles[index_of(to)] = r;
    layout.origin[index_of(to)] = to;
    layout.base_roles[index_of(to)] = r;
  }
  layout.grid.assign(static_cast<std::size_t>(n), std::vector<VertexId>(cols, kNoVertex));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= cols; ++j) layout.grid[i - 1][j - 1] = vmap(at(i, j));
  }
  layout.row_of.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) layout.row_of[i] = i;
  layout.col_of.assign(static_cast<std::size_t>(m) + 1, 0);
  for (int j = 1; j <= m; ++j) layout.col_of[j] = j + 1;
  for (BundleRecord& b : bundles) {
    b.upstream = vmap(b.upstream);
    b.downstream = vmap(b.downstream);
  }
  layout.bundles = std::move(bundles);
  layout.c_prime = static_cast<std::int64_t>(layout.bundles.size());

  Reduction out;
  out.instance.graph = std::move(c.graph);
  out.instance.s = vmap(s);
  out.instance.t = vmap(t);
  out.instance.p = params.p;
  out.instance.k = params.k_prime;
  out.instance.stage = Stage::kBase;
  out.layout = std::move(layout);
  return out;
}

Reduction subdivide_once(Reduction r) {
  require_stage(r, {Stage::kBase, Stage::kSubdivided}, "subdivision");
  MultiGraph& g = r.instance.graph;
  LayoutMap& layout = r.layout;
  const std::vector<EdgeId> edges = g.edges();
  g.reserve(edges.size(), edges.size());
  layout.roles.reserve(g.edge_bound() + edges.size());
  layout.origin.reserve(g.edge_bound() + edges.size());
  for (EdgeId e : edges) {
    auto [x, second] = g.subdivide_edge(
        e, GadgetInternal{InternalRole::kSubdivision, static_cast<std::uint32_t>(index_of(e))});
    set_role(layout, second, layout.role(e), layout.origin[index_of(e)]);
  }
  for (BundleRecord& b : layout.bundles) b.chain_length *= 2;
  layout.budget *= 2;
  layout.rounds += 1;
  layout.stage = Stage::kSubdivided;
  r.instance.k = layout.budget;
  r.instance.stage = Stage::kSubdivided;
  return r;
}

Reduction subdivision_rounds(Reduction r, SubdivisionLedger* ledger) {
  require_stage(r, {Stage::kBase, Stage::kSubdivided}, "subdivision");
  const std::int64_t threshold = bundle_chain_length_threshold(r.layout);
  auto step = [&r]() {
    return SubdivisionStep{r.instance.graph.edge_count(), r.layout.budget,
                           min_proper_chain_length(r.instance.graph).value_or(0)};
  };
  SubdivisionLedger local;
  local.threshold = threshold;
  local.steps.push_back(step());
  while (static_cast<std::int64_t>(local.steps.back().min_chain) <= threshold) {
    if (local.steps.back().min_chain == 0) {
      throw PreconditionError("graph has no maximal proper chain to lengthen");
    }
    r = subdivide_once(std::move(r));
    local.steps.push_back(step());
  }
  // Zero rounds still mark the instance as ready for rainbows.
  r.layout.stage = Stage::kSubdivided;
  r.instance.stage = Stage::kSubdivided;
  if (ledger != nullptr) *ledger = std::move(local);
  return r;
}

Reduction replace_bundles_with_rainbows(Reduction r) {
  require_stage(r, {Stage::kBase, Stage::kSubdivided}, "rainbow replacement");
  MultiGraph& g = r.instance.graph;
  LayoutMap& layout = r.layout;
  const std::int64_t increment = bundle_chain_length_threshold(layout);
  const auto b = min_proper_chain_length(g);
  if (!b || static_cast<std::int64_t>(*b) <= increment) {
    throw PreconditionError("rainbow replacement needs every maximal proper chain longer than 2Mc' = " +
                            std::to_string(increment) + ", but the shortest has length " +
                            std::to_string(b.value_or(0)));
  }
  auto groups = edges_by_connection(g, layout,
                                    [](const EdgeRole& role) { return role.part == Part::kBundleChain; });
  const auto big_m = static_cast<int>(layout.params.big_m);
  for (BundleRecord& rec : layout.bundles) {
    if (rec.rainbow) continue;
    auto it = groups.find(ConnKey{rec.conn, rec.row, rec.col});
    if (it == groups.end()) throw PreconditionError("bundle without edges in the layout");
    const std::vector<EdgeId>& edges = it->second;
    const auto d = static_cast<std::int64_t>(edges.size()) / big_m;
    if (d * big_m != static_cast<std::int64_t>(edges.size()) || d != rec.chain_length) {
      throw PreconditionError("bundle chains do not match the recorded chain length");
    }
    if (d <= layout.budget) {
      throw PreconditionError("rainbow replacement needs bundle chains longer than the budget (" +
                              std::to_string(d) + " <= " + std::to_string(layout.budget) + ")");
    }
    const EdgeId origin = layout.origin[index_of(edges.front())];
    const GadgetHandle rainbow = make_rainbow(big_m, static_cast<int>(d + increment));
    const SpliceResult sr = splice_gadget(g, rec.upstream, rec.downstream, edges, rainbow);
    for (EdgeId e : edges) clear_role(layout, e);
    for (EdgeId e : rainbow.graph.edges()) {
      EdgeRole role = role_from_gadget(rainbow.role(e), rec.conn, rec.row, rec.col);
      if (role.part == Part::kBundleChain) role.part = Part::kRainbowChain;
      set_role(layout, sr.edge_map[index_of(e)], role, origin);
    }
    rec.rainbow = true;
    rec.chain_length = d + increment;
  }
  layout.roles.resize(g.edge_bound());
  layout.origin.resize(g.edge_bound(), kNoEdge);
  layout.rainbow_increment = increment;
  layout.budget += increment;
  layout.stage = Stage::kRainbow;
  r.instance.k = layout.budget;
  r.instance.stage = Stage::kRainbow;
  return r;
}

namespace {

// Replaces terminal `root` by a complete binary tree rooted at it. Edges run
// from parent to child when `downward`, else child to parent.
std::vector<EdgeId> grow_tree(MultiGraph& g, LayoutMap& layout, VertexId root, bool downward,
                              Connection conn) {
  const auto rot = g.rotation(root);
  const std::vector<EdgeId> outer(rot.begin(), rot.end());
  const std::size_t leaves = outer.size() / 2;
  std::vector<EdgeId> tree;
  if (leaves <= 1) return tree;
  // Heap layout: node 1 is the root, node h has children 2h and 2h + 1, and
  // leaves are nodes leaves .. 2 leaves - 1 from left to right.
  const std::size_t nodes = 2 * leaves - 1;
  std::vector<VertexId> node(nodes + 1, kNoVertex);
  std::vector<EdgeId> up(nodes + 1, kNoEdge);
  node[1] = root;
  for (std::size_t h = 2; h <= nodes; ++h) {
    const int depth = std::bit_width(h) - 1;
    node[h] = g.add_vertex(TreeNode{depth, static_cast<int>(h)});
    const VertexId parent = node[h / 2];
    up[h] = downward ? g.add_edge(parent, node[h]) : g.add_edge(node[h], parent);
    set_role(layout, up[h], EdgeRole{conn, Part::kTree, depth, 0, static_cast<int>(h)}, kNoEdge);
    tree.push_back(up[h]);
  }
  for (std::size_t q = 0; q < leaves; ++q) {
    const VertexId leaf = node[leaves + q];
    g.reattach(outer[2 * q], root, leaf);
    g.reattach(outer[2 * q + 1], root, leaf);
    g.set_rotation(leaf, {outer[2 * q], outer[2 * q + 1], up[leaves + q]});
  }
  for (std::size_t h = 1; h < leaves; ++h) {
    std::vector<EdgeId> order{up[2 * h], up[2 * h + 1]};
    if (h > 1) order.push_back(up[h]);
    g.set_rotation(node[h], std::move(order));
  }
  return tree;
}

}  // namespace

Reduction replace_terminals_with_trees(Reduction r) {
  require_stage(r, {Stage::kBase, Stage::kSubdivided, Stage::kRainbow}, "tree replacement");
  MultiGraph& g = r.instance.graph;
  LayoutMap& layout = r.layout;
  const auto n = static_cast<std::size_t>(layout.vc.n);
  if (!std::has_single_bit(n + 1)) {
    throw PreconditionError("tree replacement needs n + 1 to be a power of two, got n = " +
                            std::to_string(n));
  }
  if (g.degree(r.instance.s) != n + 1 || g.degree(r.instance.t) != n + 1) {
    throw PreconditionError("tree replacement needs deg(s) = deg(t) = n + 1");
  }
  const auto s_tree = grow_tree(g, layout, r.instance.s, true, Connection::kSourceTree);
  const auto t_tree = grow_tree(g, layout, r.instance.t, false, Connection::kSinkTree);
  layout.tree_edges = s_tree;
  layout.tree_edges.insert(layout.tree_edges.end(), t_tree.begin(), t_tree.end());
  layout.roles.resize(g.edge_bound());
  layout.origin.resize(g.edge_bound(), kNoEdge);
  layout.tree_increment = static_cast<std::int64_t>(layout.tree_edges.size());
  layout.budget += layout.tree_increment;
  layout.stage = Stage::kTree;
  r.instance.k = layout.budget;
  r.instance.stage = Stage::kTree;
  return r;
}

Reduction make_directed(Reduction r) {
  require_stage(r, {Stage::kTree}, "the directed transform");
  MultiGraph& g = r.instance.graph;
  LayoutMap& layout = r.layout;
  auto groups = edges_by_connection(
      g, layout, [](const EdgeRole& role) { return role.conn == Connection::kVertical; });
  for (const auto& [key, edges] : groups) {
    const auto [conn, row, col] = key;
    const VertexId top = layout.grid_vertex(row, col);
    const VertexId bottom = layout.grid_vertex(row + 1, col);
    const EdgeId origin = layout.origin[index_of(edges.front())];
    const GadgetHandle connector = make_directed_connector(static_cast<int>(edges.size()));
    const SpliceResult sr = splice_gadget(g, top, bottom, edges, connector);
    for (EdgeId e : edges) clear_role(layout, e);
    for (EdgeId e : connector.graph.edges()) {
      set_role(layout, sr.edge_map[index_of(e)], role_from_gadget(connector.role(e), conn, row, col),
               origin);
    }
  }
  layout.roles.resize(g.edge_bound());
  layout.origin.resize(g.edge_bound(), kNoEdge);
  for (EdgeId e : g.edges()) g.set_directed(e, true);
  layout.stage = Stage::kDirected;
  r.instance.stage = Stage::kDirected;
  return r;
}

StageReport make_stage_report(const Reduction& r, double wall_ms) {
  const MultiGraph& g = r.instance.graph;
  StageReport rep;
  rep.stage = r.instance.stage;
  rep.vertices = g.vertex_count();
  rep.edges = g.edge_count();
  rep.budget = r.instance.k;
  rep.min_chain = min_proper_chain_length(g);
  const DegreeProfile prof = degree_profile(g);
  rep.max_degree = prof.max_degree;
  rep.max_in_degree = prof.max_in_degree;
  rep.max_out_degree = prof.max_out_degree;
  for (const auto& [deg, count] : prof.histogram) {
    if (deg > 4) rep.over_degree_four += count;
  }
  const PlanarityReport planar = verify_planar_embedding(g);
  rep.planar = planar.certified();
  rep.faces = planar.faces;
  rep.wall_ms = wall_ms;
  return rep;
}

PipelineResult resume_pipeline(Reduction from, Stage target) {
  using Clock = std::chrono::steady_clock;
  auto rank = [](Stage s) {
    switch (s) {
      case Stage::kBase: return 0;
      case Stage::kSubdivided: return 1;
      case Stage::kRainbow: return 2;
      case Stage::kTree: return 3;
      case Stage::kDirected: return 4;
      case Stage::kFixture: break;
    }
    throw PreconditionError("fixture instances are not pipeline stages");
  };
  PipelineResult out;
  out.reduction = std::move(from);
  Reduction& r = out.reduction;
  if (rank(target) < rank(r.instance.stage)) {
    throw PreconditionError("cannot go back from " + std::string(to_string(r.instance.stage)) +
                            " to " + std::string(to_string(target)));
  }
  auto run = [&](auto&& stage_fn) {
    const auto start = Clock::now();
    r = stage_fn(std::move(r));
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    out.reports.push_back(make_stage_report(r, ms));
  };
  while (rank(r.instance.stage) < rank(target)) {
    switch (r.instance.stage) {
      case Stage::kBase:
        run([&out](Reduction x) { return subdivision_rounds(std::move(x), &out.ledger); });
        break;
      case Stage::kSubdivided: run(replace_bundles_with_rainbows); break;
      case Stage::kRainbow: run(replace_terminals_with_trees); break;
      case Stage::kTree: run(make_directed); break;
      default: break;
    }
  }
  return out;
}

PipelineResult full_pipeline(const VcInstance& vc, Stage target, bool pad) {
  using Clock = std::chrono::steady_clock;
  const VcInstance padded = pad ? pad_to_power_of_two(vc) : vc;
  const auto start = Clock::now();
  Reduction base = build_base(padded);
  base.layout.original_n = vc.n;
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  StageReport first = make_stage_report(base, ms);
  PipelineResult out = resume_pipeline(std::move(base), target);
  out.reports.insert(out.reports.begin(), first);
  return out;
}

PipelineEstimate estimate_pipeline(const VcInstance& vc, bool pad) {
  const VcInstance padded = pad ? pad_to_power_of_two(vc) : vc;
  PipelineEstimate est;
  est.n = padded.n;
  est.params = compute_params(padded);
  const std::uint64_t n = static_cast<std::uint64_t>(padded.n);
  const std::uint64_t m = static_cast<std::uint64_t>(padded.m());
  const std::uint64_t big_m = static_cast<std::uint64_t>(est.params.big_m);
  const std::uint64_t chain = static_cast<std::uint64_t>(est.params.k_prime) + 1;
  std::uint64_t plain = 0;
  for (int i = 1; i <= padded.n; ++i) {
    for (int j = 0; j < padded.m(); ++j) plain += padded.incident(i, j) ? 1 : 0;
  }
  const std::uint64_t row_feathers = n * m - plain;
  est.c_prime = static_cast<std::int64_t>(2 * n + row_feathers);
  const std::uint64_t bundle = big_m * chain;
  est.base_edges = n * (m * m * m + bundle)        // s-feathers
                   + n * (1 + bundle)              // t-feathers
                   + row_feathers * (1 + bundle)   // row feathers
                   + plain                         // plain row edges
                   + (n - 1) * (m + 1) * chain     // vertical chains
                   + 2 * chain;                    // validation chains
  const std::uint64_t threshold = 2 * big_m * static_cast<std::uint64_t>(est.c_prime);
  std::uint64_t b = 1;
  while (b <= threshold) {
    b *= 2;
    ++est.rounds;
  }
  const std::uint64_t scale = std::uint64_t{1} << est.rounds;
  est.subdivided_edges = est.base_edges * scale;
  const std::uint64_t c = static_cast<std::uint64_t>(est.c_prime);
  est.rainbow_edges = est.subdivided_edges + c * (big_m * threshold + 2 * big_m);
  est.tree_edges = est.rainbow_edges + (n + 1 > 2 ? 2 * (n - 1) : 0);
  est.directed_edges = est.tree_edges + 4 * (n - 1) * (m + 1);
  est.final_budget = static_cast<std::int64_t>(scale) * est.params.k_prime +
                     static_cast<std::int64_t>(threshold) +
                     static_cast<std::int64_t>(n + 1 > 2 ? 2 * (n - 1) : 0);
  return est;
}

}  // namespace mselab
