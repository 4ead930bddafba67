#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "straightedge/bench.hpp"
#include "straightedge/continuous.hpp"
#include "straightedge/discretize.hpp"
#include "straightedge/generators.hpp"
#include "straightedge/graphml.hpp"
#include "straightedge/report.hpp"
#include "straightedge/svg_render.hpp"

namespace se = straightedge;

namespace {

se::SpatialGraph load_graph(const std::string& path) {
  const se::ImportResult result = se::import_graphml(path);
  if (result.duplicate_edges_dropped > 0)
    std::cerr << "warning: collapsed " << result.duplicate_edges_dropped << " duplicate edge(s)\n";
  if (result.zero_length_edges_dropped > 0)
    std::cerr << "warning: dropped " << result.zero_length_edges_dropped
              << " zero-length edge(s)\n";
  return result.graph;
}

se::EdgeKey parse_edge_arg(const se::SpatialGraph& g, const std::string& arg) {
  const auto comma = arg.find(',');
  if (comma == std::string::npos)
    throw se::Error("edge must be given as 'u,v' vertex indices: " + arg);
  const auto u = static_cast<se::VertexId>(std::stol(arg.substr(0, comma)));
  const auto v = static_cast<se::VertexId>(std::stol(arg.substr(comma + 1)));
  const auto idx = g.find_edge(u, v);
  if (!idx.has_value()) throw se::Error("edge " + arg + " not present in graph");
  return g.edge(*idx);
}

std::string edge_target(const se::EdgeKey& e) {
  return "e:" + std::to_string(e.u) + "-" + std::to_string(e.v);
}

se::DistanceMode parse_mode(const std::string& s) {
  if (s == "ondemand") return se::DistanceMode::kOnDemand;
  if (s == "precomputed") return se::DistanceMode::kPrecomputed;
  throw CLI::ValidationError("--distances must be 'ondemand' or 'precomputed'");
}

// Precomputed tables that exceed the budget signal the caller to fall back.
se::DistanceProvider provider_with_fallback(const se::SpatialGraph& g, se::DistanceMode mode,
                                            std::size_t budget) {
  if (mode == se::DistanceMode::kPrecomputed) {
    try {
      return se::make_provider(g, mode, budget);
    } catch (const se::BudgetExceeded& e) {
      std::cerr << "warning: " << e.what() << "; falling back to on-demand distances\n";
    }
  }
  return se::make_provider(g, se::DistanceMode::kOnDemand, budget);
}

void emit(const std::vector<se::MetricReport>& reports, const std::string& out_path) {
  std::cout << se::csv_header() << '\n';
  for (const auto& r : reports) std::cout << se::csv_row(r) << '\n';
  if (!out_path.empty()) se::export_csv(reports, out_path);
}

int run(int argc, char** argv) {
  CLI::App app{"spatial-graph straightness toolkit"};
  app.require_subcommand(1);

  // ---- generate ----
  auto* generate = app.add_subcommand("generate", "write a generated graph as GraphML");
  generate->require_subcommand(1);
  std::string gen_out;
  std::uint64_t gen_seed = 1;
  std::int32_t gen_n = 25, gen_k = 5, gen_spokes = 8, gen_rings = 3;
  double gen_p = 0.1;

  auto* gen_grid = generate->add_subcommand("grid", "k-by-k unit lattice");
  gen_grid->add_option("--k", gen_k, "lattice side")->check(CLI::Range(2, 1 << 14));
  gen_grid->add_option("--out", gen_out, "output GraphML path")->required();

  auto* gen_planar = generate->add_subcommand("planar", "random Delaunay-connected points");
  gen_planar->add_option("--n", gen_n, "vertex count")->check(CLI::Range(3, 1 << 22));
  gen_planar->add_option("--seed", gen_seed, "PRNG seed");
  gen_planar->add_option("--out", gen_out, "output GraphML path")->required();

  auto* gen_er = generate->add_subcommand("er", "random points with independent edges");
  gen_er->add_option("--n", gen_n, "vertex count")->check(CLI::Range(2, 1 << 22));
  gen_er->add_option("--p", gen_p, "edge probability")->check(CLI::Range(0.0, 1.0));
  gen_er->add_option("--seed", gen_seed, "PRNG seed");
  gen_er->add_option("--out", gen_out, "output GraphML path")->required();

  auto* gen_radio = generate->add_subcommand("radio", "radio-concentric layout");
  gen_radio->add_option("--spokes", gen_spokes, "spokes")->check(CLI::Range(3, 1 << 16));
  gen_radio->add_option("--rings", gen_rings, "rings")->check(CLI::Range(1, 1 << 16));
  gen_radio->add_option("--out", gen_out, "output GraphML path")->required();

  // ---- shared metric options ----
  std::string graph_path, metric_mode = "continuous", distances = "ondemand", out_path;
  std::int32_t vertex = 0;
  std::optional<std::int32_t> theta;
  std::size_t budget = se::kDefaultDistanceBudget;
  se::QuadratureConfig qc;

  auto add_common = [&](CLI::App* cmd, bool with_mode) {
    cmd->add_option("--graph", graph_path, "input GraphML path")->required();
    if (with_mode)
      cmd->add_option("--mode", metric_mode, "continuous or discrete")
          ->check(CLI::IsMember({"continuous", "discrete"}));
    cmd->add_option("--theta", theta, "edge segmentation for discrete mode (0 = original graph)");
    cmd->add_option("--distances", distances, "distance strategy")
        ->check(CLI::IsMember({"ondemand", "precomputed"}));
    cmd->add_option("--memory-budget", budget, "distance memory budget in bytes");
    cmd->add_option("--rel-tol", qc.rel_tol, "quadrature relative tolerance");
    cmd->add_option("--abs-tol", qc.abs_tol, "quadrature absolute tolerance");
    cmd->add_option("--out", out_path, "also write the CSV rows to this path");
  };

  auto* vcmd = app.add_subcommand("vertex-straightness",
                                  "average straightness between a vertex and the graph");
  vcmd->add_option("--vertex", vertex, "vertex index")->required();
  add_common(vcmd, true);

  std::string edge_arg, edge2_arg;
  bool exclude_self = false;
  auto* ecmd = app.add_subcommand("edge-straightness",
                                  "average straightness of an edge (vs another edge or the graph)");
  ecmd->add_option("--edge", edge_arg, "edge as 'u,v'")->required();
  ecmd->add_option("--edge2", edge2_arg, "second edge as 'u,v' (edge-to-edge value)");
  ecmd->add_flag("--exclude-self", exclude_self, "ignore the edge's own points in the average");
  add_common(ecmd, false);

  bool exclude_same_edge = false;
  auto* gcmd = app.add_subcommand("graph-straightness", "average straightness of the whole graph");
  gcmd->add_flag("--exclude-same-edge", exclude_same_edge,
                 "ignore same-edge point pairs in the average");
  add_common(gcmd, true);

  std::string thetas_arg = "0,10,50";
  std::optional<std::int32_t> sweep_vertex;
  auto* sweep = app.add_subcommand("sweep", "discrete approximations over a theta sweep");
  sweep->add_option("--vertex", sweep_vertex, "vertex to sweep (whole graph when omitted)");
  sweep->add_option("--thetas", thetas_arg, "comma-separated strictly increasing theta list");
  add_common(sweep, false);

  std::string measure = "edge-graph", anchor_arg, svg_out;
  auto* render = app.add_subcommand("render", "color-mapped SVG drawing of a measure");
  render->add_option("--measure", measure, "pair | vertex-edge | edge-vertex | vertex-graph | edge-graph")
      ->check(CLI::IsMember({"pair", "vertex-edge", "edge-vertex", "vertex-graph", "edge-graph"}));
  render->add_option("--anchor", anchor_arg, "anchor vertex 'v' or edge 'u,v'");
  render->add_option("--svg", svg_out, "output SVG path")->required();
  add_common(render, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message and synopsis
    return 1;
  }

  if (generate->parsed()) {
    se::SpatialGraph g;
    if (gen_grid->parsed()) g = se::square_grid(gen_k);
    if (gen_planar->parsed()) g = se::random_planar(gen_n, gen_seed);
    if (gen_er->parsed()) g = se::spatial_erdos_renyi(gen_n, gen_p, gen_seed);
    if (gen_radio->parsed()) g = se::radio_concentric(gen_spokes, gen_rings);
    se::write_graphml(g, gen_out);
    std::cerr << "wrote " << gen_out << " (n=" << g.vertex_count() << ", m=" << g.edge_count()
              << ")\n";
    return 0;
  }

  const bool discrete = metric_mode == "discrete";
  if (discrete && !theta.has_value())
    throw CLI::ValidationError("--mode discrete requires --theta");
  const se::DistanceMode dist_mode = parse_mode(distances);
  const se::SpatialGraph g = load_graph(graph_path);

  std::vector<se::MetricReport> reports;
  auto make_report = [&](std::string measure_id, std::string target, double value,
                         double theta_used, double secs) {
    se::MetricReport r;
    r.measure = std::move(measure_id);
    r.target = std::move(target);
    r.value = value;
    r.theta = theta_used;
    r.time_s = secs;
    r.peak_mem_bytes = se::peak_memory_bytes();
    r.mode = distances;
    r.quadrature = qc;
    return r;
  };

  if (vcmd->parsed()) {
    const se::WallTimer timer;
    if (discrete) {
      const double value = se::sigma_theta_vertex(g, vertex, *theta, dist_mode, budget);
      reports.push_back(make_report(*theta == 0 ? "sigma" : "sigma_theta",
                                    "v:" + std::to_string(vertex), value, *theta,
                                    timer.seconds()));
    } else {
      const auto dp = provider_with_fallback(g, dist_mode, budget);
      const double value = se::avg_straightness_point_graph(g, dp, se::vertex_point(g, vertex), qc);
      reports.push_back(
          make_report("S_G(p)", "v:" + std::to_string(vertex), value, 0.0, timer.seconds()));
    }
  } else if (ecmd->parsed()) {
    const se::EdgeKey e1 = parse_edge_arg(g, edge_arg);
    const auto dp = provider_with_fallback(g, dist_mode, budget);
    const se::WallTimer timer;
    if (!edge2_arg.empty()) {
      const se::EdgeKey e2 = parse_edge_arg(g, edge2_arg);
      const double value = se::avg_straightness_edge_edge(g, dp, e1, e2, qc);
      reports.push_back(make_report("S_e2(e1)", edge_target(e1) + "|" + edge_target(e2), value,
                                    0.0, timer.seconds()));
    } else {
      const double value = se::avg_straightness_edge_graph(g, dp, e1, !exclude_self, qc);
      reports.push_back(make_report("S_G(e)", edge_target(e1), value, 0.0, timer.seconds()));
    }
  } else if (gcmd->parsed()) {
    const se::WallTimer timer;
    if (discrete) {
      const double value = se::sigma_theta_graph(g, *theta, dist_mode, budget);
      reports.push_back(make_report(*theta == 0 ? "sigma" : "sigma_theta", "graph", value, *theta,
                                    timer.seconds()));
    } else {
      const auto dp = provider_with_fallback(g, dist_mode, budget);
      const double value = se::avg_straightness_graph(g, dp, !exclude_same_edge, qc);
      reports.push_back(make_report("S_G(G)", "graph", value, 0.0, timer.seconds()));
    }
  } else if (sweep->parsed()) {
    std::vector<std::int32_t> thetas;
    std::size_t start = 0;
    while (start <= thetas_arg.size()) {
      const auto comma = thetas_arg.find(',', start);
      const std::string tok = thetas_arg.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!tok.empty()) thetas.push_back(static_cast<std::int32_t>(std::stol(tok)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    std::optional<se::VertexId> anchor;
    if (sweep_vertex.has_value()) anchor = *sweep_vertex;
    const se::SweepResult sr = se::bench_convergence(g, anchor, thetas, qc, dist_mode, budget);
    const std::string target = anchor ? "v:" + std::to_string(*anchor) : std::string("graph");
    for (std::size_t i = 0; i < sr.thetas.size(); ++i) {
      auto r = make_report(sr.thetas[i] == 0 ? "sigma" : "sigma_theta", target, sr.sigma_values[i],
                           sr.thetas[i], sr.time_s[i]);
      r.peak_mem_bytes = sr.peak_mem_bytes[i];
      reports.push_back(std::move(r));
    }
    auto ref = make_report(anchor ? "S_G(p)" : "S_G(G)", target, sr.continuous_reference, 0.0,
                           sr.reference_time_s);
    ref.peak_mem_bytes = sr.reference_peak_mem_bytes;
    reports.push_back(std::move(ref));
  } else if (render->parsed()) {
    const auto dp = provider_with_fallback(g, dist_mode, budget);
    std::vector<double> values;
    se::RenderAnchor anchor;
    se::ValueKind kind = se::ValueKind::kPerEdge;
    const se::WallTimer timer;

    auto anchor_vertex = [&]() {
      if (anchor_arg.empty()) throw se::Error("--measure " + measure + " needs --anchor <vertex>");
      const auto v = static_cast<se::VertexId>(std::stol(anchor_arg));
      if (!g.valid_vertex(v)) throw se::Error("anchor vertex out of range");
      return v;
    };

    if (measure == "pair") {
      const se::VertexId a = anchor_vertex();
      anchor = a;
      kind = se::ValueKind::kPerVertex;
      const auto pa = se::vertex_point(g, a);
      for (se::VertexId v = 0; v < g.vertex_count(); ++v)
        values.push_back(se::straightness_points(g, dp, pa, se::vertex_point(g, v)));
    } else if (measure == "vertex-edge") {
      const se::EdgeKey e = parse_edge_arg(g, anchor_arg);
      anchor = e;
      kind = se::ValueKind::kPerVertex;
      for (se::VertexId v = 0; v < g.vertex_count(); ++v)
        values.push_back(se::avg_straightness_point_edge(g, dp, se::vertex_point(g, v), e, qc));
    } else if (measure == "edge-vertex") {
      const se::VertexId a = anchor_vertex();
      anchor = a;
      const auto pa = se::vertex_point(g, a);
      for (std::int32_t i = 0; i < g.edge_count(); ++i)
        values.push_back(se::avg_straightness_point_edge(g, dp, pa, g.edge(i), qc));
    } else if (measure == "vertex-graph") {
      kind = se::ValueKind::kPerVertex;
      for (se::VertexId v = 0; v < g.vertex_count(); ++v)
        values.push_back(se::avg_straightness_point_graph(g, dp, se::vertex_point(g, v), qc));
    } else {  // edge-graph
      for (std::int32_t i = 0; i < g.edge_count(); ++i)
        values.push_back(se::avg_straightness_edge_graph(g, dp, g.edge(i), true, qc));
    }
    se::render_svg(g, values, kind, anchor, svg_out);
    std::cerr << "wrote " << svg_out << " in " << timer.seconds() << " s\n";
    return 0;
  }

  emit(reports, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 1;  // usage errors raised after parsing (e.g. discrete without --theta)
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
