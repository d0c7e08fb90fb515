// Command-line front end: generate | build | analyze | sweep.
// Every command that writes a file also writes <out>.manifest.json with the
// full argv, so any output can be reproduced byte-for-byte.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twspan/twspan.hpp"

using nlohmann::json;
using namespace twspan;

namespace {

using Clock = std::chrono::steady_clock;

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "text";
};

std::vector<std::string> g_argv;

void write_manifest(const std::string& command, const json& parameters, std::uint64_t seed,
                    const std::vector<std::string>& inputs,
                    const std::vector<std::string>& outputs, double seconds) {
  if (outputs.empty()) return;
  json manifest;
  manifest["command"] = command;
  manifest["argv"] = g_argv;
  manifest["parameters"] = parameters;
  manifest["seed"] = seed;
  manifest["inputs"] = inputs;
  manifest["outputs"] = outputs;
  manifest["tool_version"] = kVersion;
  manifest["duration_seconds"] = seconds;
  const std::string path = outputs.front() + ".manifest.json";
  std::ofstream out(path);
  if (!out) throw io::IoError("cannot write manifest: " + path);
  out << manifest.dump(2) << '\n';
}

// ── generate ─────────────────────────────────────────────────────

struct GenerateOptions {
  std::string kind;
  int d = 2;
  long long n = 0;
  double box = 1.0;
  std::optional<int> h;
  std::optional<int> k;
  std::optional<long long> m;
  bool paper_edge_count = false;
};

int run_generate(const GlobalOptions& global, const GenerateOptions& opt) {
  if (global.out.empty()) throw std::invalid_argument("generate: --out is required");
  const auto start = Clock::now();
  json params;
  params["kind"] = opt.kind;
  PointSet points = [&]() -> PointSet {
    if (opt.kind == "random") {
      params["d"] = opt.d;
      params["n"] = opt.n;
      params["box"] = opt.box;
      return random_points(static_cast<std::size_t>(opt.d),
                           static_cast<std::size_t>(opt.n), global.seed, opt.box);
    }
    if (opt.kind == "circle") {
      params["n"] = opt.n;
      return circle_points(static_cast<std::size_t>(opt.n));
    }
    if (opt.kind == "gridlike") {
      GridLikeParams grid;
      grid.d = opt.d;
      grid.n = opt.n;
      grid.h = opt.h;
      grid.k = opt.k;
      grid.m = opt.m;
      grid.paper_edge_count = opt.paper_edge_count;
      const GridLikeSet set = grid_like_set(grid);
      params["d"] = opt.d;
      params["n"] = opt.n;
      if (opt.k) params["k"] = *opt.k;
      params["h"] = set.h;
      params["m"] = set.m;
      params["paper_edge_count"] = opt.paper_edge_count;
      params["point_count"] = set.points->size();
      params["grid_point_count"] = set.grid_point_indices.size();
      params["neighbour_pair_count"] = set.neighbour_pairs.size();
      // reference value only; vacuous at small sides and never asserted
      params["grid_tw_reference_lower_bound"] =
          grid_tw_reference_lower_bound(opt.d, set.h + 1);
      return *set.points;
    }
    throw std::invalid_argument("generate: kind must be random|circle|gridlike");
  }();
  io::save_point_set(global.out, points);
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  write_manifest("generate", params, global.seed, {}, {global.out}, seconds);
  std::cout << "wrote " << points.size() << " points to " << global.out << "\n";
  return 0;
}

// ── build ────────────────────────────────────────────────────────

struct BuildOptions {
  std::string algo;
  std::string in;
  int k = 1;
  double t = 1.5;
  double C = 1.0;
};

int run_build(const GlobalOptions& global, const BuildOptions& opt) {
  if (global.out.empty()) throw std::invalid_argument("build: --out is required");
  auto ps = share(io::load_point_set(opt.in));
  const auto start = Clock::now();
  json params;
  params["algo"] = opt.algo;
  GeoGraph graph = [&]() -> GeoGraph {
    if (opt.algo == "emst") return emst(ps);
    if (opt.algo == "greedy") {
      params["t"] = opt.t;
      return greedy_spanner(ps, opt.t);
    }
    if (opt.algo == "alg1") {
      SpannerConfig cfg;
      cfg.k = opt.k;
      cfg.C = opt.C;
      cfg.t_greedy = opt.t;
      BoundedTwSpannerResult result = bounded_tw_spanner_detailed(ps, cfg);
      params["k"] = opt.k;
      params["C"] = opt.C;
      params["t_greedy"] = opt.t;
      params["m"] = result.m;
      params["m_clamped"] = result.m_clamped;
      return std::move(result.graph);
    }
    if (opt.algo == "alg2") {
      PlaneTwSpannerResult result = plane_bounded_tw_spanner_detailed(ps, opt.k);
      params["k"] = opt.k;
      params["m"] = result.m;
      return std::move(result.graph);
    }
    if (opt.algo == "delaunay") return delaunay(ps);
    if (opt.algo == "sawtooth") {
      return GeoGraph(ps, sawtooth_edges(ps->size()));
    }
    throw std::invalid_argument("build: --algo must be emst|greedy|alg1|alg2|delaunay|sawtooth");
  }();
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  io::save_geo_graph(global.out, graph);
  write_manifest("build", params, global.seed, {opt.in}, {global.out}, seconds);
  std::cout << "wrote graph with " << graph.edge_count() << " edges to " << global.out << "\n";
  return 0;
}

// ── analyze ──────────────────────────────────────────────────────

struct AnalysisReport {
  std::size_t n = 0;
  std::size_t dim = 0;
  std::size_t edges = 0;
  bool connected = false;
  double dilation_value = 0.0;
  Edge witness{0, 0};
  std::size_t degree = 0;
  std::optional<bool> plane;  // only for dim 2
  std::size_t core_vertices = 0;
  std::size_t core_edges = 0;
  int treewidth = -1;
  bool tw_exact = false;
};

std::string dilation_string(const AnalysisReport& r) {
  return r.connected ? io::format_double(r.dilation_value) : "inf";
}

void print_text_report(std::ostream& out, const AnalysisReport& r) {
  out << "points:       " << r.n << " (dim " << r.dim << ")\n";
  out << "edges:        " << r.edges << "\n";
  out << "connected:    " << (r.connected ? "yes" : "no") << "\n";
  out << "dilation:     " << dilation_string(r);
  if (r.connected) out << " (witness " << r.witness.first << "-" << r.witness.second << ")";
  out << "\n";
  out << "max degree:   " << r.degree << "\n";
  if (r.plane) out << "plane:        " << (*r.plane ? "yes" : "no") << "\n";
  out << "minor-3-core: " << r.core_vertices << " vertices, " << r.core_edges << " edges\n";
  if (r.tw_exact) {
    out << "tree-width:   " << r.treewidth << " (exact)\n";
  } else {
    out << "tree-width:   <= " << r.treewidth << " (min-fill upper bound)\n";
  }
}

const char* kAnalyzeCsvHeader =
    "n,dim,edges,connected,dilation,witness_a,witness_b,max_degree,plane,"
    "core_vertices,core_edges,treewidth,tw_exact";

void print_csv_report(std::ostream& out, const AnalysisReport& r) {
  out << kAnalyzeCsvHeader << "\n";
  out << r.n << ',' << r.dim << ',' << r.edges << ',' << (r.connected ? 1 : 0) << ','
      << dilation_string(r) << ',' << r.witness.first << ',' << r.witness.second << ','
      << r.degree << ',' << (r.plane ? (*r.plane ? "1" : "0") : "") << ',' << r.core_vertices
      << ',' << r.core_edges << ',' << r.treewidth << ',' << (r.tw_exact ? 1 : 0) << "\n";
}

json report_to_json(const AnalysisReport& r) {
  json j;
  j["n"] = r.n;
  j["dim"] = r.dim;
  j["edges"] = r.edges;
  j["connected"] = r.connected;
  j["dilation"] = r.connected ? json(r.dilation_value) : json("inf");
  j["witness"] = {r.witness.first, r.witness.second};
  j["max_degree"] = r.degree;
  if (r.plane) j["plane"] = *r.plane;
  j["core_vertices"] = r.core_vertices;
  j["core_edges"] = r.core_edges;
  j["treewidth"] = r.treewidth;
  j["treewidth_is_exact"] = r.tw_exact;
  return j;
}

AnalysisReport analyze_graph(const GeoGraph& g) {
  AnalysisReport r;
  r.n = g.vertex_count();
  r.dim = g.points().dim();
  r.edges = g.edge_count();
  const DilationReport dil = dilation(g);
  r.connected = dil.connected;
  r.dilation_value = dil.dilation;
  r.witness = dil.witness;
  r.degree = max_degree(g);
  if (r.dim == 2) r.plane = is_plane_drawing(g);
  const AbstractGraph abstract = to_abstract(g);
  const Minor3CoreResult core = minor3core(abstract);
  r.core_vertices = core.core.vertex_count();
  r.core_edges = core.core.edge_count();
  if (r.n <= kExactTreewidthLimit) {
    r.treewidth = exact_treewidth(abstract).width;
    r.tw_exact = true;
  } else {
    r.treewidth = heuristic_treewidth_upper(abstract).width;
    r.tw_exact = false;
  }
  return r;
}

int run_analyze(const GlobalOptions& global, const std::string& in) {
  const auto start = Clock::now();
  const GeoGraph g = io::load_geo_graph(in);
  const AnalysisReport report = analyze_graph(g);

  std::ostringstream rendered;
  if (global.format == "csv") {
    print_csv_report(rendered, report);
  } else if (global.format == "json") {
    rendered << report_to_json(report).dump(2) << "\n";
  } else {
    print_text_report(rendered, report);
  }
  std::cout << rendered.str();
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (!global.out.empty()) {
    std::ofstream out(global.out);
    if (!out) throw io::IoError("cannot open for writing: " + global.out);
    out << rendered.str();
    write_manifest("analyze", {{"format", global.format}}, global.seed, {in}, {global.out},
                   seconds);
  }
  return report.connected ? 0 : 3;
}

// ── sweep ────────────────────────────────────────────────────────

struct SweepRow {
  std::string algo;
  int d = 0;
  long long n = 0;
  int k = 0;
  double t = 0.0;
  double C = 0.0;
  std::uint64_t seed = 0;
  std::string dilation;
  std::size_t edges = 0;
  int tw_estimate = -1;
  bool tw_exact = false;
  double seconds = 0.0;

  auto order_key() const { return std::tie(algo, d, n, k, t, C, seed); }
};

int run_sweep(const GlobalOptions& global, const std::string& spec_path) {
  if (global.out.empty()) throw std::invalid_argument("sweep: --out is required");
  std::ifstream spec_in(spec_path);
  if (!spec_in) throw io::IoError("cannot open: " + spec_path);
  json spec;
  try {
    spec_in >> spec;
  } catch (const json::exception& e) {
    throw io::IoError(std::string("sweep spec: ") + e.what());
  }

  const auto list_or = [&spec](const char* key, std::vector<double> fallback) {
    if (!spec.contains(key)) return fallback;
    return spec.at(key).get<std::vector<double>>();
  };
  const std::vector<std::string> algos =
      spec.value("algos", std::vector<std::string>{});
  const std::vector<int> dims = spec.value("d", std::vector<int>{});
  const std::vector<long long> sizes = spec.value("n", std::vector<long long>{});
  const std::vector<int> ks = spec.value("k", std::vector<int>{1});
  const std::vector<double> ts = list_or("t", {1.5});
  const std::vector<double> Cs = list_or("C", {1.0});
  const std::vector<std::uint64_t> seeds =
      spec.value("seeds", std::vector<std::uint64_t>{});
  const double box = spec.value("box", 1.0);

  const auto start = Clock::now();
  std::vector<SweepRow> rows;
  for (const std::string& algo : algos) {
    const bool needs_plane = algo == "alg2" || algo == "delaunay" || algo == "sawtooth";
    const bool uses_k = algo == "alg1" || algo == "alg2";
    const bool uses_t = algo == "greedy";
    const bool uses_C = algo == "alg1";
    for (int d : dims) {
      if (needs_plane && d != 2) continue;
      for (long long n : sizes) {
        for (int k : uses_k ? ks : std::vector<int>{0}) {
          for (double t : uses_t ? ts : std::vector<double>{0.0}) {
            for (double C : uses_C ? Cs : std::vector<double>{0.0}) {
              for (std::uint64_t seed : seeds) {
                SweepRow row;
                row.algo = algo;
                row.d = d;
                row.n = n;
                row.k = k;
                row.t = t;
                row.C = C;
                row.seed = seed;
                try {
                  auto ps = share(algo == "sawtooth"
                                      ? circle_points(static_cast<std::size_t>(n))
                                      : random_points(static_cast<std::size_t>(d),
                                                      static_cast<std::size_t>(n), seed, box));
                  const auto cell_start = Clock::now();
                  GeoGraph g = [&]() -> GeoGraph {
                    if (algo == "emst") return emst(ps);
                    if (algo == "greedy") return greedy_spanner(ps, t);
                    if (algo == "alg1") {
                      SpannerConfig cfg;
                      cfg.k = k;
                      cfg.C = C;
                      return bounded_tw_spanner(ps, cfg);
                    }
                    if (algo == "alg2") return plane_bounded_tw_spanner(ps, k);
                    if (algo == "delaunay") return delaunay(ps);
                    if (algo == "sawtooth") return GeoGraph(ps, sawtooth_edges(ps->size()));
                    throw std::invalid_argument("sweep: unknown algo " + algo);
                  }();
                  row.seconds =
                      std::chrono::duration<double>(Clock::now() - cell_start).count();
                  const DilationReport dil = dilation(g);
                  row.dilation = dil.connected ? io::format_double(dil.dilation) : "inf";
                  row.edges = g.edge_count();
                  const AbstractGraph abstract = to_abstract(g);
                  if (g.vertex_count() <= kExactTreewidthLimit) {
                    row.tw_estimate = exact_treewidth(abstract).width;
                    row.tw_exact = true;
                  } else {
                    row.tw_estimate = heuristic_treewidth_upper(abstract).width;
                    row.tw_exact = false;
                  }
                  rows.push_back(std::move(row));
                } catch (const std::invalid_argument& e) {
                  std::cerr << "sweep: skipping " << algo << " d=" << d << " n=" << n
                            << " k=" << k << " seed=" << seed << ": " << e.what() << "\n";
                } catch (const std::domain_error& e) {
                  std::cerr << "sweep: skipping " << algo << " d=" << d << " n=" << n
                            << " k=" << k << " seed=" << seed << ": " << e.what() << "\n";
                }
              }
            }
          }
        }
      }
    }
  }
  std::sort(rows.begin(), rows.end(),
            [](const SweepRow& a, const SweepRow& b) { return a.order_key() < b.order_key(); });

  std::ofstream out(global.out);
  if (!out) throw io::IoError("cannot open for writing: " + global.out);
  out << "algo,d,n,k,t,C,seed,dilation,edges,tw_estimate,tw_exact,seconds\n";
  for (const SweepRow& r : rows) {
    out << r.algo << ',' << r.d << ',' << r.n << ',' << r.k << ','
        << io::format_double(r.t) << ',' << io::format_double(r.C) << ',' << r.seed << ','
        << r.dilation << ',' << r.edges << ',' << r.tw_estimate << ',' << (r.tw_exact ? 1 : 0)
        << ',' << r.seconds << "\n";
  }
  out.close();
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  write_manifest("sweep", {{"spec", spec_path}, {"rows", rows.size()}}, global.seed,
                 {spec_path}, {global.out}, seconds);
  std::cout << "wrote " << rows.size() << " rows to " << global.out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  g_argv.assign(argv, argv + argc);

  CLI::App app{"geometric t-spanners with bounded tree-width"};
  app.set_help_flag("--help", "print help");  // --h is a gridlike parameter
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--seed", global.seed, "RNG seed for generators");
  app.add_option("--out", global.out, "output file path");
  app.add_option("--format", global.format, "report format: text|csv|json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  GenerateOptions gen;
  CLI::App* generate = app.add_subcommand("generate", "write a point-set file");
  generate->set_help_flag("--help", "print help");
  generate->add_option("kind", gen.kind, "random|circle|gridlike")->required();
  generate->add_option("--d", gen.d, "dimension");
  generate->add_option("--n", gen.n, "point count / budget");
  generate->add_option("--box", gen.box, "box side for random points");
  generate->add_option("--h", [&gen](const std::vector<std::string>& v) {
    gen.h = std::stoi(v.front());
    return true;
  }, "grid side parameter (side length h+1)");
  generate->add_option("--k", [&gen](const std::vector<std::string>& v) {
    gen.k = std::stoi(v.front());
    return true;
  }, "derive h from this tree-width parameter");
  generate->add_option("--m", [&gen](const std::vector<std::string>& v) {
    gen.m = std::stoll(v.front());
    return true;
  }, "points per grid edge (override)");
  generate->add_flag("--paper-edge-count", gen.paper_edge_count,
                     "derive m from d(h+1)^d + d(h+1)^(d-1) instead of the exact edge count");

  BuildOptions build;
  CLI::App* build_cmd = app.add_subcommand("build", "construct a spanner from a point-set file");
  build_cmd->add_option("--algo", build.algo, "emst|greedy|alg1|alg2|delaunay|sawtooth")
      ->required();
  build_cmd->add_option("--in", build.in, "input point-set file")->required();
  build_cmd->add_option("--k", build.k, "tree-width budget (alg1, alg2)");
  build_cmd->add_option("--t", build.t, "stretch factor (greedy, alg1 representatives)");
  build_cmd->add_option("--C", build.C, "subtree-count constant (alg1)");

  std::string analyze_in;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "report metrics of a graph file");
  analyze_cmd->add_option("--in", analyze_in, "input graph file")->required();

  std::string sweep_spec;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "run a parameter grid, write CSV");
  sweep_cmd->add_option("--spec", sweep_spec, "sweep spec JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (generate->parsed()) return run_generate(global, gen);
    if (build_cmd->parsed()) return run_build(global, build);
    if (analyze_cmd->parsed()) return run_analyze(global, analyze_in);
    if (sweep_cmd->parsed()) return run_sweep(global, sweep_spec);
  } catch (const io::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 4;
  } catch (const std::domain_error& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
