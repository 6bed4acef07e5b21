// lqrigid: rigidity and independence workbench for graphs in l_q^d.
//
// Every subcommand prints a single JSON document (stdout or --out). Exit
// codes: 0 the command ran (whatever the mathematical verdict), 2 malformed
// input or configuration, 3 ill-positioned explicit placement.

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lqrigid/graph.hpp"
#include "lqrigid/graph_ops.hpp"
#include "lqrigid/io.hpp"
#include "lqrigid/lq_geometry.hpp"
#include "lqrigid/oracles.hpp"
#include "lqrigid/rank.hpp"
#include "lqrigid/scan.hpp"
#include "lqrigid/sparsity.hpp"
#include "lqrigid/surfaces.hpp"

namespace {

using namespace lqrigid;

constexpr int kExitInput = 2;
constexpr int kExitIllPositioned = 3;

struct Common {
  std::string graph_file;
  std::string out_file;
  int d = 2;
  std::vector<double> q{3.0};
  int trials = kDefaultTrials;
  std::uint64_t seed = 0;
  double tol = kDefaultRelTol;
};

void emit(const json& doc, const std::string& out_file) {
  if (out_file.empty() || out_file == "-") {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::ofstream out(out_file);
  if (!out) throw InputError("cannot write '" + out_file + "'");
  out << doc.dump(2) << '\n';
}

Graph load_graph(const std::string& path) {
  if (path.empty()) throw InputError("--graph is required");
  return graph_from_json(read_json_file(path));
}

std::optional<Edge> parse_pair(const std::string& s) {
  if (s.empty()) return std::nullopt;
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw InputError("expected a pair 'u,v', got '" + s + "'");
  return Edge(std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1)));
}

std::map<Vertex, Vertex> parse_assignment(const std::vector<std::string>& items) {
  std::map<Vertex, Vertex> out;
  for (const auto& item : items) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw InputError("assignment entries look like 'w:h', got '" + item + "'");
    out[std::stoi(item.substr(0, colon))] = std::stoi(item.substr(colon + 1));
  }
  return out;
}

json run_analyze(const Common& c, const std::string& placement_file) {
  const Graph g = load_graph(c.graph_file);
  std::optional<Placement> explicit_p;
  if (!placement_file.empty()) {
    explicit_p = placement_from_json(read_json_file(placement_file));
    if (explicit_p->dimension() != c.d) throw InputError("placement dimension differs from -d");
    if (explicit_p->vertex_count() != g.vertex_count()) {
      throw InputError("placement vertex count differs from the graph");
    }
    if (auto bad = explicit_p->first_coincident_edge(g)) throw IllPositionedError(*bad);
  }

  const bool sparse = is_sparse(g, SparsityParams::dd(c.d));
  json reports = json::array();
  for (double q : c.q) {
    const LqSpace space(c.d, q);
    const RankResult r = max_rank_sample(g, space, c.trials, c.seed, c.tol);
    AnalysisReport report{g, c.d, q, verdict_from_rank(g, space, r), sparse, c.trials, c.seed, c.tol};
    json doc = to_json(report);
    doc["euclidean"] = space.is_euclidean();
    if (explicit_p) {
      const int prank = numerical_rank(rigidity_matrix(g, *explicit_p, space).entries, c.tol).rank;
      doc["placement"] = {{"rank", prank},
                          {"regular", prank == r.rank},
                          {"independent", prank == g.edge_count()},
                          {"stress_dim", g.edge_count() - prank}};
    }
    reports.push_back(std::move(doc));
  }
  if (reports.size() == 1) return reports[0];
  return {{"reports", std::move(reports)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rigidity and independence of graphs in l_q^d"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub, bool with_graph, bool with_rank) {
    if (with_graph) sub->add_option("--graph", common.graph_file, "graph JSON file")->required();
    sub->add_option("-d", common.d, "dimension")->check(CLI::PositiveNumber);
    sub->add_option("--out", common.out_file, "output file (default stdout)");
    if (with_rank) {
      sub->add_option("-q", common.q, "exponent(s), comma separated")->delimiter(',');
      sub->add_option("--trials", common.trials, "sampled placements")->check(CLI::PositiveNumber);
      sub->add_option("--seed", common.seed, "random seed");
      sub->add_option("--tol", common.tol, "relative singular value tolerance");
    }
  };

  auto* analyze = app.add_subcommand("analyze", "rank, independence and rigidity verdict");
  add_common(analyze, true, true);
  std::string placement_file;
  analyze->add_option("--placement", placement_file, "explicit placement JSON to rank as well");
  std::string matrix_csv;
  analyze->add_option("--matrix-csv", matrix_csv, "write the altered matrix at --placement as CSV");

  auto* sparsity = app.add_subcommand("sparsity", "(k,l)-sparsity and edge addability");
  add_common(sparsity, true, false);
  std::optional<int> sp_k, sp_l;
  int sp_mult = 1;
  std::string addable;
  sparsity->add_option("--k", sp_k, "count coefficient (default d)");
  sparsity->add_option("--l", sp_l, "count offset (default d)");
  sparsity->add_option("--mult", sp_mult, "edge multiplier (1 or 2)");
  sparsity->add_option("--addable", addable, "pair 'x,y' to test for (d,d) edge addability");

  auto* op = app.add_subcommand("op", "apply one graph operation");
  add_common(op, true, false);
  std::string op_kind, op_edge, op_h;
  std::vector<int> op_vertices, op_moved;
  int op_pivot = -1;
  std::vector<std::string> op_assign;
  std::string op_log;
  op->add_option("--kind", op_kind, "cone|brace|ext0|ext1|vsplit|spider|subst|reduce1")->required();
  op->add_option("--vertices", op_vertices, "S / neighbours / shared vertices")->delimiter(',');
  op->add_option("--moved", op_moved, "moved neighbours for vertex splits")->delimiter(',');
  op->add_option("--edge", op_edge, "removed edge (ext1) or added pair (reduce1), 'u,v'");
  op->add_option("--pivot", op_pivot, "v0 for vsplit/spider/subst, v for reduce1");
  op->add_option("--subgraph", op_h, "graph JSON for subst");
  op->add_option("--assign", op_assign, "subst assignment entries 'w:h'")->delimiter(',');
  op->add_option("--log", op_log, "append the operation record to this JSON-lines file");

  auto* gen = app.add_subcommand("gen", "generate a graph or triangulation");
  add_common(gen, false, false);
  std::string gen_surface, gen_base, gen_source = "henneberg";
  int gen_n = 0;
  std::uint64_t gen_seed = 0;
  gen->add_option("--n", gen_n, "target vertex count")->required();
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--surface", gen_surface, "sphere|projective (triangulation mode)");
  gen->add_option("--base", gen_base, "K4|K6|K7mK3");
  gen->add_option("--source", gen_source, "henneberg|degree_bounded when --surface is absent");

  auto* scan = app.add_subcommand("scan", "conjecture scan over generated graphs");
  ScanConfig cfg;
  std::vector<std::string> scan_sources{"henneberg"};
  scan->add_option("-d", cfg.d, "dimension");
  scan->add_option("-q", cfg.q_list, "exponents")->delimiter(',');
  scan->add_option("--max-n", cfg.max_n, "largest vertex count");
  scan->add_option("--count", cfg.count, "graphs per size and source");
  scan->add_option("--seed", cfg.seed, "random seed");
  scan->add_option("--trials", cfg.trials, "sampled placements per cell");
  scan->add_option("--tol", cfg.rel_tol, "relative singular value tolerance");
  scan->add_option("--sources", scan_sources, "henneberg,sphere,projective,degree_bounded")->delimiter(',');
  scan->add_flag("--allow-near-euclidean", cfg.allow_near_euclidean, "permit |q-2| < 0.05");
  scan->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
  scan->add_option("--out", common.out_file, "output file (default stdout)");

  auto* oracle = app.add_subcommand("oracle", "evaluate a closed-form oracle");
  std::string oracle_name;
  double oracle_gamma = 0.0;
  oracle->add_option("--name", oracle_name,
                     "wheel_det|circulant_det|k4_gamma_det|k7k3_detR|k7k3_f|select_gamma")
      ->required();
  oracle->add_option("-d", common.d, "dimension (circulant_det)");
  oracle->add_option("-q", common.q, "exponent(s)")->delimiter(',');
  oracle->add_option("--gamma", oracle_gamma, "gamma in (0,1); omitted = selector");
  oracle->add_option("--out", common.out_file, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*analyze) {
      json doc = run_analyze(common, placement_file);
      if (!matrix_csv.empty()) {
        if (placement_file.empty()) throw InputError("--matrix-csv needs --placement");
        const Graph g = load_graph(common.graph_file);
        const Placement p = placement_from_json(read_json_file(placement_file));
        std::ofstream csv(matrix_csv);
        write_csv(csv, rigidity_matrix(g, p, LqSpace(common.d, common.q.front())).entries);
      }
      emit(doc, common.out_file);
    } else if (*sparsity) {
      const Graph g = load_graph(common.graph_file);
      const SparsityParams params{sp_k.value_or(common.d), sp_l.value_or(common.d), sp_mult};
      try {
        params.validate();
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      json doc = {{"n", g.vertex_count()},
                  {"edges", g.edge_count()},
                  {"d", common.d},
                  {"f_count", f_count(g, common.d)},
                  {"dd_sparse", is_sparse(g, SparsityParams::dd(common.d))},
                  {"dd_tight", is_tight(g, common.d)},
                  {"params", {{"k", params.k}, {"l", params.l}, {"edge_multiplier", params.edge_multiplier}}},
                  {"sparse", is_sparse(g, params)}};
      if (auto pair = parse_pair(addable)) {
        doc["addable"] = {{"pair", {pair->u, pair->v}},
                          {"result", edge_addable(g, common.d, pair->u, pair->v)}};
      }
      emit(doc, common.out_file);
    } else if (*op) {
      const Graph g = load_graph(common.graph_file);
      OpRecord rec;
      rec.kind = op_kind_from_string(op_kind);
      rec.d = common.d;
      rec.pivot = op_pivot;
      rec.vertices = op_vertices;
      rec.moved = op_moved;
      rec.edge = parse_pair(op_edge);
      if (!op_h.empty()) rec.h = load_graph(op_h);
      rec.assignment = parse_assignment(op_assign);
      rec.n_before = g.vertex_count();
      if (rec.kind == OpKind::reduce1 && !rec.edge) {
        rec.edge = one_reduction_search(g, rec.pivot, rec.d);
        if (!rec.edge) {
          emit({{"reduced", false}, {"reason", "no 1-reduction at this vertex keeps (d,d)-sparsity"}},
               common.out_file);
          return 0;
        }
      }
      const Graph out = apply(g, rec);
      rec.n_after = out.vertex_count();
      if (!op_log.empty()) {
        std::ofstream log(op_log, std::ios::app);
        write_json_lines(log, {rec});
      }
      emit({{"graph", to_json(out)}, {"record", to_json(rec)}}, common.out_file);
    } else if (*gen) {
      json doc;
      if (!gen_surface.empty()) {
        std::optional<BaseKind> base;
        if (!gen_base.empty()) base = base_kind_from_string(gen_base);
        auto t = generate_triangulation(surface_from_string(gen_surface), gen_n, gen_seed, base);
        json log = json::array();
        for (const auto& r : t.log) log.push_back(to_json(r));
        doc = {{"triangulation", to_json(t.triangulation)},
               {"graph", to_json(t.triangulation.graph())},
               {"base", std::string(to_string(t.base))},
               {"seed", gen_seed},
               {"log", std::move(log)}};
      } else if (gen_source == "henneberg") {
        auto h = henneberg_generate(common.d, gen_n, gen_seed);
        json log = json::array();
        for (const auto& r : h.log) log.push_back(to_json(r));
        doc = {{"graph", to_json(h.graph)}, {"d", common.d}, {"seed", gen_seed}, {"log", std::move(log)}};
      } else if (gen_source == "degree_bounded") {
        doc = {{"graph", to_json(random_degree_bounded_sparse(common.d, gen_n, gen_seed))},
               {"d", common.d},
               {"seed", gen_seed}};
      } else {
        throw InputError("unknown --source '" + gen_source + "'");
      }
      emit(doc, common.out_file);
    } else if (*scan) {
      cfg.sources.clear();
      for (const auto& s : scan_sources) cfg.sources.insert(scan_source_from_string(s));
      const ScanSummary summary = run_scan(cfg);
      emit(to_json(summary, cfg), common.out_file);
    } else if (*oracle) {
      json values = json::array();
      for (double q : common.q) {
        const auto v = oracles::evaluate(oracle_name, common.d, q, oracle_gamma);
        values.push_back({{"name", v.name}, {"d", v.d}, {"q", v.q}, {"gamma", v.gamma}, {"value", v.value}});
      }
      emit(values.size() == 1 ? values[0] : json{{"values", values}}, common.out_file);
    }
  } catch (const IllPositionedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIllPositioned;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
