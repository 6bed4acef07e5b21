#include "lqrigid/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "lqrigid/sparsity.hpp"
#include "lqrigid/surfaces.hpp"

namespace lqrigid {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t graph_seed(std::uint64_t base, ScanSource s, int n, int index) {
  std::uint64_t h = splitmix64(base);
  h = splitmix64(h ^ static_cast<std::uint64_t>(s));
  h = splitmix64(h ^ static_cast<std::uint64_t>(n));
  return splitmix64(h ^ static_cast<std::uint64_t>(index));
}

const char* outcome_name(CellOutcome o) {
  switch (o) {
    case CellOutcome::predicted: return "predicted";
    case CellOutcome::candidate: return "candidate";
    case CellOutcome::marginal: return "marginal";
  }
  return "?";
}

}  // namespace

std::string_view to_string(ScanSource s) {
  switch (s) {
    case ScanSource::henneberg: return "henneberg";
    case ScanSource::sphere: return "sphere";
    case ScanSource::projective: return "projective";
    case ScanSource::degree_bounded: return "degree_bounded";
  }
  return "?";
}

ScanSource scan_source_from_string(std::string_view s) {
  for (ScanSource x : {ScanSource::henneberg, ScanSource::sphere, ScanSource::projective,
                       ScanSource::degree_bounded}) {
    if (to_string(x) == s) return x;
  }
  throw InputError("unknown scan source '" + std::string(s) + "'");
}

void ScanConfig::validate() const {
  if (d < 1) throw InputError("scan: d must be positive");
  if (count < 1) throw InputError("scan: count must be >= 1");
  if (trials < 1) throw InputError("scan: trials must be >= 1");
  if (max_n < 1) throw InputError("scan: max_n must be positive");
  if (!(rel_tol > 0.0)) throw InputError("scan: tolerance must be positive");
  if (q_list.empty()) throw InputError("scan: no exponents given");
  if (sources.empty()) throw InputError("scan: no sources given");
  for (double q : q_list) {
    if (!(q > 1.0) || !std::isfinite(q)) throw InputError("scan: every q must lie in (1, inf)");
    if (!allow_near_euclidean && std::abs(q - 2.0) < kMinEuclideanGap) {
      throw InputError("scan: q = " + std::to_string(q) +
                       " is within 0.05 of 2; pass the near-Euclidean override to allow it");
    }
  }
}

std::vector<ScanGraph> scan_graphs(const ScanConfig& config) {
  std::vector<ScanGraph> out;
  for (ScanSource src : config.sources) {
    int min_n = 0;
    switch (src) {
      case ScanSource::henneberg: min_n = 2 * config.d; break;
      case ScanSource::sphere: min_n = 4; break;
      case ScanSource::projective: min_n = 6; break;
      case ScanSource::degree_bounded: min_n = config.d + 2; break;
    }
    for (int n = min_n; n <= config.max_n; ++n) {
      for (int i = 0; i < config.count; ++i) {
        ScanGraph sg;
        sg.source = src;
        sg.seed = graph_seed(config.seed, src, n, i);
        switch (src) {
          case ScanSource::henneberg: {
            auto gen = henneberg_generate(config.d, n, sg.seed);
            sg.graph = std::move(gen.graph);
            sg.log = std::move(gen.log);
            break;
          }
          case ScanSource::sphere:
          case ScanSource::projective: {
            std::optional<BaseKind> base;
            if (src == ScanSource::projective) {
              base = (i % 2 == 1 && n >= 7) ? BaseKind::K7_minus_K3 : BaseKind::K6;
            }
            const Surface surf = src == ScanSource::sphere ? Surface::sphere : Surface::projective_plane;
            auto gen = generate_triangulation(surf, n, sg.seed, base);
            sg.graph = gen.triangulation.graph();
            sg.base = std::string(to_string(gen.base));
            sg.log = std::move(gen.log);
            break;
          }
          case ScanSource::degree_bounded:
            sg.graph = random_degree_bounded_sparse(config.d, n, sg.seed);
            break;
        }
        out.push_back(std::move(sg));
      }
    }
  }
  return out;
}

ScanSummary run_scan(const ScanConfig& config) {
  config.validate();
  ScanSummary summary;
  summary.graphs = scan_graphs(config);

  std::vector<char> sparse(summary.graphs.size());
  for (std::size_t i = 0; i < summary.graphs.size(); ++i) {
    sparse[i] = is_sparse(summary.graphs[i].graph, SparsityParams::dd(config.d));
  }

  const std::size_t ncells = summary.graphs.size() * config.q_list.size();
  summary.cells.resize(ncells);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c = next++; c < ncells; c = next++) {
      const std::size_t gi = c / config.q_list.size();
      const double q = config.q_list[c % config.q_list.size()];
      const ScanGraph& sg = summary.graphs[gi];
      const LqSpace space(config.d, q);
      const RankResult r = max_rank_sample(sg.graph, space, config.trials, sg.seed, config.rel_tol);

      ScanCell& cell = summary.cells[c];
      cell.graph_index = gi;
      cell.q = q;
      cell.sparse = sparse[gi];
      cell.verdict = verdict_from_rank(sg.graph, space, r);
      if (!cell.verdict.stable) {
        cell.outcome = CellOutcome::marginal;
      } else if (cell.verdict.independent != cell.sparse) {
        cell.outcome = CellOutcome::candidate;
        cell.witness = r.witness;
      } else {
        cell.outcome = CellOutcome::predicted;
      }
    }
  };

  int threads = config.threads > 0 ? config.threads
                                   : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = static_cast<int>(std::min<std::size_t>(threads, std::max<std::size_t>(ncells, 1)));
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  for (const ScanCell& cell : summary.cells) {
    ++summary.total;
    switch (cell.outcome) {
      case CellOutcome::predicted: ++summary.predicted; break;
      case CellOutcome::candidate: ++summary.candidates; break;
      case CellOutcome::marginal: ++summary.marginal; break;
    }
  }
  return summary;
}

json to_json(const ScanSummary& s, const ScanConfig& config) {
  json sources = json::array();
  for (ScanSource src : config.sources) sources.push_back(std::string(to_string(src)));

  json by_source = json::object();
  json dumps = json::array();
  for (const ScanCell& cell : s.cells) {
    const ScanGraph& sg = s.graphs[cell.graph_index];
    auto& bucket = by_source[std::string(to_string(sg.source))];
    if (bucket.is_null()) bucket = {{"predicted", 0}, {"candidate", 0}, {"marginal", 0}};
    bucket[outcome_name(cell.outcome)] = bucket[outcome_name(cell.outcome)].get<int>() + 1;

    if (cell.outcome == CellOutcome::predicted) continue;
    json entry = {{"outcome", outcome_name(cell.outcome)},
                  {"source", std::string(to_string(sg.source))},
                  {"graph", to_json(sg.graph)},
                  {"q", cell.q},
                  {"sparse", cell.sparse},
                  {"rank", cell.verdict.rank},
                  {"edges", cell.verdict.edges},
                  {"target_rank", cell.verdict.target_rank},
                  {"stable", cell.verdict.stable},
                  {"seed", sg.seed}};
    if (!sg.base.empty()) entry["base"] = sg.base;
    if (cell.witness) entry["witness"] = to_json(*cell.witness);
    json log = json::array();
    for (const OpRecord& r : sg.log) log.push_back(to_json(r));
    entry["log"] = std::move(log);
    dumps.push_back(std::move(entry));
  }

  return {{"d", config.d},
          {"q", config.q_list},
          {"max_n", config.max_n},
          {"count", config.count},
          {"seed", config.seed},
          {"trials", config.trials},
          {"tol", config.rel_tol},
          {"sources", std::move(sources)},
          {"total", s.total},
          {"predicted", s.predicted},
          {"candidates", s.candidates},
          {"marginal", s.marginal},
          {"by_source", std::move(by_source)},
          {"flagged", std::move(dumps)}};
}

}  // namespace lqrigid
