#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lightsout/census.hpp"
#include "lightsout/enumeration.hpp"
#include "lightsout/graph.hpp"
#include "lightsout/graph_io.hpp"
#include "lightsout/montecarlo.hpp"
#include "lightsout/sampler.hpp"
#include "lightsout/solver.hpp"
#include "lightsout/validation.hpp"

using namespace lightsout;

namespace {

constexpr int kExitParse = 2;

std::string format_set(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (int v : s.to_vector()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

// "all", "none", "" or a comma-separated list of distinct vertices.
VertexSet parse_vertex_list(const std::string& text, int n) {
  if (text == "all") return VertexSet::all(n);
  VertexSet out(n);
  if (text.empty() || text == "none") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParseError("bad vertex '" + item + "'");
    }
    if (used != item.size() || v < 0 || v >= n) throw ParseError("vertex '" + item + "' outside 0.." + std::to_string(n - 1));
    if (out.contains(v)) throw ParseError("vertex " + item + " listed twice");
    out.insert(v);
  }
  return out;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  std::random_device rd;
  const std::uint64_t drawn = (std::uint64_t{rd()} << 32) ^ rd();
  std::cerr << "seed: " << drawn << " (drawn from system entropy)\n";
  return drawn;
}

SamplerMode parse_mode(const std::string& name) {
  if (name == "auto") return SamplerMode::automatic;
  if (name == "literal") return SamplerMode::literal;
  if (name == "aggregated") return SamplerMode::aggregated;
  throw std::invalid_argument("unknown sampler mode '" + name + "' (auto, literal, aggregated)");
}

const char* mode_name(SamplerMode m) {
  switch (m) {
    case SamplerMode::literal:
      return "literal";
    case SamplerMode::aggregated:
      return "aggregated";
    default:
      return "auto";
  }
}

void print_exact_header() { std::cout << "n,e,classes,solvable,probability,decimal\n"; }

void print_exact_row(const ExactCount& c) {
  const Rational p = c.probability();
  std::cout << c.n << ',' << c.e << ',' << c.classes << ',' << c.solvable << ',' << p << ',' << to_decimal(p) << '\n';
}

int run_check(const std::string& text) {
  const Graph g = parse_graph(text);
  const int rank = neighborhood_rank(g);
  std::cout << "graph: n=" << g.order() << " e=" << g.edge_count() << '\n';
  std::cout << "rank: " << rank << '/' << g.order() << '\n';
  if (rank != g.order()) {
    std::cout << "verdict: unsolvable\n";
    return 1;
  }
  std::cout << "verdict: solvable\n";
  const auto ods = odd_dominating_set(g);
  std::cout << "odd dominating set: " << format_set(*ods) << " size " << ods->count() << " ("
            << (ods->count() % 2 == 0 ? "even" : "odd") << ")\n";
  return 0;
}

int run_solve(const std::string& text, const std::string& on) {
  const Graph g = parse_graph(text);
  const VertexSet lights = parse_vertex_list(on, g.order());
  const auto presses = solve_configuration(g, lights);
  if (!presses) {
    std::cout << "unsolvable configuration\n";
    return 1;
  }
  const VertexSet after = apply_presses(g, lights, *presses);
  std::cout << "press: " << format_set(*presses) << '\n';
  std::cout << "replay: " << (after.empty() ? "all off" : "lights remain " + format_set(after)) << '\n';
  return after.empty() ? 0 : 3;
}

int run_sample(int n, int e, long long count, std::uint64_t seed, SamplerMode mode) {
  WormaldSampler sampler(n, e, mode);
  std::vector<std::string> lines;
  long long total = 0;
  long long worst = 0;
  for (long long k = 0; k < count; ++k) {
    Rng rng = Rng::substream(seed, {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(e),
                                    static_cast<std::uint64_t>(k)});
    const SampleOutcome s = sampler.sample(rng);
    total += s.attempts;
    worst = std::max(worst, s.attempts);
    lines.push_back(to_graph6(s.graph));
  }
  std::cout << "# n=" << n << " e=" << e << " seed=" << seed << " generator=" << kGeneratorName
            << " mode=" << mode_name(sampler.mode()) << " samples=" << count << '\n';
  std::cout << "# attempts total=" << total << " mean=" << (count ? double(total) / count : 0.0) << " max=" << worst
            << '\n';
  for (const auto& line : lines) std::cout << line << '\n';
  return 0;
}

void print_census(const CensusResult& r, const char* label) {
  std::cout << "# " << label << " members (graph6)\n";
  for (const Graph& g : r.graphs) std::cout << to_graph6(g) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lights Out solvability, enumeration and sampling"};
  app.require_subcommand(1, 1);

  std::string graph_text;
  std::string on_text;
  int n = 0;
  std::vector<int> e_values;
  int e = 0;
  long long trials = 100000;
  long long count = 1;
  std::optional<std::uint64_t> seed;
  int workers = default_workers();
  std::string format = "csv";
  std::string mode = "auto";
  bool exact = false;
  bool progress = false;
  int d = -1;
  int m = -1;
  int n_max = -1;
  double alpha = 0.001;

  auto* check = app.add_subcommand("check", "Decide universal solvability of a graph");
  check->add_option("--graph", graph_text, "graph6 string or edge list like 'n=3; 0-1,1-2'")->required();

  auto* solve = app.add_subcommand("solve", "Find presses that turn every light off");
  solve->add_option("--graph", graph_text, "graph6 string or edge list")->required();
  solve->add_option("--on", on_text, "lit vertices: comma list, 'all' or 'none'");

  auto* sample = app.add_subcommand("sample", "Draw uniform unlabeled graphs as graph6");
  sample->add_option("--n", n, "vertices")->required();
  sample->add_option("--e", e, "edges")->required();
  sample->add_option("--count", count, "number of graphs")->check(CLI::PositiveNumber);
  sample->add_option("--seed", seed, "64-bit seed");
  sample->add_option("--mode", mode, "auto, literal or aggregated");

  auto* estimate = app.add_subcommand("estimate", "Monte Carlo estimate of P_{n,e}");
  estimate->add_option("--n", n, "vertices")->required();
  estimate->add_option("--e", e_values, "edge counts")->required();
  estimate->add_option("--trials", trials, "trials per edge count")->check(CLI::PositiveNumber);
  estimate->add_option("--seed", seed, "64-bit seed");
  estimate->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand("table", "Estimate P_{n,e} for e = 1..N-1");
  table->add_option("--n", n, "vertices")->required()->check(CLI::Range(2, 64));
  table->add_option("--trials", trials, "trials per edge count")->check(CLI::PositiveNumber);
  table->add_option("--seed", seed, "64-bit seed");
  table->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  table->add_option("--format", format, "csv, text or series");
  table->add_flag("--exact", exact, "exact rationals by enumeration (n <= 9)");
  table->add_flag("--progress", progress, "report each finished edge count on stderr");

  auto* exact_cmd = app.add_subcommand("exact", "Exact G_{n,e} and P_{n,e} by enumeration");
  exact_cmd->add_option("--n", n, "vertices")->required();
  exact_cmd->add_option("--e", e_values, "edge counts (default: all supported)");

  auto* census = app.add_subcommand("census", "E^n_d or U^n_m census");
  census->add_option("--d", d, "excess degree (E census)");
  census->add_option("--m", m, "edges below N - floor(n/2) (U census, needs --n)");
  census->add_option("--n", n, "vertices (E census default: 3d)");
  census->add_option("--n-max", n_max, "also summarize counts for n up to this value");

  auto* validate = app.add_subcommand("validate-sampler", "Chi-square test of sampler uniformity");
  validate->add_option("--n", n, "vertices")->required();
  validate->add_option("--e", e, "edges")->required();
  validate->add_option("--samples", count, "number of samples")->check(CLI::PositiveNumber);
  validate->add_option("--seed", seed, "64-bit seed");
  validate->add_option("--alpha", alpha, "significance level");
  validate->add_option("--mode", mode, "auto, literal or aggregated");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err);
  }

  try {
    if (*check) return run_check(graph_text);
    if (*solve) return run_solve(graph_text, on_text);
    if (*sample) return run_sample(n, e, count, resolve_seed(seed), parse_mode(mode));

    if (*estimate) {
      ExperimentConfig config{n, e_values, trials, resolve_seed(seed), workers};
      std::cout << emit_table(run_experiment(config), TableFormat::csv);
      return 0;
    }

    if (*table) {
      if (exact) {
        print_exact_header();
        for (const auto& row : exact_table(n)) {
          if (row.e >= 1 && row.e < pair_count(n)) print_exact_row(row);
        }
        return 0;
      }
      const TableFormat fmt = parse_table_format(format);
      ExperimentConfig config{n, {}, trials, resolve_seed(seed), workers};
      ProgressFn report;
      if (progress) report = [](const Estimate& s) { std::cerr << "e=" << s.e << " done\n"; };
      std::cout << emit_table(run_experiment(config, report), fmt);
      return 0;
    }

    if (*exact_cmd) {
      print_exact_header();
      if (e_values.empty()) {
        for (int k = 0; k <= pair_count(n); ++k) {
          if (exact_supported(n, k)) print_exact_row(exact_count(n, k));
        }
      } else {
        for (int k : e_values) print_exact_row(exact_count(n, k));
      }
      return 0;
    }

    if (*census) {
      if ((d >= 0) == (m >= 0)) throw std::invalid_argument("census needs exactly one of --d and --m");
      if (d >= 0) {
        const int first = n > 0 ? n : 3 * d;
        const CensusResult r = compute_E(first, d);
        print_census(r, "E census");
        std::cout << "# reduced cores (graph6)\n";
        for (const Graph& g : r.graphs) std::cout << to_graph6(reduced_core(g)) << '\n';
        std::cout << "d,n,count\n";
        for (int k = first; k <= std::max(first, n_max); ++k) std::cout << d << ',' << k << ',' << compute_E(k, d).count << '\n';
        return 0;
      }
      if (n <= 0) throw std::invalid_argument("U census needs --n");
      const CensusResult r = compute_U(n, m);
      print_census(r, "U census");
      std::cout << "m,n,count\n";
      for (int k = n; k <= std::max(n, n_max); ++k) std::cout << m << ',' << k << ',' << compute_U(k, m).count << '\n';
      return 0;
    }

    if (*validate) {
      const std::uint64_t s = resolve_seed(seed);
      const SamplerValidation v = validate_sampler(n, e, count, s, parse_mode(mode));
      std::cout << "n=" << v.n << " e=" << v.e << " samples=" << v.samples << " classes=" << v.classes
                << " observed=" << v.observed << " seed=" << s << '\n';
      std::cout << "chi2=" << v.chi.statistic << " dof=" << v.chi.dof << " p=" << v.chi.p_value << '\n';
      const bool ok = v.chi.pass(alpha);
      std::cout << "result: " << (ok ? "pass" : "fail") << " (alpha=" << alpha << ")\n";
      return ok ? 0 : 1;
    }
  } catch (const ParseError& err) {
    std::cerr << "parse error: " << err.what() << '\n';
    return kExitParse;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitParse;
  }
  return 0;
}
