#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace lightsout {

struct ExperimentConfig {
  int n = 0;
  std::vector<int> edges;  // empty means 1..N-1
  long long trials = 100000;
  std::uint64_t seed = 0;
  int workers = 1;
};

struct Estimate {
  int n = 0;
  int e = 0;
  long long trials = 0;
  long long successes = 0;
  double p_hat = 0.0;
  double moe95 = 0.0;
};

// Wald half-width 1.96 * sqrt(p (1 - p) / trials).
double margin_of_error(long long successes, long long trials);

// Worker count from LIGHTSOUT_WORKERS, else the hardware concurrency.
int default_workers();

// Called after each edge count finishes (from the calling thread).
using ProgressFn = std::function<void(const Estimate&)>;

// Trial t of edge count e draws from the substream (seed, n, e, t), so the
// result does not depend on the worker count.
std::vector<Estimate> run_experiment(const ExperimentConfig& config, const ProgressFn& progress = {});

enum class TableFormat { csv, text, series };

TableFormat parse_table_format(const std::string& name);

// csv: n,e,trials,successes,p_hat,moe95. text: (e, P) pairs in three
// side-by-side column groups. series: "e p_hat" lines for plotting.
std::string emit_table(const std::vector<Estimate>& estimates, TableFormat format);

}  // namespace lightsout
