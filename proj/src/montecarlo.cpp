#include "lightsout/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "lightsout/graph.hpp"
#include "lightsout/rng.hpp"
#include "lightsout/sampler.hpp"
#include "lightsout/solver.hpp"

namespace lightsout {

namespace {

std::string fixed6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

long long run_range(int n, int e, std::uint64_t seed, long long begin, long long end) {
  WormaldSampler sampler(n, e);
  long long hits = 0;
  for (long long t = begin; t < end; ++t) {
    Rng rng = Rng::substream(seed, {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(e),
                                    static_cast<std::uint64_t>(t)});
    if (is_universally_solvable(sampler.sample(rng).graph)) ++hits;
  }
  return hits;
}

}  // namespace

double margin_of_error(long long successes, long long trials) {
  if (trials < 1) throw std::invalid_argument("margin of error needs at least one trial");
  const double p = double(successes) / double(trials);
  return 1.96 * std::sqrt(p * (1.0 - p) / double(trials));
}

int default_workers() {
  if (const char* env = std::getenv("LIGHTSOUT_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<Estimate> run_experiment(const ExperimentConfig& config, const ProgressFn& progress) {
  check_capacity(config.n);
  if (config.trials < 1) throw std::invalid_argument("trials must be at least 1");
  const int pairs = pair_count(config.n);
  std::vector<int> edges = config.edges;
  if (edges.empty()) {
    for (int e = 1; e < pairs; ++e) edges.push_back(e);
  }
  for (int e : edges) {
    if (e < 0 || e > pairs) throw std::invalid_argument("edge count " + std::to_string(e) + " outside [0, N]");
  }
  const int workers = std::max(1, config.workers);

  std::vector<Estimate> out;
  for (int e : edges) {
    const long long chunk = (config.trials + workers - 1) / workers;
    std::vector<long long> hits(workers, 0);
    std::vector<std::exception_ptr> errors(workers);
    auto job = [&](int w) {
      const long long begin = std::min(config.trials, w * chunk);
      const long long end = std::min(config.trials, begin + chunk);
      try {
        hits[w] = run_range(config.n, e, config.seed, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    };
    if (workers == 1) {
      job(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(job, w);
      for (auto& t : pool) t.join();
    }
    for (auto& err : errors) {
      if (err) std::rethrow_exception(err);
    }
    Estimate est;
    est.n = config.n;
    est.e = e;
    est.trials = config.trials;
    for (long long h : hits) est.successes += h;
    est.p_hat = double(est.successes) / double(est.trials);
    est.moe95 = margin_of_error(est.successes, est.trials);
    if (progress) progress(est);
    out.push_back(est);
  }
  return out;
}

TableFormat parse_table_format(const std::string& name) {
  if (name == "csv") return TableFormat::csv;
  if (name == "text") return TableFormat::text;
  if (name == "series") return TableFormat::series;
  throw std::invalid_argument("unknown table format '" + name + "' (csv, text, series)");
}

std::string emit_table(const std::vector<Estimate>& estimates, TableFormat format) {
  std::ostringstream out;
  switch (format) {
    case TableFormat::csv:
      out << "n,e,trials,successes,p_hat,moe95\n";
      for (const auto& s : estimates) {
        out << s.n << ',' << s.e << ',' << s.trials << ',' << s.successes << ',' << fixed6(s.p_hat) << ','
            << fixed6(s.moe95) << '\n';
      }
      break;
    case TableFormat::series:
      out << "# e p_hat\n";
      for (const auto& s : estimates) out << s.e << ' ' << fixed6(s.p_hat) << '\n';
      break;
    case TableFormat::text: {
      const std::size_t rows = (estimates.size() + 2) / 3;
      out << "  e  P_{n,e}   |   e  P_{n,e}   |   e  P_{n,e}\n";
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
          const std::size_t k = c * rows + r;
          if (k >= estimates.size()) break;
          char buf[48];
          const double p = estimates[k].p_hat;
          std::snprintf(buf, sizeof buf, "%s%3d  %s", c == 0 ? "" : "  | ", estimates[k].e,
                        p == 0.0 ? "0       " : fixed6(p).c_str());
          out << buf;
        }
        out << '\n';
      }
      break;
    }
  }
  return out.str();
}

}  // namespace lightsout
