#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lightsout/enumeration.hpp"
#include "lightsout/graph.hpp"
#include "lightsout/rng.hpp"

namespace lightsout {

// Parameters for R_i, the permutations with exactly n - i fixed points.
struct ClassWeight {
  int i = 0;
  double r = 0.0;
  double p = 0.0;
  double q = 0.0;
  double log_b = 0.0;         // natural log of B_i
  BigInt r_size;              // |R_i| = C(n, i) * derangements(i)
  double log_r_size = 0.0;
  // Indexed by orbit size j = 0..N (entry 0 unused).
  std::vector<std::uint64_t> include_threshold;  // p^j / (p^j + q^j)
  std::vector<double> log_orbit_norm;            // log(p^j + q^j)
};

struct WormaldParams {
  int n = 0;
  int e = 0;
  int pairs = 0;
  std::vector<ClassWeight> classes;  // i = 0, 2, 3, ..., n
  std::vector<double> cumulative;    // selection CDF over `classes`

  const ClassWeight& for_i(int i) const;
  double selection_probability(int i) const;
};

BigInt derangements(int i);

// f(r) = N r (r^2+1) - e (r+1)(r^2+1) + k_i r (r-1), with
// k_i = (2ni - i^2 - 2i) / 2. Its positive root minimizes B_i over p.
double cubic_value(int n, int e, int i, double r);
double solve_cubic(int n, int e, int i);

// Requires 0 < e < N and n >= 2.
WormaldParams compute_weights(int n, int e);

// Identity for i = 0, else a uniform derangement of 0..i-1 extended by the
// identity. `retries` (optional) receives the number of rejected shuffles.
std::vector<int> sample_sigma(int n, int i, Rng& rng, int* retries = nullptr);

struct PairOrbitSet {
  std::vector<std::pair<int, int>> pairs;  // members, orbit after orbit
  std::vector<int> offsets;                // orbit k spans [offsets[k], offsets[k+1])
  std::vector<int> histogram;              // histogram[j] = number of orbits of size j

  int orbit_count() const { return static_cast<int>(offsets.size()) - 1; }
  std::span<const std::pair<int, int>> orbit(int k) const {
    return {pairs.data() + offsets[k], static_cast<std::size_t>(offsets[k + 1] - offsets[k])};
  }
};

PairOrbitSet pair_orbits(std::span<const int> sigma);

// Includes each orbit independently; nullopt unless exactly e edges result.
std::optional<Graph> sample_graph_given_sigma(const WormaldParams& params, int i, const PairOrbitSet& orbits,
                                              Rng& rng);
std::optional<Graph> sample_graph_given_sigma(const WormaldParams& params, int i, std::span<const int> sigma,
                                              Rng& rng);

// log(|R_i| / (B_i P(g))). P(g) depends on g only through e, so the
// histogram is enough. Throws std::logic_error if the ratio exceeds 1.
double log_acceptance_ratio(const WormaldParams& params, int i, const std::vector<int>& histogram);

// Consumes one uniform variate. g must have e edges and be fixed by sigma.
bool acceptance_check(const WormaldParams& params, int i, std::span<const int> sigma, const Graph& g, Rng& rng);

// Permutations moving exactly i points, grouped by cycle type. Everything the
// acceptance step needs depends on sigma only through this type.
struct CycleClass {
  int i = 0;
  std::vector<int> cycles;     // lengths >= 2, non-increasing
  double probability = 0.0;    // share of R_i with this type
  std::vector<int> histogram;  // pair-orbit sizes, as in PairOrbitSet
  double log_ratio = 0.0;      // log acceptance ratio
  double hit = 0.0;            // P(orbit graph has exactly e edges)
};

// Pair-orbit histogram of a permutation with the given cycle lengths (>= 2)
// and n - sum(cycles) fixed points.
std::vector<int> orbit_histogram(int n, std::span<const int> cycles);

// All cycle types for every admissible i. Throws std::logic_error if some
// acceptance ratio exceeds 1.
std::vector<CycleClass> cycle_classes(const WormaldParams& params);

struct SampleOutcome {
  Graph graph;
  long long attempts = 0;
  int i_used = 0;
};

// literal: run the restart loop attempt by attempt.
// aggregated: same output and attempt-count distributions, drawn directly.
// The per-attempt success probability is summed over cycle types, the
// number of attempts is geometric, and the successful (i, type, graph) comes
// from its exact conditional law. Needs n <= kMaxAggregatedOrder.
enum class SamplerMode { automatic, literal, aggregated };
inline constexpr int kMaxAggregatedOrder = 24;

// Uniform over isomorphism classes with n vertices and e edges. Reuses its
// buffers, so one instance per thread.
class WormaldSampler {
 public:
  WormaldSampler(int n, int e, SamplerMode mode = SamplerMode::automatic);

  SampleOutcome sample(Rng& rng);

  int order() const { return n_; }
  int edges() const { return e_; }
  // Absent when the request is served by a shortcut (e = 0 or e = N).
  const std::optional<WormaldParams>& params() const { return params_; }
  SamplerMode mode() const { return mode_; }
  // Probability that one attempt of the restart loop succeeds.
  double success_probability() const;

 private:
  SampleOutcome sample_sparse(Rng& rng);
  SampleOutcome sample_aggregated(Rng& rng);
  void trace_orbits();
  bool try_identity(const ClassWeight& w, Rng& rng);
  bool try_class(const ClassWeight& w, Rng& rng);

  int n_;
  int e_;
  int sparse_e_;
  bool flip_;
  std::optional<WormaldParams> params_;
  double log_identity_hit_ = 0.0;  // log P(Binomial(N, p_0) = e)
  std::vector<int> sigma_;
  std::vector<int> pair_scratch_;
  std::vector<std::pair<int, int>> chosen_;
  std::vector<int> histogram_;
  SamplerMode mode_;
  std::vector<CycleClass> cycle_classes_;
  std::vector<double> class_cdf_;
  double success_ = 0.0;
  std::vector<int> labels_;
  std::vector<std::pair<int, int>> orbit_pairs_;
  std::vector<std::vector<int>> orbit_starts_;  // by size: offsets into orbit_pairs_
  std::vector<std::vector<double>> dp_;
};

SampleOutcome wormald_sample(int n, int e, Rng& rng);

// Uniform pick from the materialized class list; n <= 7.
inline constexpr int kMaxOracleOrder = 7;
Graph oracle_sample(int n, int e, Rng& rng);
const std::vector<Graph>& oracle_classes(int n, int e);

}  // namespace lightsout
