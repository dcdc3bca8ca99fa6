#include "lightsout/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>

namespace lightsout {

namespace {

// (2ni - i^2 - 2i) / 2: a lower bound on the pairs lying in orbits of size
// two or more, over all permutations with n - i fixed points.
double kappa(int n, int i) { return (2.0 * n * i - double(i) * i - 2.0 * i) / 2.0; }

std::string instance(int n, int e, int i) {
  return "n=" + std::to_string(n) + " e=" + std::to_string(e) + " i=" + std::to_string(i);
}

double log_add(double a, double b) {
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

BigInt binomial(int n, int k) {
  BigInt out = 1;
  for (int j = 1; j <= k; ++j) out = out * (n - k + j) / j;
  return out;
}

ClassWeight make_class(int n, int e, int i) {
  const int pairs = pair_count(n);
  ClassWeight w;
  w.i = i;
  w.r = i == 0 ? double(e) / double(pairs - e) : solve_cubic(n, e, i);
  w.p = w.r / (1.0 + w.r);
  w.q = 1.0 / (1.0 + w.r);
  const double log_p = std::log(w.r) - std::log1p(w.r);
  const double log_q = -std::log1p(w.r);
  w.log_b = -e * log_p - (pairs - e) * log_q;
  if (i > 0) {
    const double falling = std::lgamma(n + 1.0) - std::lgamma(n - i + 1.0);
    // Pairs in orbits of size j >= 2 carry (p^j + q^j) <= (p^2 + q^2)^(j/2),
    // and there are at least kappa(n, i) of them.
    w.log_b += falling + kappa(n, i) / 2.0 * std::log(w.p * w.p + w.q * w.q);
  }
  w.r_size = binomial(n, i) * derangements(i);
  w.log_r_size = std::log(w.r_size.convert_to<double>());
  w.include_threshold.assign(pairs + 1, 0);
  w.log_orbit_norm.assign(pairs + 1, 0.0);
  const double log_r = std::log(w.r);
  for (int j = 1; j <= pairs; ++j) {
    // p^j / (p^j + q^j) = 1 / (1 + r^-j)
    w.include_threshold[j] = bernoulli_threshold(1.0 / (1.0 + std::exp(-j * log_r)));
    w.log_orbit_norm[j] = j == 1 ? 0.0 : log_add(j * log_p, j * log_q);
  }
  return w;
}

double log_p_of(const ClassWeight& w) { return std::log(w.r) - std::log1p(w.r); }
double log_q_of(const ClassWeight& w) { return -std::log1p(w.r); }

double log_ratio_from(const WormaldParams& params, const ClassWeight& w, const std::vector<int>& histogram) {
  double log_prob = params.e * log_p_of(w) + (params.pairs - params.e) * log_q_of(w);
  for (std::size_t j = 2; j < histogram.size(); ++j) {
    if (histogram[j] != 0) log_prob -= histogram[j] * w.log_orbit_norm[j];
  }
  const double ratio = w.log_r_size - w.log_b - log_prob;
  if (ratio > 1e-9) {
    std::ostringstream msg;
    msg << "acceptance ratio above 1 (log " << ratio << ") at " << instance(params.n, params.e, w.i)
        << " p=" << w.p << " log B=" << w.log_b << " log P=" << log_prob;
    throw std::logic_error(msg.str());
  }
  return std::min(ratio, 0.0);
}


double include_probability(const ClassWeight& w, int j) { return 1.0 / (1.0 + std::exp(-j * std::log(w.r))); }

// Binomial(h, a) probabilities for 0..h included orbits.
void binomial_pmf(int h, double a, std::vector<double>& pmf) {
  pmf.assign(h + 1, 0.0);
  const double log_a = std::log(a);
  const double log_b = std::log1p(-a);
  const double log_h = std::lgamma(h + 1.0);
  for (int m = 0; m <= h; ++m) {
    pmf[m] = std::exp(log_h - std::lgamma(m + 1.0) - std::lgamma(h - m + 1.0) + m * log_a + (h - m) * log_b);
  }
}

// dp[k][s]: probability that the orbits of the first k sizes in `sizes`
// contribute exactly s edges, truncated at s = e.
void edge_count_dp(const ClassWeight& w, const std::vector<int>& histogram, int e, std::vector<int>& sizes,
                   std::vector<std::vector<double>>& dp) {
  sizes.clear();
  for (std::size_t j = 1; j < histogram.size(); ++j) {
    if (histogram[j] != 0) sizes.push_back(static_cast<int>(j));
  }
  dp.assign(sizes.size() + 1, std::vector<double>(e + 1, 0.0));
  dp[0][0] = 1.0;
  std::vector<double> pmf;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    const int j = sizes[k];
    const int h = histogram[j];
    binomial_pmf(h, include_probability(w, j), pmf);
    for (int s = 0; s <= e; ++s) {
      if (dp[k][s] == 0.0) continue;
      for (int m = 0; m <= h && s + m * j <= e; ++m) dp[k + 1][s + m * j] += dp[k][s] * pmf[m];
    }
  }
}

void partitions(int remaining, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 2; --part) {
    current.push_back(part);
    partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

// Share of the derangements of i points having the given cycle lengths.
double cycle_type_share(int i, const std::vector<int>& cycles) {
  double log_count = std::lgamma(i + 1.0);
  std::map<int, int> multiplicity;
  for (int c : cycles) ++multiplicity[c];
  for (auto [c, m] : multiplicity) log_count -= m * std::log(double(c)) + std::lgamma(m + 1.0);
  return std::exp(log_count - std::log(derangements(i).convert_to<double>()));
}

}  // namespace

const ClassWeight& WormaldParams::for_i(int i) const {
  for (const auto& w : classes) {
    if (w.i == i) return w;
  }
  throw std::out_of_range("no weight class for i=" + std::to_string(i));
}

double WormaldParams::selection_probability(int i) const {
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (classes[k].i == i) return cumulative[k] - (k == 0 ? 0.0 : cumulative[k - 1]);
  }
  return 0.0;
}

BigInt derangements(int i) {
  if (i < 0) throw std::invalid_argument("derangements of a negative count");
  BigInt prev = 1;  // D(0)
  if (i == 0) return prev;
  BigInt cur = 0;   // D(1)
  for (int k = 2; k <= i; ++k) {
    BigInt next = (k - 1) * (cur + prev);
    prev = cur;
    cur = next;
  }
  return cur;
}

double cubic_value(int n, int e, int i, double r) {
  const double pairs = pair_count(n);
  const double k = kappa(n, i);
  return ((((pairs - e) * r + (k - e)) * r + (pairs - e - k)) * r) - e;
}

double solve_cubic(int n, int e, int i) {
  const int pairs = pair_count(n);
  if (e <= 0 || e >= pairs || i == 1 || i < 0 || i > n) {
    throw std::invalid_argument("cubic undefined at " + instance(n, e, i));
  }
  const double k = kappa(n, i);
  const double a3 = pairs - e;
  const double a2 = k - e;
  const double a1 = pairs - e - k;
  const double scale = std::max({1.0, std::abs(a3), std::abs(a2), std::abs(a1), double(e)});
  const auto f = [&](double r) { return ((a3 * r + a2) * r + a1) * r - e; };
  const auto df = [&](double r) { return (3 * a3 * r + 2 * a2) * r + a1; };
  const double tol = 1e-12 * scale;

  double r = double(e) / double(pairs - e);
  for (int iter = 0; iter < 100; ++iter) {
    const double fr = f(r);
    if (std::abs(fr) <= tol && r > 0) return r;
    const double d = df(r);
    if (d == 0 || !std::isfinite(d)) break;
    r -= fr / d;
    if (!(r > 0) || !std::isfinite(r)) break;
  }

  double lo = 1e-12;
  double hi = 1e12;
  if (!(f(lo) < 0 && f(hi) > 0)) throw std::runtime_error("no positive root bracketed at " + instance(n, e, i));
  for (int iter = 0; iter < 400; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (std::abs(fm) <= tol) return mid;
    (fm < 0 ? lo : hi) = mid;
    if (hi - lo <= 4 * std::numeric_limits<double>::epsilon() * hi) break;
  }
  return 0.5 * (lo + hi);
}

WormaldParams compute_weights(int n, int e) {
  const int pairs = pair_count(n);
  if (n < 2 || e <= 0 || e >= pairs) {
    throw std::invalid_argument("weights need 0 < e < N, got n=" + std::to_string(n) + " e=" + std::to_string(e));
  }
  WormaldParams params;
  params.n = n;
  params.e = e;
  params.pairs = pairs;
  params.classes.push_back(make_class(n, e, 0));
  for (int i = 2; i <= n; ++i) params.classes.push_back(make_class(n, e, i));

  double top = -std::numeric_limits<double>::infinity();
  for (const auto& w : params.classes) top = std::max(top, w.log_b);
  double total = 0;
  for (const auto& w : params.classes) {
    total += std::exp(w.log_b - top);
    params.cumulative.push_back(total);
  }
  for (double& c : params.cumulative) c /= total;
  params.cumulative.back() = 1.0;
  return params;
}


std::vector<int> orbit_histogram(int n, std::span<const int> cycles) {
  std::vector<int> histogram(pair_count(n) + 1, 0);
  int moved = 0;
  for (int c : cycles) {
    if (c < 2) throw std::invalid_argument("cycle lengths must be at least 2");
    moved += c;
  }
  if (moved > n) throw std::invalid_argument("cycles move more than n points");
  const int fixed = n - moved;
  histogram[1] += pair_count(fixed);
  for (std::size_t a = 0; a < cycles.size(); ++a) {
    const int c = cycles[a];
    if (c % 2 == 1) {
      histogram[c] += (c - 1) / 2;
    } else {
      histogram[c] += c / 2 - 1;
      histogram[c / 2] += 1;
    }
    histogram[c] += fixed;
    for (std::size_t b = a + 1; b < cycles.size(); ++b) {
      const int g = std::gcd(c, cycles[b]);
      histogram[c / g * cycles[b]] += g;
    }
  }
  return histogram;
}

std::vector<CycleClass> cycle_classes(const WormaldParams& params) {
  std::vector<CycleClass> out;
  std::vector<int> sizes;
  std::vector<std::vector<double>> dp;
  for (const ClassWeight& w : params.classes) {
    std::vector<std::vector<int>> types;
    std::vector<int> current;
    partitions(w.i, w.i, current, types);
    for (auto& cycles : types) {
      CycleClass c;
      c.i = w.i;
      c.probability = w.i == 0 ? 1.0 : cycle_type_share(w.i, cycles);
      c.histogram = orbit_histogram(params.n, cycles);
      c.cycles = std::move(cycles);
      c.log_ratio = log_ratio_from(params, w, c.histogram);
      edge_count_dp(w, c.histogram, params.e, sizes, dp);
      c.hit = dp.back()[params.e];
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<int> sample_sigma(int n, int i, Rng& rng, int* retries) {
  if (i == 1 || i < 0 || i > n) throw std::invalid_argument("no permutation moves exactly " + std::to_string(i));
  std::vector<int> sigma(n);
  int rejected = 0;
  for (;;) {
    for (int v = 0; v < n; ++v) sigma[v] = v;
    for (int k = i - 1; k > 0; --k) std::swap(sigma[k], sigma[rng.below(k + 1)]);
    bool fixed = false;
    for (int v = 0; v < i && !fixed; ++v) fixed = sigma[v] == v;
    if (!fixed) break;
    ++rejected;
  }
  if (retries) *retries = rejected;
  return sigma;
}

PairOrbitSet pair_orbits(std::span<const int> sigma) {
  const int n = static_cast<int>(sigma.size());
  PairOrbitSet out;
  out.histogram.assign(pair_count(n) + 1, 0);
  out.offsets.push_back(0);
  std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (seen[u * n + v]) continue;
      int a = u;
      int b = v;
      do {
        seen[a * n + b] = 1;
        out.pairs.emplace_back(a, b);
        const int x = sigma[a];
        const int y = sigma[b];
        a = std::min(x, y);
        b = std::max(x, y);
      } while (a != u || b != v);
      const int size = static_cast<int>(out.pairs.size()) - out.offsets.back();
      out.offsets.push_back(static_cast<int>(out.pairs.size()));
      ++out.histogram[size];
    }
  }
  return out;
}

std::optional<Graph> sample_graph_given_sigma(const WormaldParams& params, int i, const PairOrbitSet& orbits,
                                              Rng& rng) {
  const ClassWeight& w = params.for_i(i);
  Graph g(params.n);
  int edges = 0;
  for (int k = 0; k < orbits.orbit_count(); ++k) {
    const auto orbit = orbits.orbit(k);
    if (!rng.bernoulli(w.include_threshold[orbit.size()])) continue;
    edges += static_cast<int>(orbit.size());
    if (edges > params.e) return std::nullopt;
    for (auto [a, b] : orbit) g.add_edge(a, b);
  }
  if (edges != params.e) return std::nullopt;
  return g;
}

std::optional<Graph> sample_graph_given_sigma(const WormaldParams& params, int i, std::span<const int> sigma,
                                              Rng& rng) {
  return sample_graph_given_sigma(params, i, pair_orbits(sigma), rng);
}

double log_acceptance_ratio(const WormaldParams& params, int i, const std::vector<int>& histogram) {
  return log_ratio_from(params, params.for_i(i), histogram);
}

bool acceptance_check(const WormaldParams& params, int i, std::span<const int> sigma, const Graph& g, Rng& rng) {
  if (g.order() != params.n || g.edge_count() != params.e) {
    throw std::invalid_argument("graph does not match the sampler instance");
  }
  for (auto [a, b] : g.edges()) {
    if (!g.has_edge(sigma[a], sigma[b])) throw std::invalid_argument("graph is not fixed by sigma");
  }
  const double ratio = log_acceptance_ratio(params, i, pair_orbits(sigma).histogram);
  return std::log(rng.uniform01()) <= ratio;
}

// ---- sampler loop -------------------------------------------------------------

WormaldSampler::WormaldSampler(int n, int e, SamplerMode mode) : n_(n), e_(e), mode_(mode) {
  check_capacity(n);
  const int pairs = pair_count(n);
  if (e < 0 || e > pairs) throw std::invalid_argument("edge count out of range for n=" + std::to_string(n));
  flip_ = e > pairs / 2;
  sparse_e_ = flip_ ? pairs - e : e;
  if (sparse_e_ == 0) return;
  params_ = compute_weights(n, sparse_e_);
  const ClassWeight& w0 = params_->classes.front();
  log_identity_hit_ = std::lgamma(pairs + 1.0) - std::lgamma(sparse_e_ + 1.0) - std::lgamma(pairs - sparse_e_ + 1.0) +
                      sparse_e_ * log_p_of(w0) + (pairs - sparse_e_) * log_q_of(w0);
  sigma_.resize(n);
  pair_scratch_.assign(static_cast<std::size_t>(n) * n, 0);
  chosen_.reserve(sparse_e_);
  if (mode_ == SamplerMode::automatic) {
    mode_ = n <= kMaxAggregatedOrder ? SamplerMode::aggregated : SamplerMode::literal;
  }
  if (mode_ == SamplerMode::aggregated) {
    if (n > kMaxAggregatedOrder) {
      throw CapacityError("aggregated sampling supports n <= " + std::to_string(kMaxAggregatedOrder));
    }
    cycle_classes_ = cycle_classes(*params_);
    for (const CycleClass& c : cycle_classes_) {
      success_ += params_->selection_probability(c.i) * c.probability * c.hit * std::exp(c.log_ratio);
      class_cdf_.push_back(success_);
    }
    for (double& x : class_cdf_) x /= success_;
    class_cdf_.back() = 1.0;
    orbit_starts_.resize(pair_count(n) + 1);
  }
}

double WormaldSampler::success_probability() const {
  if (!params_) return 1.0;
  if (mode_ == SamplerMode::aggregated) return success_;
  double total = 0.0;
  for (const CycleClass& c : cycle_classes(*params_)) {
    total += params_->selection_probability(c.i) * c.probability * c.hit * std::exp(c.log_ratio);
  }
  return total;
}

SampleOutcome WormaldSampler::sample(Rng& rng) {
  SampleOutcome out;
  if (sparse_e_ == 0) {
    out.graph = flip_ ? complete_graph(n_) : empty_graph(n_);
    out.attempts = 1;
    return out;
  }
  out = mode_ == SamplerMode::aggregated ? sample_aggregated(rng) : sample_sparse(rng);
  if (flip_) out.graph = complement(out.graph);
  return out;
}

SampleOutcome WormaldSampler::sample_sparse(Rng& rng) {
  const WormaldParams& params = *params_;
  SampleOutcome out;
  for (;;) {
    ++out.attempts;
    const double u = rng.uniform01();
    const auto k = std::lower_bound(params.cumulative.begin(), params.cumulative.end(), u) - params.cumulative.begin();
    const ClassWeight& w = params.classes[k];
    const bool ok = w.i == 0 ? try_identity(w, rng) : try_class(w, rng);
    if (!ok) continue;
    out.i_used = w.i;
    Graph g(n_);
    for (auto [a, b] : chosen_) g.add_edge(a, b);
    out.graph = std::move(g);
    return out;
  }
}

// With sigma the identity every pair is its own orbit, so the orbit graph is
// G(N, p_0). Conditioned on e edges that is a uniform e-subset of the pairs,
// so draw the event "exactly e edges" once instead of N coins.
bool WormaldSampler::try_identity(const ClassWeight& w, Rng& rng) {
  if (std::log(rng.uniform01()) > log_identity_hit_) return false;
  const int pairs = params_->pairs;
  auto& order = pair_scratch_;
  if (static_cast<int>(order.size()) < pairs) order.resize(pairs);
  for (int k = 0; k < pairs; ++k) order[k] = k;
  chosen_.clear();
  for (int k = 0; k < sparse_e_; ++k) {
    std::swap(order[k], order[k + rng.below(pairs - k)]);
  }
  std::sort(order.begin(), order.begin() + sparse_e_);
  // Walk pair indices in row-major order.
  int idx = 0;
  int next = 0;
  for (int a = 0; a < n_ && next < sparse_e_; ++a) {
    for (int b = a + 1; b < n_ && next < sparse_e_; ++b, ++idx) {
      if (order[next] == idx) {
        chosen_.emplace_back(a, b);
        ++next;
      }
    }
  }
  // The acceptance ratio is exactly 1 here; the variate is still consumed.
  histogram_.assign(2, 0);
  histogram_[1] = pairs;
  const double ratio = log_ratio_from(*params_, w, histogram_);
  return std::log(rng.uniform01()) <= ratio;
}

bool WormaldSampler::try_class(const ClassWeight& w, Rng& rng) {
  // Derangement of the first i labels by rejection.
  for (;;) {
    for (int v = 0; v < n_; ++v) sigma_[v] = v;
    for (int k = w.i - 1; k > 0; --k) std::swap(sigma_[k], sigma_[rng.below(k + 1)]);
    bool fixed = false;
    for (int v = 0; v < w.i && !fixed; ++v) fixed = sigma_[v] == v;
    if (!fixed) break;
  }
  chosen_.clear();
  const int e = sparse_e_;
  int edges = 0;
  histogram_.assign(params_->pairs + 1, 0);
  // Pairs of fixed points are singleton orbits.
  for (int a = w.i; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) {
      if (!rng.bernoulli(w.include_threshold[1])) continue;
      if (++edges > e) return false;
      chosen_.emplace_back(a, b);
    }
  }
  histogram_[1] = pair_count(n_ - w.i);
  auto& stamp = pair_scratch_;
  std::fill(stamp.begin(), stamp.begin() + static_cast<std::ptrdiff_t>(n_) * n_, 0);
  for (int u = 0; u < w.i; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (stamp[u * n_ + v]) continue;
      const std::size_t start = chosen_.size();
      int a = u;
      int b = v;
      int size = 0;
      do {
        stamp[a * n_ + b] = 1;
        chosen_.emplace_back(a, b);
        ++size;
        const int x = sigma_[a];
        const int y = sigma_[b];
        a = std::min(x, y);
        b = std::max(x, y);
      } while (a != u || b != v);
      ++histogram_[size];
      if (rng.bernoulli(w.include_threshold[size])) {
        edges += size;
        if (edges > e) return false;
      } else {
        chosen_.resize(start);
      }
    }
  }
  if (edges != e) return false;
  const double ratio = log_ratio_from(*params_, w, histogram_);
  return std::log(rng.uniform01()) <= ratio;
}


void WormaldSampler::trace_orbits() {
  orbit_pairs_.clear();
  for (auto& starts : orbit_starts_) starts.clear();
  auto& stamp = pair_scratch_;
  std::fill(stamp.begin(), stamp.begin() + static_cast<std::ptrdiff_t>(n_) * n_, 0);
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (stamp[u * n_ + v]) continue;
      const int start = static_cast<int>(orbit_pairs_.size());
      int a = u;
      int b = v;
      do {
        stamp[a * n_ + b] = 1;
        orbit_pairs_.emplace_back(a, b);
        const int x = sigma_[a];
        const int y = sigma_[b];
        a = std::min(x, y);
        b = std::max(x, y);
      } while (a != u || b != v);
      orbit_starts_[orbit_pairs_.size() - start].push_back(start);
    }
  }
}

SampleOutcome WormaldSampler::sample_aggregated(Rng& rng) {
  const WormaldParams& params = *params_;
  SampleOutcome out;
  out.attempts = 1;
  if (success_ < 1.0) {
    const double extra = std::floor(std::log(rng.uniform01()) / std::log1p(-success_));
    out.attempts += static_cast<long long>(extra);
  }
  const double u = rng.uniform01();
  const auto k = std::lower_bound(class_cdf_.begin(), class_cdf_.end(), u) - class_cdf_.begin();
  const CycleClass& c = cycle_classes_[k];
  const ClassWeight& w = params.for_i(c.i);
  out.i_used = c.i;

  // A uniform permutation of this cycle type on the first i labels.
  labels_.resize(c.i);
  for (int v = 0; v < c.i; ++v) labels_[v] = v;
  for (int t = c.i - 1; t > 0; --t) std::swap(labels_[t], labels_[rng.below(t + 1)]);
  for (int v = 0; v < n_; ++v) sigma_[v] = v;
  int pos = 0;
  for (int len : c.cycles) {
    for (int t = 0; t < len; ++t) sigma_[labels_[pos + t]] = labels_[pos + (t + 1) % len];
    pos += len;
  }
  trace_orbits();

  // Orbits of one size are exchangeable, so draw how many of each size are
  // included (conditioned on e edges in total), then which ones.
  std::vector<int> sizes;
  edge_count_dp(w, c.histogram, sparse_e_, sizes, dp_);
  chosen_.clear();
  int remaining = sparse_e_;
  std::vector<double> pmf;
  std::vector<double> cell;
  for (std::size_t kk = sizes.size(); kk-- > 0;) {
    const int j = sizes[kk];
    const int h = c.histogram[j];
    binomial_pmf(h, include_probability(w, j), pmf);
    cell.assign(h + 1, 0.0);
    double total = 0.0;
    for (int m = 0; m <= h && m * j <= remaining; ++m) {
      cell[m] = dp_[kk][remaining - m * j] * pmf[m];
      total += cell[m];
    }
    const double pick = rng.uniform01() * total;
    int m = -1;
    double acc = 0.0;
    for (int t = 0; t <= h; ++t) {
      if (cell[t] == 0.0) continue;
      m = t;
      acc += cell[t];
      if (pick <= acc) break;
    }
    remaining -= m * j;
    auto& starts = orbit_starts_[j];
    for (int t = 0; t < m; ++t) {
      std::swap(starts[t], starts[t + rng.below(starts.size() - t)]);
      for (int q = 0; q < j; ++q) chosen_.push_back(orbit_pairs_[starts[t] + q]);
    }
  }
  if (remaining != 0) throw std::logic_error("conditioned orbit draw missed the edge count");
  Graph g(n_);
  for (auto [a, b] : chosen_) g.add_edge(a, b);
  out.graph = std::move(g);
  return out;
}

SampleOutcome wormald_sample(int n, int e, Rng& rng) { return WormaldSampler(n, e).sample(rng); }

// ---- oracle -------------------------------------------------------------------

const std::vector<Graph>& oracle_classes(int n, int e) {
  if (n < 0 || n > kMaxOracleOrder) {
    throw CapacityError("oracle sampler supports n <= " + std::to_string(kMaxOracleOrder) + ", got " +
                        std::to_string(n));
  }
  if (e < 0 || e > pair_count(n)) throw std::invalid_argument("edge count out of range");
  static std::mutex mutex;
  static std::map<int, std::vector<std::vector<Graph>>> lists;
  std::lock_guard lock(mutex);
  auto it = lists.find(n);
  if (it == lists.end()) {
    std::vector<std::vector<Graph>> by_e(pair_count(n) + 1);
    enumerate_by_vertices(n, [&](const Graph& g) { by_e[g.edge_count()].push_back(g); });
    it = lists.emplace(n, std::move(by_e)).first;
  }
  return it->second[e];
}

Graph oracle_sample(int n, int e, Rng& rng) {
  const auto& classes = oracle_classes(n, e);
  return classes[rng.below(classes.size())];
}

}  // namespace lightsout
