#include "lightsout/validation.hpp"

#include <stdexcept>
#include <unordered_map>

#include "lightsout/canonical.hpp"
#include "lightsout/enumeration.hpp"

namespace lightsout {

SamplerValidation validate_sampler(int n, int e, long long samples, std::uint64_t seed, SamplerMode mode) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  SamplerValidation out;
  out.n = n;
  out.e = e;
  out.samples = samples;
  out.classes = count_graphs(n, e).convert_to<long long>();

  WormaldSampler sampler(n, e, mode);
  std::unordered_map<CanonicalForm, long long, CanonicalFormHash> counts;
  for (long long k = 0; k < samples; ++k) {
    Rng rng = Rng::substream(seed, {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(e),
                                    static_cast<std::uint64_t>(k)});
    ++counts[canonical_form(sampler.sample(rng).graph)];
  }
  out.observed = static_cast<long long>(counts.size());
  if (out.observed > out.classes) {
    throw std::logic_error("sampler produced more classes than exist for n=" + std::to_string(n) +
                           " e=" + std::to_string(e));
  }
  std::vector<long long> observed;
  observed.reserve(counts.size());
  for (const auto& [form, c] : counts) observed.push_back(c);
  out.chi = chi_square_uniform(observed, out.classes);
  return out;
}

}  // namespace lightsout
