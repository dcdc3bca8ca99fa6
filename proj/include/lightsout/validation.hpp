#pragma once

#include <cstdint>

#include "lightsout/sampler.hpp"
#include "lightsout/stats.hpp"

namespace lightsout {

struct SamplerValidation {
  int n = 0;
  int e = 0;
  long long samples = 0;
  long long classes = 0;   // G_{n,e} from the enumeration module
  long long observed = 0;  // distinct classes seen
  ChiSquare chi;
};

// Goodness of fit of wormald_sample against the uniform law on the G_{n,e}
// classes. Sample k uses the substream (seed, n, e, k).
SamplerValidation validate_sampler(int n, int e, long long samples, std::uint64_t seed,
                                   SamplerMode mode = SamplerMode::automatic);

}  // namespace lightsout
