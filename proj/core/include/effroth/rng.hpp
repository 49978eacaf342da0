#pragma once

#include <cstdint>

namespace effroth {

// Counter-based generator: every draw is a pure hash of (seed, stream, counter),
// so parallel consumers get identical streams regardless of thread count.
struct CounterRng {
  uint64_t seed = 0;
  uint64_t stream = 0;

  static uint64_t mix(uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  uint64_t at(uint64_t counter) const {
    uint64_t h = mix(seed ^ 0x6a09e667f3bcc909ull);
    h = mix(h ^ stream);
    return mix(h ^ counter);
  }

  // Uniform in [0,1).
  double uniform(uint64_t counter) const {
    return static_cast<double>(at(counter) >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo,hi).
  double uniform(uint64_t counter, double lo, double hi) const {
    return lo + (hi - lo) * uniform(counter);
  }

  // Uniform integer in [0, n).
  uint64_t below(uint64_t counter, uint64_t n) const { return at(counter) % n; }

  CounterRng fork(uint64_t substream) const { return CounterRng{seed, mix(stream ^ substream)}; }
};

}  // namespace effroth
