#pragma once

#include <cstdint>

namespace sld {

/// splitmix64 generator. Used everywhere randomness is needed so that runs
/// are reproducible from a single 64-bit seed, independent of platform and
/// of the number of worker threads.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [0, bound), unbiased via rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t min = (0 - bound) % bound;
    std::uint64_t r;
    do {
      r = next();
    } while (r < min);
    return r % bound;
  }

 private:
  std::uint64_t state_;
};

/// Counter-based substream seed: stream k of a master seed. Parallel workers
/// each own a stream, so scheduling cannot change the draws.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 g(seed ^ (0xD1B54A32D192ED03ULL * (stream + 1)));
  g.next();
  return g.next();
}

}  // namespace sld
