#pragma once

#include <cstdint>
#include <string_view>

namespace agfsync::core {

// SplitMix64 output mix. Fixed algorithm, identical on every platform.
std::uint64_t splitmix64(std::uint64_t x);

// Counter-based random stream: value i is a pure function of (seed, i), so
// any element can be regenerated without replaying the sequence.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t bits(std::uint64_t counter) const;

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01(std::uint64_t counter) const;

    // Standard normal via Box-Muller on counters (2k, 2k+1).
    double gaussian(std::uint64_t counter) const;

    std::uint64_t seed() const { return seed_; }

  private:
    std::uint64_t seed_;
};

// Named sub-stream derivation: one global seed fans out into independent
// streams keyed by label (stage name, prompt id, ...).
std::uint64_t derive_seed(std::uint64_t root_seed, std::string_view label);

}  // namespace agfsync::core
