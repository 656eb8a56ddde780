#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace doekit {

// SplitMix64. Hand-rolled so that simulation output is identical across
// platforms and standard library versions; std::uniform_int_distribution
// makes no such guarantee.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform draw in [0, bound). Modulo bias is below 2^-53 for any bound
  // this project ever uses (file counts), which is irrelevant next to the
  // portability requirement.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
  std::uint64_t state_;
};

std::uint64_t fnv1a64(std::string_view data);

// Deterministic substream for (seed, key): selections for one key must not
// shift when other keys come or go.
SplitMix64 substream(std::uint64_t seed, std::string_view key);

// Chooses k distinct indices from [0, n) by partial Fisher-Yates.
// Result is in draw order, not sorted.
std::vector<std::size_t> sample_without_replacement(SplitMix64& rng,
                                                    std::size_t n,
                                                    std::size_t k);

} // namespace doekit
