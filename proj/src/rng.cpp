#include "doekit/rng.hpp"

#include <numeric>

namespace doekit {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

SplitMix64 substream(std::uint64_t seed, std::string_view key) {
  SplitMix64 mixer(seed ^ fnv1a64(key));
  // One warm-up step decorrelates nearby seeds.
  std::uint64_t derived = mixer.next();
  return SplitMix64(derived);
}

std::vector<std::size_t> sample_without_replacement(SplitMix64& rng,
                                                    std::size_t n,
                                                    std::size_t k) {
  if (k > n) k = n;
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  std::vector<std::size_t> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.next_below(n - i));
    std::swap(pool[i], pool[j]);
    out.push_back(pool[i]);
  }
  return out;
}

} // namespace doekit
