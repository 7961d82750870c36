#pragma once
// Deterministic counter-based random streams.
//
// Every draw is a pure function of (master_seed, purpose, replica, counter):
// draws may happen in any order, on any thread, and replay bit-exactly.
// Lattice draws use cell(x, t) as the counter so a value is tied to its
// coordinates, not to the iteration order that produced it.

#include <cmath>
#include <cstdint>

namespace hammersley {

// Substream tags. Each sampled object gets its own purpose so streams never
// collide across modules.
enum class Purpose : std::uint64_t {
  field = 1,
  sources = 2,
  sinks = 3,
  weights = 4,
  coupled_x = 5,
  coupled_y = 6,
  points = 7,
  plant = 8,
};

struct SeedSpec {
  std::uint64_t master_seed = 0;
};

namespace rng_detail {

inline constexpr std::uint64_t golden = 0x9e3779b97f4a7c15ull;

// splitmix64 finalizer
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace rng_detail

class RngStream {
 public:
  RngStream(SeedSpec seed, Purpose purpose, std::uint64_t replica = 0) {
    using rng_detail::golden;
    using rng_detail::mix64;
    std::uint64_t k = mix64(seed.master_seed + golden);
    k = mix64(k + golden * static_cast<std::uint64_t>(purpose));
    key_ = mix64(k + golden * replica);
  }

  // Counter for a lattice cell; grid sides stay far below 2^32.
  static std::uint64_t cell(int x, int t) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(t)) << 32) |
           static_cast<std::uint32_t>(x);
  }

  std::uint64_t word(std::uint64_t counter) const {
    return rng_detail::mix64(key_ + rng_detail::golden * (counter + 1));
  }

  // uniform on [0,1) with 53 random bits
  double uniform01(std::uint64_t counter) const {
    return static_cast<double>(word(counter) >> 11) * 0x1.0p-53;
  }

  bool bernoulli(std::uint64_t counter, double p) const {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    const auto threshold =
        static_cast<std::uint64_t>(static_cast<long double>(p) * 0x1.0p64L);
    return word(counter) < threshold;
  }

  // P(k) = (1-q) q^k, k = 0,1,2,...  (number of failures at success rate 1-q)
  long long geometric_count(std::uint64_t counter, double q) const {
    if (q <= 0.0) return 0;
    const double u = uniform01(counter);
    // P(K >= j) = q^j  <=>  K = floor(log(1-u) / log(q))
    const double k = std::floor(std::log1p(-u) / std::log(q));
    if (k >= 0x1.0p62) return 1ll << 62;
    return static_cast<long long>(k);
  }

 private:
  std::uint64_t key_ = 0;
};

}  // namespace hammersley
