#ifndef MODRC_RNG_H_
#define MODRC_RNG_H_

#include <cstdint>

namespace modrc {

/// SplitMix64 (Steele, Lea, Flood 2014): a 64-bit counter passed through a
/// fixed finalizer. Fully specified here so that other implementations can
/// reproduce every random instance bit for bit.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  constexpr std::uint64_t next() {
    state_ += kGamma;
    return mix(state_);
  }

  /// Uniform-ish draw in [lo, hi]: lo + next() mod (hi - lo + 1). The modulo
  /// bias is below 2^-40 for the spans used here and is part of the contract.
  constexpr std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  /// Generator for instance `index` of a seeded run: seeded with the
  /// index-th output of SplitMix64(seed). Instances are independent of
  /// evaluation order, which keeps parallel runs reproducible.
  static constexpr SplitMix64 for_instance(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix(seed + (index + 1) * kGamma));
  }

 private:
  std::uint64_t state_;
};

}  // namespace modrc

#endif  // MODRC_RNG_H_
