#pragma once

#include <cstdint>

namespace pfsim {

// Counter-style 64-bit generator (SplitMix64 update with a stream-dependent
// initial state). Pure integer arithmetic, so a given (seed, stream_id)
// reproduces the same sequence on every platform. Each particle owns its own
// substream, which makes parallel event generation order-independent.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id)
      : state_(mix(mix(seed) ^ mix(stream_id ^ 0x6a09e667f3bcc909ull))) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  // Uniform on [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace pfsim
