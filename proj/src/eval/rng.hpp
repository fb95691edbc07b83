#pragma once

#include <cstdint>

#include "util/rational.hpp"

namespace recipe::eval {

// 64-bit LCG shared by every port of the game so traces replay identically:
//   state' = state * 6364136223846793005 + 1442695040888963407 (mod 2^64)
//   output = state' >> 32
struct RngState {
  std::uint64_t state = 0;

  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  std::uint32_t next32() {
    state = state * kMultiplier + kIncrement;
    return static_cast<std::uint32_t>(state >> 32);
  }

  // floor(output * n / 2^32); n must be a positive integer.
  BigInt below(const BigInt& n) {
    BigInt scaled = BigInt(next32()) * n;
    return scaled >> 32;
  }

  friend bool operator==(const RngState&, const RngState&) = default;
};

}  // namespace recipe::eval
