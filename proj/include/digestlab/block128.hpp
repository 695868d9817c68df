#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace digestlab {

// A 128-bit word stored as two 64-bit halves, big-endian: bit 0 of the
// block is the most significant bit of `hi`.
struct Block128 {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;

  static Block128 from_bytes(std::span<const std::uint8_t> bytes);  // exactly 16
  static std::optional<Block128> parse_hex(std::string_view hex32);

  std::array<std::uint8_t, 16> to_bytes() const;
  std::string to_hex() const;     // 32 lowercase hex characters
  std::string to_binary() const;  // 128 '0'/'1' characters

  int popcount() const { return std::popcount(hi) + std::popcount(lo); }

  Block128 rotl(unsigned n) const {
    n &= 127;
    if (n == 0) return *this;
    if (n == 64) return {lo, hi};
    if (n < 64)
      return {(hi << n) | (lo >> (64 - n)), (lo << n) | (hi >> (64 - n))};
    n -= 64;
    return {(lo << n) | (hi >> (64 - n)), (hi << n) | (lo >> (64 - n))};
  }

  Block128 rotr(unsigned n) const { return rotl(128 - (n & 127)); }

  friend Block128 operator^(Block128 a, Block128 b) {
    return {a.hi ^ b.hi, a.lo ^ b.lo};
  }
  Block128& operator^=(Block128 other) {
    hi ^= other.hi;
    lo ^= other.lo;
    return *this;
  }

  bool operator==(const Block128&) const = default;
};

}  // namespace digestlab
