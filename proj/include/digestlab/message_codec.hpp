#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "digestlab/bitstring.hpp"
#include "digestlab/block128.hpp"

namespace digestlab {

// Result of the two-stage padding. Invariants:
//   stage1_length % 512 == 448
//   bits.size() == stage1_length + 64, so bits.size() % 512 == 0
//   bits.size() >= 512
//   tail_offset == stage1_length / 3
struct PaddedMessage {
  BitString bits;
  std::size_t original_bit_length = 0;
  std::size_t stage1_length = 0;
  std::size_t tail_offset = 0;
};

// One bit per input bit, each byte emitted most-significant-bit first
// ('A' -> 01000001). Accepts any byte value, including none.
BitString encode_ascii(std::span<const std::uint8_t> message);

// Appends k >= 1 copies of "01", k minimal such that the result length is
// congruent to 448 mod 512. Throws std::invalid_argument on odd input
// length (the fill unit is two bits wide).
BitString pad_stage1(const BitString& m);

// The 64 consecutive bits of s starting at index floor(s.size() / 3),
// wrapping around modulo s.size() if the window overruns the end. Throws
// std::invalid_argument when s holds fewer than 64 bits.
BitString extract_tail64(const BitString& s);

// pad_stage1 followed by its own 64-bit tail.
PaddedMessage pad(const BitString& m);

// Partition into 128-bit blocks; concatenating them reproduces p.bits.
std::vector<Block128> split_blocks(const PaddedMessage& p);

}  // namespace digestlab
