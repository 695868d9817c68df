#pragma once

#include <cstdint>

#include "digestlab/block128.hpp"

namespace digestlab {

// Per-block key generation: a multiplicative congruential recurrence
// modulo the prime 967 expanded through an exact factorial. 967 is prime
// and 39 is not a multiple of it, so nonzero states stay in [1, 966].
inline constexpr std::uint32_t kKeyMultiplier = 39;
inline constexpr std::uint32_t kKeyModulus = 967;
inline constexpr std::uint32_t kSeedMin = 1;
inline constexpr std::uint32_t kSeedMax = 966;

struct KeyState {
  std::uint32_t value = kSeedMin;  // in [1, 966]
  std::uint64_t step_index = 0;    // keys emitted so far
};

// value' = value * 39 mod 967. Throws std::out_of_range if the state is
// outside [1, 966].
KeyState next_state(KeyState s);

// The 128 most significant bits of raw!, left-padded with zeros when the
// factorial has fewer than 128 bits. Factorials are computed exactly and
// cached (there are only 966 of them). Throws std::out_of_range outside
// [1, 966].
Block128 expand_key(std::uint32_t raw);

// Advance the state block_index + 1 times from the seed, then expand:
// the seed itself is never expanded. key_for_block(1, 0) == expand_key(39).
Block128 key_for_block(std::uint32_t seed, std::uint64_t block_index);

// Incremental form of key_for_block for sequential block processing;
// next() after n prior calls equals key_for_block(seed, n).
class KeyStream {
 public:
  explicit KeyStream(std::uint32_t seed);
  Block128 next();
  const KeyState& state() const { return state_; }

 private:
  KeyState state_;
};

}  // namespace digestlab
