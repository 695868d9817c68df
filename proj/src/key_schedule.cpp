#include "digestlab/key_schedule.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <vector>

namespace digestlab {

namespace {

void check_range(std::uint32_t value, const char* what) {
  if (value < kSeedMin || value > kSeedMax)
    throw std::out_of_range(std::string(what) + ": value must lie in [1, 966]");
}

std::uint32_t advance(std::uint32_t value) {
  return value * kKeyMultiplier % kKeyModulus;  // 966 * 39 fits easily in 32 bits
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t mod) {
  std::uint64_t result = 1;
  base %= mod;
  for (; exponent; exponent >>= 1) {
    if (exponent & 1) result = result * base % mod;
    base = base * base % mod;
  }
  return std::uint32_t(result);
}

// Unsigned big integer with just enough arithmetic for exact factorials:
// little-endian 64-bit limbs, multiply by a machine word, read bits.
struct BigUint {
  std::vector<std::uint64_t> limbs{1};

  void mul_small(std::uint32_t factor) {
    unsigned __int128 carry = 0;
    for (auto& limb : limbs) {
      unsigned __int128 t = (unsigned __int128)limb * factor + carry;
      limb = std::uint64_t(t);
      carry = t >> 64;
    }
    if (carry) limbs.push_back(std::uint64_t(carry));
  }

  std::size_t bit_length() const {
    std::size_t top = limbs.size();
    while (top > 0 && limbs[top - 1] == 0) --top;
    if (top == 0) return 0;
    return (top - 1) * 64 + (64 - std::countl_zero(limbs[top - 1]));
  }

  // 64 bits starting at `pos` from the least significant end.
  std::uint64_t read64(std::size_t pos) const {
    const std::size_t word = pos / 64, shift = pos % 64;
    std::uint64_t low = word < limbs.size() ? limbs[word] : 0;
    if (shift == 0) return low;
    std::uint64_t high = word + 1 < limbs.size() ? limbs[word + 1] : 0;
    return (low >> shift) | (high << (64 - shift));
  }
};

// Most significant 128 bits; numbers below 128 bits land right-aligned,
// which is exactly the left-zero-padded block.
Block128 top_128_bits(const BigUint& n) {
  const std::size_t len = n.bit_length();
  const std::size_t shift = len > 128 ? len - 128 : 0;
  return Block128{n.read64(shift + 64), n.read64(shift)};
}

// All 966 expanded keys, built once on first use. fact(n) = fact(n-1) * n,
// so the whole table costs one pass of small multiplications.
const std::array<Block128, kKeyModulus>& key_table() {
  static const std::array<Block128, kKeyModulus> table = [] {
    std::array<Block128, kKeyModulus> t{};
    BigUint factorial;
    for (std::uint32_t n = kSeedMin; n <= kSeedMax; ++n) {
      factorial.mul_small(n);
      t[n] = top_128_bits(factorial);
    }
    return t;
  }();
  return table;
}

}  // namespace

KeyState next_state(KeyState s) {
  check_range(s.value, "next_state");
  return KeyState{advance(s.value), s.step_index + 1};
}

Block128 expand_key(std::uint32_t raw) {
  check_range(raw, "expand_key");
  return key_table()[raw];
}

Block128 key_for_block(std::uint32_t seed, std::uint64_t block_index) {
  check_range(seed, "key_for_block");
  // value = seed * 39^(block_index + 1) mod 967, split so the exponent
  // cannot wrap for any block_index.
  std::uint32_t value = advance(std::uint32_t(
      std::uint64_t(seed) * pow_mod(kKeyMultiplier, block_index, kKeyModulus) %
      kKeyModulus));
  return expand_key(value);
}

KeyStream::KeyStream(std::uint32_t seed) : state_{seed, 0} {
  check_range(seed, "KeyStream");
}

Block128 KeyStream::next() {
  state_ = next_state(state_);
  return expand_key(state_.value);
}

}  // namespace digestlab
