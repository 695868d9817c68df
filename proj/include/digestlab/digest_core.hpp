#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "digestlab/block128.hpp"

namespace digestlab {

// Fixed public chain start; an artifact constant, not derived from anything.
inline constexpr Block128 kDefaultIv{0x0123456789abcdefULL,
                                     0xfedcba9876543210ULL};
inline constexpr std::uint32_t kDefaultSeed = 1;

struct AlgorithmParams {
  std::uint32_t seed = kDefaultSeed;  // key-schedule seed, [1, 966]
  Block128 iv = kDefaultIv;
};

struct Digest {
  Block128 value;
  std::string params_fingerprint;  // "seed=<n>;iv=<hex32>"
};

enum class RenderFormat {
  kHex,     // 32 lowercase hex characters (canonical)
  kPaper,   // 16 characters, one Latin-1 code point per digest byte
  kBinary,  // 128 '0'/'1' characters
};

// t = block xor key, rotated left by popcount(key) mod 128. Bijective in
// `block` for fixed `key`: rotate right then xor key inverts it.
Block128 compress(Block128 block, Block128 key);

// prev xor stepwise.
Block128 chain(Block128 prev, Block128 stepwise);

// Full pipeline: encode, pad, then fold each 128-bit block into the chain
// with its scheduled key. Blocks are consumed in place from the padded
// bitstring. Throws std::out_of_range on a seed outside [1, 966].
Digest digest(std::span<const std::uint8_t> message,
              const AlgorithmParams& params = {});

std::string render(Block128 value, RenderFormat format);
std::string render(const Digest& d, RenderFormat format);

// "hex", "paper" or "binary"; nullopt otherwise.
std::optional<RenderFormat> parse_render_format(std::string_view name);

std::string params_fingerprint(const AlgorithmParams& params);

}  // namespace digestlab
