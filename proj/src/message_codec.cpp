#include "digestlab/message_codec.hpp"

#include <stdexcept>

namespace digestlab {

BitString encode_ascii(std::span<const std::uint8_t> message) {
  // MSB-first bit order within each byte matches the packed representation,
  // so encoding is a straight copy.
  return BitString::from_bytes(message);
}

BitString pad_stage1(const BitString& m) {
  if (m.size() % 2 != 0)
    throw std::invalid_argument(
        "pad_stage1: input bit length must be even (fill unit is \"01\")");
  BitString out = m;
  out.reserve_bits(out.size() + 512);
  do {
    out.push_back(0);
    out.push_back(1);
  } while (out.size() % 512 != 448);  // at least one copy, then minimal k
  return out;
}

BitString extract_tail64(const BitString& s) {
  if (s.size() < 64)
    throw std::invalid_argument("extract_tail64: need at least 64 bits");
  const std::size_t n = s.size();
  const std::size_t start = n / 3;
  BitString out;
  out.reserve_bits(64);
  // Stage-1 outputs never wrap (start + 64 <= n once n >= 96); the modulo
  // keeps the window defined for direct library calls on shorter inputs.
  for (std::size_t i = 0; i < 64; ++i) out.push_back(s.bit((start + i) % n));
  return out;
}

PaddedMessage pad(const BitString& m) {
  PaddedMessage out;
  out.original_bit_length = m.size();
  BitString stage1 = pad_stage1(m);
  out.stage1_length = stage1.size();
  out.tail_offset = stage1.size() / 3;
  BitString tail = extract_tail64(stage1);
  out.bits = std::move(stage1);
  out.bits.append(tail);
  return out;
}

std::vector<Block128> split_blocks(const PaddedMessage& p) {
  const std::size_t nbits = p.bits.size();
  if (nbits % 128 != 0)
    throw std::invalid_argument("split_blocks: padded length not a multiple of 128");
  std::vector<Block128> blocks;
  blocks.reserve(nbits / 128);
  auto bytes = p.bits.bytes();
  for (std::size_t off = 0; off < bytes.size(); off += 16)
    blocks.push_back(Block128::from_bytes(bytes.subspan(off, 16)));
  return blocks;
}

}  // namespace digestlab
