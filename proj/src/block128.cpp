#include "digestlab/block128.hpp"

#include <stdexcept>

#include "digestlab/hex.hpp"

namespace digestlab {

Block128 Block128::from_bytes(std::span<const std::uint8_t> bytes) {
  if (bytes.size() != 16)
    throw std::invalid_argument("Block128::from_bytes: need exactly 16 bytes");
  Block128 out;
  for (int i = 0; i < 8; ++i) out.hi = (out.hi << 8) | bytes[i];
  for (int i = 8; i < 16; ++i) out.lo = (out.lo << 8) | bytes[i];
  return out;
}

std::optional<Block128> Block128::parse_hex(std::string_view hex32) {
  if (hex32.size() != 32) return std::nullopt;
  auto bytes = from_hex(hex32);
  if (!bytes) return std::nullopt;
  return from_bytes(*bytes);
}

std::array<std::uint8_t, 16> Block128::to_bytes() const {
  std::array<std::uint8_t, 16> out{};
  for (int i = 0; i < 8; ++i) out[i] = std::uint8_t(hi >> (56 - 8 * i));
  for (int i = 0; i < 8; ++i) out[8 + i] = std::uint8_t(lo >> (56 - 8 * i));
  return out;
}

std::string Block128::to_hex() const { return digestlab::to_hex(to_bytes()); }

std::string Block128::to_binary() const {
  std::string out;
  out.reserve(128);
  for (int i = 63; i >= 0; --i) out.push_back((hi >> i) & 1 ? '1' : '0');
  for (int i = 63; i >= 0; --i) out.push_back((lo >> i) & 1 ? '1' : '0');
  return out;
}

}  // namespace digestlab
