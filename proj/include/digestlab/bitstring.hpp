#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace digestlab {

// Arbitrary-length ordered bit sequence, indexed from the leftmost
// (most significant) bit. Bits are packed MSB-first into bytes; unused
// trailing bits of the last byte are kept zero so equality is bytewise.
class BitString {
 public:
  BitString() = default;

  static BitString from_bytes(std::span<const std::uint8_t> bytes);
  static BitString from_string(std::string_view zeros_and_ones);

  std::size_t size() const { return nbits_; }
  bool empty() const { return nbits_ == 0; }

  int bit(std::size_t index) const {
    return (bytes_[index >> 3] >> (7 - (index & 7))) & 1;
  }

  void reserve_bits(std::size_t nbits) { bytes_.reserve((nbits + 7) / 8); }
  void push_back(int bit);
  void append(const BitString& other);

  // Raw packed storage, ceil(size()/8) bytes.
  std::span<const std::uint8_t> bytes() const { return bytes_; }

  std::string to_string() const;

  bool operator==(const BitString&) const = default;

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t nbits_ = 0;
};

}  // namespace digestlab
