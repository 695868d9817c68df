#include "digestlab/bitstring.hpp"

#include <stdexcept>

namespace digestlab {

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes) {
  BitString out;
  out.bytes_.assign(bytes.begin(), bytes.end());
  out.nbits_ = bytes.size() * 8;
  return out;
}

BitString BitString::from_string(std::string_view zeros_and_ones) {
  BitString out;
  out.reserve_bits(zeros_and_ones.size());
  for (char c : zeros_and_ones) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("BitString::from_string: expected only 0/1");
    out.push_back(c == '1');
  }
  return out;
}

void BitString::push_back(int bit) {
  if ((nbits_ & 7) == 0) bytes_.push_back(0);
  if (bit) bytes_.back() |= std::uint8_t(0x80u >> (nbits_ & 7));
  ++nbits_;
}

void BitString::append(const BitString& other) {
  if ((nbits_ & 7) == 0) {
    // Byte-aligned: other's packing (including its zeroed tail bits) can be
    // taken verbatim.
    bytes_.insert(bytes_.end(), other.bytes_.begin(), other.bytes_.end());
    nbits_ += other.nbits_;
    return;
  }
  reserve_bits(nbits_ + other.nbits_);
  for (std::size_t i = 0; i < other.nbits_; ++i) push_back(other.bit(i));
}

std::string BitString::to_string() const {
  std::string out;
  out.reserve(nbits_);
  for (std::size_t i = 0; i < nbits_; ++i) out.push_back(bit(i) ? '1' : '0');
  return out;
}

}  // namespace digestlab
