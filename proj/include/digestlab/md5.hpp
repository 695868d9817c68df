#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

namespace digestlab {

// Self-contained RFC 1321 MD5, used as the comparison baseline. Kept
// in-repo so the harness is dependency-free and bit-exact everywhere.
struct Md5Digest {
  std::array<std::uint8_t, 16> bytes{};

  std::string hex() const;  // 32 lowercase hex characters

  bool operator==(const Md5Digest&) const = default;
};

Md5Digest md5(std::span<const std::uint8_t> message);

}  // namespace digestlab
