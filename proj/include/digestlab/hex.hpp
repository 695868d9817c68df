#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace digestlab {

std::string to_hex(std::span<const std::uint8_t> bytes);

// Accepts an even-length string of [0-9a-fA-F]; nullopt otherwise.
std::optional<std::vector<std::uint8_t>> from_hex(std::string_view text);

}  // namespace digestlab
