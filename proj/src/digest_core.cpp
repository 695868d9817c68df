#include "digestlab/digest_core.hpp"

#include <stdexcept>

#include "digestlab/key_schedule.hpp"
#include "digestlab/message_codec.hpp"

namespace digestlab {

Block128 compress(Block128 block, Block128 key) {
  return (block ^ key).rotl(unsigned(key.popcount()) % 128);
}

Block128 chain(Block128 prev, Block128 stepwise) { return prev ^ stepwise; }

Digest digest(std::span<const std::uint8_t> message, const AlgorithmParams& params) {
  KeyStream keys(params.seed);  // validates the seed
  PaddedMessage padded = pad(encode_ascii(message));

  // Blocks start on 128-bit boundaries of a byte-aligned bitstring, so they
  // are consumed straight out of the packed storage, one at a time.
  Block128 state = params.iv;
  auto bytes = padded.bits.bytes();
  for (std::size_t off = 0; off < bytes.size(); off += 16) {
    Block128 block = Block128::from_bytes(bytes.subspan(off, 16));
    state = chain(state, compress(block, keys.next()));
  }
  return Digest{state, params_fingerprint(params)};
}

std::string render(Block128 value, RenderFormat format) {
  switch (format) {
    case RenderFormat::kHex:
      return value.to_hex();
    case RenderFormat::kPaper: {
      auto bytes = value.to_bytes();
      return std::string(bytes.begin(), bytes.end());
    }
    case RenderFormat::kBinary:
      return value.to_binary();
  }
  throw std::invalid_argument("render: unknown format");
}

std::string render(const Digest& d, RenderFormat format) {
  return render(d.value, format);
}

std::optional<RenderFormat> parse_render_format(std::string_view name) {
  if (name == "hex") return RenderFormat::kHex;
  if (name == "paper") return RenderFormat::kPaper;
  if (name == "binary") return RenderFormat::kBinary;
  return std::nullopt;
}

std::string params_fingerprint(const AlgorithmParams& params) {
  return "seed=" + std::to_string(params.seed) + ";iv=" + params.iv.to_hex();
}

}  // namespace digestlab
