#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "digestlab/message_codec.hpp"

using namespace digestlab;

namespace {

std::vector<std::uint8_t> bytes_of(std::string_view text) {
  return {text.begin(), text.end()};
}

// Test-side decoder: reads bits in groups of eight, independent of the
// packed storage layout.
std::vector<std::uint8_t> decode_bits(const BitString& bits) {
  REQUIRE(bits.size() % 8 == 0);
  std::vector<std::uint8_t> out;
  for (std::size_t i = 0; i < bits.size(); i += 8) {
    unsigned byte = 0;
    for (std::size_t j = 0; j < 8; ++j) byte = byte << 1 | unsigned(bits.bit(i + j));
    out.push_back(std::uint8_t(byte));
  }
  return out;
}

// Minimal k >= 1 with (len + 2k) % 512 == 448, recomputed the slow way.
std::size_t minimal_fill_pairs(std::size_t len) {
  std::size_t k = 1;
  while ((len + 2 * k) % 512 != 448) ++k;
  return k;
}

}  // namespace

TEST_CASE("encode_ascii emits each byte msb first") {
  CHECK(encode_ascii(bytes_of("A")).to_string() == "01000001");
  CHECK(encode_ascii(bytes_of("ab")).to_string() == "0110000101100010");
  CHECK(encode_ascii({}).size() == 0);
  const std::vector<std::uint8_t> edge = {0x00, 0xff, 0x80};
  CHECK(encode_ascii(edge).to_string() == "000000001111111110000000");
}

TEST_CASE("encode_ascii round-trips through bit-group decoding") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 500; ++i) {
    std::vector<std::uint8_t> message(rng() % 200);
    for (auto& b : message) b = std::uint8_t(rng());
    BitString bits = encode_ascii(message);
    CHECK(bits.size() == message.size() * 8);
    CHECK(decode_bits(bits) == message);
  }
}

TEST_CASE("pad_stage1 reaches 448 mod 512 with minimal fill") {
  SUBCASE("16-bit input gets 216 pairs") {
    BitString out = pad_stage1(encode_ascii(bytes_of("ab")));
    CHECK(out.size() == 448);
    // the appended region is alternating 01 pairs
    for (std::size_t i = 16; i < 448; ++i) CHECK(out.bit(i) == int(i % 2));
  }
  SUBCASE("empty input gets 224 pairs") {
    CHECK(pad_stage1(BitString{}).size() == 448);
  }
  SUBCASE("448-bit input rolls over to 960") {
    BitString m = encode_ascii(std::vector<std::uint8_t>(56, 0x31));
    REQUIRE(m.size() == 448);
    CHECK(pad_stage1(m).size() == 960);
  }
  SUBCASE("446-bit input takes exactly one pair") {
    BitString m;
    for (int i = 0; i < 446; ++i) m.push_back(0);
    CHECK(pad_stage1(m).size() == 448);
  }
  SUBCASE("odd-length input is rejected") {
    BitString m;
    m.push_back(1);
    CHECK_THROWS_AS(pad_stage1(m), std::invalid_argument);
  }
}

TEST_CASE("extract_tail64 windows at floor(len/3)") {
  SUBCASE("448 zeros give 64 zeros") {
    BitString zeros;
    for (int i = 0; i < 448; ++i) zeros.push_back(0);
    BitString tail = extract_tail64(zeros);
    CHECK(tail.size() == 64);
    CHECK(tail.to_string() == std::string(64, '0'));
  }
  SUBCASE("window is [149, 213) for length 448") {
    BitString marked;
    for (int i = 0; i < 448; ++i)
      marked.push_back(i == 149 || i == 212 ? 1 : 0);
    BitString tail = extract_tail64(marked);
    CHECK(tail.bit(0) == 1);
    CHECK(tail.bit(63) == 1);
    for (int i = 1; i < 63; ++i) CHECK(tail.bit(i) == 0);

    BitString outside;
    for (int i = 0; i < 448; ++i)
      outside.push_back(i == 148 || i == 213 ? 1 : 0);
    CHECK(extract_tail64(outside).to_string() == std::string(64, '0'));
  }
  SUBCASE("window is [320, 384) for length 960") {
    BitString marked;
    for (int i = 0; i < 960; ++i) marked.push_back(i == 320 ? 1 : 0);
    CHECK(extract_tail64(marked).bit(0) == 1);
  }
  SUBCASE("window wraps modulo the length on short inputs") {
    std::mt19937_64 rng(7);
    BitString s;
    for (int i = 0; i < 65; ++i) s.push_back(int(rng() & 1));
    BitString tail = extract_tail64(s);
    for (std::size_t i = 0; i < 64; ++i)
      CHECK(tail.bit(i) == s.bit((65 / 3 + i) % 65));
  }
  SUBCASE("fewer than 64 bits is rejected") {
    BitString s;
    for (int i = 0; i < 63; ++i) s.push_back(0);
    CHECK_THROWS_AS(extract_tail64(s), std::invalid_argument);
  }
}

TEST_CASE("pad composes stage 1 and the 64-bit tail") {
  SUBCASE("short and empty messages pad to 512 bits") {
    CHECK(pad(encode_ascii(bytes_of("ab"))).bits.size() == 512);
    CHECK(pad(BitString{}).bits.size() == 512);
  }
  SUBCASE("a 56-byte message pads to 1024 bits") {
    PaddedMessage p = pad(encode_ascii(std::vector<std::uint8_t>(56, 'x')));
    CHECK(p.bits.size() == 1024);
    CHECK(p.stage1_length == 960);
    CHECK(p.tail_offset == 320);
  }
  SUBCASE("recorded fields are consistent") {
    PaddedMessage p = pad(encode_ascii(bytes_of("ab")));
    CHECK(p.original_bit_length == 16);
    CHECK(p.stage1_length == 448);
    CHECK(p.tail_offset == 149);
    CHECK(p.bits.size() == p.stage1_length + 64);
    // tail bits replicate the stage-1 window
    for (std::size_t i = 0; i < 64; ++i)
      CHECK(p.bits.bit(p.stage1_length + i) == p.bits.bit(p.tail_offset + i));
  }
}

TEST_CASE("split_blocks partitions the padded bits") {
  PaddedMessage small = pad(encode_ascii(bytes_of("ab")));
  CHECK(split_blocks(small).size() == 4);

  PaddedMessage large = pad(encode_ascii(std::vector<std::uint8_t>(56, 'q')));
  std::vector<Block128> blocks = split_blocks(large);
  CHECK(blocks.size() == 8);

  std::string rejoined;
  for (const Block128& b : blocks) rejoined += b.to_binary();
  CHECK(rejoined == large.bits.to_string());
}

TEST_CASE("padding congruences hold over fuzzed messages") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 10000; ++i) {
    std::vector<std::uint8_t> message(rng() % 10001);
    for (auto& b : message) b = std::uint8_t(rng());

    PaddedMessage p = pad(encode_ascii(message));
    REQUIRE(p.stage1_length % 512 == 448);
    REQUIRE(p.bits.size() % 512 == 0);
    REQUIRE(p.bits.size() >= 512);
    REQUIRE(p.bits.size() == p.stage1_length + 64);
    REQUIRE(p.original_bit_length == message.size() * 8);
    REQUIRE(p.tail_offset == p.stage1_length / 3);
    // stage-1 length matches the independent minimal-k rule, so the
    // original length is recoverable from the recorded fields
    REQUIRE(p.stage1_length ==
            p.original_bit_length + 2 * minimal_fill_pairs(p.original_bit_length));
    std::size_t blocks = p.bits.size() / 128;
    REQUIRE(blocks % 4 == 0);
  }
}
