#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "digestlab/hex.hpp"
#include "digestlab/md5.hpp"

using namespace digestlab;

namespace {

std::string md5_hex(std::string_view text) {
  std::vector<std::uint8_t> bytes(text.begin(), text.end());
  return md5(bytes).hex();
}

}  // namespace

TEST_CASE("rfc 1321 appendix vectors") {
  CHECK(md5_hex("") == "d41d8cd98f00b204e9800998ecf8428e");
  CHECK(md5_hex("a") == "0cc175b9c0f1b6a831c399e269772661");
  CHECK(md5_hex("abc") == "900150983cd24fb0d6963f7d28e17f72");
  CHECK(md5_hex("message digest") == "f96b697d7cb7938d525a2f31aaf161d0");
  CHECK(md5_hex("abcdefghijklmnopqrstuvwxyz") ==
        "c3fcd3d76192e4007dfb496cca67e13b");
  CHECK(md5_hex("ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789") ==
        "d174ab98d277d9f5a5611c2c9f419d9f");
  CHECK(md5_hex("123456789012345678901234567890123456789012345678901234567890"
                "12345678901234567890") == "57edf4a22be3c955ac49da2e2107b67a");
}

TEST_CASE("binary and long inputs") {
  CHECK(md5(std::vector<std::uint8_t>{0x00}).hex() ==
        "93b885adfe0da089cdf634904fd59f71");

  std::vector<std::uint8_t> all_bytes(256);
  for (int i = 0; i < 256; ++i) all_bytes[i] = std::uint8_t(i);
  CHECK(md5(all_bytes).hex() == "e2c865db4162bed963bfaa9ef6ac18f0");

  std::vector<std::uint8_t> patterned(1000);
  for (int i = 0; i < 1000; ++i) patterned[i] = std::uint8_t((i * 7 + 3) % 256);
  CHECK(md5(patterned).hex() == "10046f077f2082ac19676b8079f1cb1a");

  CHECK(md5(std::vector<std::uint8_t>(1000000, 'a')).hex() ==
        "7707d6ae4e027c70eea2a935c2296f21");
}

TEST_CASE("hex rendering round-trips to the digest bytes") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    std::vector<std::uint8_t> message(rng() % 300);
    for (auto& b : message) b = std::uint8_t(rng());
    Md5Digest d = md5(message);
    std::string hex = d.hex();
    REQUIRE(hex.size() == 32);
    auto parsed = from_hex(hex);
    REQUIRE(parsed.has_value());
    REQUIRE(std::equal(parsed->begin(), parsed->end(), d.bytes.begin()));
  }
}

TEST_CASE("every length near the padding boundary works") {
  // 55/56/57 and 63/64/65 cross the one-extra-chunk edge
  for (std::size_t len : {55u, 56u, 57u, 63u, 64u, 65u, 119u, 120u}) {
    std::vector<std::uint8_t> message(len, 'x');
    CHECK(md5(message).hex().size() == 32);
    CHECK(md5(message) == md5(message));
  }
}
