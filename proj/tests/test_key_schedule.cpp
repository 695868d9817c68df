#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "digestlab/key_schedule.hpp"

using namespace digestlab;
using boost::multiprecision::cpp_int;

namespace {

// Independent oracle: unbounded-integer factorial, top 128 bits by shifting.
Block128 oracle_expand(std::uint32_t raw) {
  cpp_int fact = 1;
  for (std::uint32_t i = 2; i <= raw; ++i) fact *= i;
  std::size_t bits = msb(fact) + 1;  // fact >= 1
  if (bits > 128) fact >>= bits - 128;
  cpp_int hi = fact >> 64;
  cpp_int lo = fact & cpp_int(0xffffffffffffffffULL);
  return Block128{hi.convert_to<std::uint64_t>(), lo.convert_to<std::uint64_t>()};
}

// Golden sequence from seed 1 (first sixteen states); recomputed by
// tests/oracle/reference_digest.py.
constexpr std::uint32_t kGoldenStates[16] = {39,  554, 332, 377, 198, 953,
                                             421, 947, 187, 524, 129, 196,
                                             875, 280, 283, 400};

}  // namespace

TEST_CASE("next_state follows the recurrence") {
  KeyState s{1, 0};
  s = next_state(s);
  CHECK(s.value == 39);
  CHECK(s.step_index == 1);
  s = next_state(s);
  CHECK(s.value == 554);
  s = next_state(s);
  CHECK(s.value == 332);
  s = next_state(s);
  CHECK(s.value == 377);
  CHECK(s.step_index == 4);
}

TEST_CASE("state sequence from seed 1 matches the golden file") {
  KeyState s{1, 0};
  for (std::uint32_t expected : kGoldenStates) {
    s = next_state(s);
    CHECK(s.value == expected);
  }
}

TEST_CASE("next_state rejects out-of-range states") {
  CHECK_THROWS_AS(next_state(KeyState{0, 0}), std::out_of_range);
  CHECK_THROWS_AS(next_state(KeyState{967, 0}), std::out_of_range);
}

TEST_CASE("sequence from any seed is periodic with period dividing 966") {
  // cycle detection from seed 1; 39 generates a subgroup of the
  // multiplicative group mod 967, whose order is 966
  std::uint32_t value = 1;
  std::vector<std::uint32_t> seen;
  value = value * 39 % 967;
  std::uint32_t first = value;
  std::size_t period = 0;
  do {
    value = value * 39 % 967;
    ++period;
  } while (value != first && period <= 966);
  INFO("measured period: " << period);
  CHECK(period <= 966);
  CHECK(966 % period == 0);
}

TEST_CASE("expand_key known values") {
  CHECK(expand_key(1).to_hex() == "00000000000000000000000000000001");
  CHECK(expand_key(5).to_hex() == "00000000000000000000000000000078");
  // goldens frozen from the big-integer oracle
  CHECK(expand_key(39).to_hex() == "e4ab0cf8d4731d96734c9707fe6ea200");
  CHECK(expand_key(554).to_hex() == "c7df9e9f1966e01aea0614ce357914d6");
  CHECK(expand_key(966).to_hex() == "a68ee6e9058ffeeb10d064c18d0d491f");
}

TEST_CASE("expand_key equals the big-integer oracle for every input") {
  for (std::uint32_t raw = 1; raw <= 966; ++raw) {
    Block128 got = expand_key(raw);
    Block128 want = oracle_expand(raw);
    REQUIRE(got == want);
    REQUIRE(got.to_hex().size() == 32);
  }
}

TEST_CASE("expand_key rejects out-of-range input") {
  CHECK_THROWS_AS(expand_key(0), std::out_of_range);
  CHECK_THROWS_AS(expand_key(967), std::out_of_range);
}

TEST_CASE("key_for_block advances before expanding") {
  CHECK(key_for_block(1, 0) == expand_key(39));
  CHECK(key_for_block(1, 2) == expand_key(332));
  CHECK(key_for_block(1, 5) == key_for_block(1, 5));
  CHECK_THROWS_AS(key_for_block(0, 0), std::out_of_range);
  CHECK_THROWS_AS(key_for_block(967, 0), std::out_of_range);
}

TEST_CASE("KeyStream matches random-access keys") {
  for (std::uint32_t seed : {1u, 7u, 966u}) {
    KeyStream stream(seed);
    for (std::uint64_t i = 0; i < 50; ++i)
      REQUIRE(stream.next() == key_for_block(seed, i));
  }
  CHECK_THROWS_AS(KeyStream(0), std::out_of_range);
}

TEST_CASE("every seed stays in range for 2000 steps") {
  for (std::uint32_t seed = 1; seed <= 966; ++seed) {
    std::uint32_t value = seed;
    for (int step = 0; step < 2000; ++step) {
      value = value * 39 % 967;
      if (value < 1 || value > 966) {
        FAIL("seed " << seed << " escaped at step " << step);
      }
    }
  }
}
