#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "digestlab/digest_core.hpp"

namespace digestlab {

enum class AlgorithmId { kBlockDigest, kMd5 };

std::string_view algorithm_name(AlgorithmId id);                 // "bd128" / "md5"
std::optional<AlgorithmId> parse_algorithm(std::string_view name);

// Hash `message` with the named algorithm under default parameters.
std::array<std::uint8_t, 16> run_algorithm(AlgorithmId id,
                                           std::span<const std::uint8_t> message);

// Deterministic seedable generator for harness inputs, kept separate from
// the key schedule so experiments never perturb the algorithm under test.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  std::uint64_t below(std::uint64_t bound);  // in [0, bound)
  void fill(std::span<std::uint8_t> out);

 private:
  std::uint64_t state_;
};

// Per-trial seed derivation; makes trial t independent of scheduling.
std::uint64_t derive_trial_seed(std::uint64_t root_seed, std::uint64_t trial);

// ---------------------------------------------------------------------
// metrics

// 100 * |distinct characters| / |characters|. Throws std::invalid_argument
// on empty text.
double distinct_char_pct(std::string_view text);

struct AvalancheStats {
  double mean = 0.0;    // flipped-bit fraction of the 128-bit digest
  double stddev = 0.0;  // population standard deviation
  std::uint32_t trials = 0;
  std::uint32_t input_len = 0;
  std::uint64_t rng_seed = 0;
};

// Per trial: draw input_len random bytes, flip one uniformly chosen bit,
// hash both, record hamming distance / 128. Deterministic for a fixed
// rng_seed. Throws std::invalid_argument when trials or input_len is zero.
AvalancheStats avalanche(AlgorithmId id, std::uint32_t trials,
                         std::uint32_t input_len, std::uint64_t rng_seed);

struct CollisionRecord {
  std::string input_a;     // earlier in enumeration order (length, then lex)
  std::string input_b;
  std::string digest_hex;  // the shared digest
};

// Exhaustively hashes every message of length 1..max_len over the (deduped,
// sorted) alphabet and returns each colliding unordered pair once, in
// enumeration order. Throws std::length_error when the message count would
// exceed kCollisionScanLimit, std::invalid_argument on an empty alphabet
// or zero max_len.
inline constexpr std::uint64_t kCollisionScanLimit = 10'000'000;
std::vector<CollisionRecord> collision_scan(std::string_view alphabet,
                                            std::uint32_t max_len,
                                            AlgorithmId id);

// (alpha_new / len_new) / (alpha_base / len_base). Throws
// std::invalid_argument when any count is zero.
double randomness_ratio(std::uint32_t alpha_base, std::uint32_t len_base,
                        std::uint32_t alpha_new, std::uint32_t len_new);

// Frequency of bit j being set across digests of random inputs, j indexed
// from the most significant bit. Deterministic for a fixed rng_seed.
std::array<double, 128> bit_bias(AlgorithmId id, std::uint32_t trials,
                                 std::uint32_t input_len, std::uint64_t rng_seed);

// ---------------------------------------------------------------------
// reports

struct ReportRow {
  std::string algorithm;
  std::string input;
  std::string digest;  // canonical hex rendering; empty for aggregates
  std::string metric;
  double value = 0.0;
};

enum class ReportKind { kDistinct, kAvalanche, kCollisions, kRatio, kBias };

struct AnalysisReport {
  ReportKind kind = ReportKind::kDistinct;
  std::string title;  // one-line run description; empty for ratio
  std::vector<ReportRow> rows;
};

// The built-in five-string reference set and its published distinctiveness
// percentages (hex rendering for md5, byte-character rendering for bd128).
struct DistinctReference {
  std::string_view input;
  double md5_pct;
  double block_pct;
};
std::span<const DistinctReference> distinct_reference();
double distinct_reference_md5_average();
double distinct_reference_block_average();

// One distinct_char_pct row per (input, algorithm) over the rendered digest
// (hex for md5, block_render for bd128) plus a per-algorithm AVERAGE row.
// When `inputs` is exactly the reference set, reference and delta rows are
// added so measured-vs-reference differences are part of the report.
AnalysisReport distinctiveness_table(std::span<const std::string> inputs,
                                     std::span<const AlgorithmId> algorithms,
                                     RenderFormat block_render = RenderFormat::kPaper);
std::vector<std::string> default_distinct_inputs();

AnalysisReport avalanche_report(AlgorithmId id, const AvalancheStats& stats);
AnalysisReport collision_report(AlgorithmId id, std::string_view alphabet,
                                std::uint32_t max_len,
                                std::span<const CollisionRecord> records);
AnalysisReport ratio_report(std::uint32_t alpha_base, std::uint32_t len_base,
                            std::uint32_t alpha_new, std::uint32_t len_new);
AnalysisReport bias_report(AlgorithmId id, std::uint32_t trials,
                           std::uint32_t input_len, std::uint64_t rng_seed,
                           const std::array<double, 128>& freqs);

// Stable machine output: header `algorithm,input,digest,metric,value`,
// 4-decimal values, '.' separator, LF line endings, RFC 4180 quoting.
std::string render_csv(const AnalysisReport& report);

// Human-readable table; layout depends on the report kind.
std::string render_table(const AnalysisReport& report);

}  // namespace digestlab
