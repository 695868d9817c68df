#include "digestlab/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "digestlab/block128.hpp"
#include "digestlab/hex.hpp"
#include "digestlab/md5.hpp"

namespace digestlab {

namespace {

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

// Two decimals, truncated rather than rounded (4/1.125 shows as 355.55%).
std::string format_percent_truncated(double value) {
  double truncated = std::floor(value * 100.0) / 100.0;
  return format_fixed(truncated, 2) + "%";
}

int hamming128(const std::array<std::uint8_t, 16>& a,
               const std::array<std::uint8_t, 16>& b) {
  int distance = 0;
  for (std::size_t i = 0; i < 16; ++i)
    distance += std::popcount(std::uint8_t(a[i] ^ b[i]));
  return distance;
}

constexpr std::array<DistinctReference, 5> kDistinctReference = {{
    {"ab", 62.5, 65.6},
    {"system simulation", 50.0, 59.37},
    {"cd", 46.87, 65.62},
    {"project reports", 50.0, 70.3},
    {"niharjyoti", 40.62, 76.56},
}};
constexpr double kReferenceMd5Average = 49.99;
constexpr double kReferenceBlockAverage = 67.49;

bool is_reference_input_set(std::span<const std::string> inputs) {
  if (inputs.size() != kDistinctReference.size()) return false;
  for (std::size_t i = 0; i < inputs.size(); ++i)
    if (inputs[i] != kDistinctReference[i].input) return false;
  return true;
}

std::span<const std::uint8_t> as_bytes(std::string_view text) {
  return {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()};
}

}  // namespace

std::string_view algorithm_name(AlgorithmId id) {
  return id == AlgorithmId::kMd5 ? "md5" : "bd128";
}

std::optional<AlgorithmId> parse_algorithm(std::string_view name) {
  if (name == "bd128") return AlgorithmId::kBlockDigest;
  if (name == "md5") return AlgorithmId::kMd5;
  return std::nullopt;
}

std::array<std::uint8_t, 16> run_algorithm(AlgorithmId id,
                                           std::span<const std::uint8_t> message) {
  if (id == AlgorithmId::kMd5) return md5(message).bytes;
  return digest(message).value.to_bytes();
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("SplitMix64::below: zero bound");
  return next() % bound;
}

void SplitMix64::fill(std::span<std::uint8_t> out) {
  std::size_t i = 0;
  for (; i + 8 <= out.size(); i += 8) {
    std::uint64_t word = next();
    for (int j = 0; j < 8; ++j) out[i + j] = std::uint8_t(word >> (8 * j));
  }
  if (i < out.size()) {
    std::uint64_t word = next();
    for (; i < out.size(); ++i, word >>= 8) out[i] = std::uint8_t(word);
  }
}

std::uint64_t derive_trial_seed(std::uint64_t root_seed, std::uint64_t trial) {
  // One mixing step over root + trial*odd-constant; trials get decorrelated
  // streams regardless of execution order.
  return SplitMix64(root_seed + 0x9e3779b97f4a7c15ULL * (trial + 1)).next();
}

double distinct_char_pct(std::string_view text) {
  if (text.empty())
    throw std::invalid_argument("distinct_char_pct: empty text");
  std::array<bool, 256> seen{};
  std::size_t distinct = 0;
  for (unsigned char c : text)
    if (!seen[c]) {
      seen[c] = true;
      ++distinct;
    }
  return 100.0 * double(distinct) / double(text.size());
}

AvalancheStats avalanche(AlgorithmId id, std::uint32_t trials,
                         std::uint32_t input_len, std::uint64_t rng_seed) {
  if (trials == 0 || input_len == 0)
    throw std::invalid_argument("avalanche: trials and input_len must be >= 1");

  std::vector<std::uint8_t> input(input_len);
  double sum = 0.0, sum_sq = 0.0;
  for (std::uint32_t t = 0; t < trials; ++t) {
    SplitMix64 rng(derive_trial_seed(rng_seed, t));
    rng.fill(input);
    auto base = run_algorithm(id, input);

    std::uint64_t flip = rng.below(std::uint64_t(input_len) * 8);
    input[flip / 8] ^= std::uint8_t(0x80u >> (flip % 8));
    auto flipped = run_algorithm(id, input);
    input[flip / 8] ^= std::uint8_t(0x80u >> (flip % 8));  // restore

    double fraction = hamming128(base, flipped) / 128.0;
    sum += fraction;
    sum_sq += fraction * fraction;
  }

  AvalancheStats stats;
  stats.trials = trials;
  stats.input_len = input_len;
  stats.rng_seed = rng_seed;
  stats.mean = sum / trials;
  double variance = sum_sq / trials - stats.mean * stats.mean;
  stats.stddev = std::sqrt(std::max(variance, 0.0));
  return stats;
}

namespace {

// Messages are enumerated by length 1..max_len, lexicographic within a
// length; the global ordinal is decodable back into the message, so the
// scan itself only has to keep (digest, ordinal) pairs.
struct ScanEntry {
  std::uint64_t hi, lo, ordinal;
};

std::string decode_ordinal(std::uint64_t ordinal, std::string_view alphabet) {
  const std::uint64_t radix = alphabet.size();
  std::uint64_t level_count = 1;
  std::uint32_t length = 1;
  for (;; ++length) {
    level_count *= radix;
    if (ordinal < level_count) break;
    ordinal -= level_count;
  }
  std::string message(length, alphabet[0]);
  for (std::uint32_t pos = length; pos-- > 0;) {
    message[pos] = alphabet[ordinal % radix];
    ordinal /= radix;
  }
  return message;
}

}  // namespace

std::vector<CollisionRecord> collision_scan(std::string_view alphabet,
                                            std::uint32_t max_len,
                                            AlgorithmId id) {
  if (alphabet.empty() || max_len == 0)
    throw std::invalid_argument("collision_scan: empty alphabet or zero max_len");

  std::string symbols(alphabet);
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());

  const std::uint64_t radix = symbols.size();
  std::uint64_t total = 0, level_count = 1;
  for (std::uint32_t len = 1; len <= max_len; ++len) {
    level_count *= radix;  // radix <= 256, level_count checked right away
    total += level_count;
    if (total > kCollisionScanLimit || level_count > kCollisionScanLimit)
      throw std::length_error("collision_scan: more than 10^7 messages");
  }

  std::vector<ScanEntry> entries;
  entries.reserve(total);
  std::uint64_t ordinal = 0;
  std::vector<std::uint8_t> message;
  std::vector<std::size_t> digits;
  for (std::uint32_t len = 1; len <= max_len; ++len) {
    digits.assign(len, 0);
    message.assign(len, std::uint8_t(symbols[0]));
    for (;;) {
      auto d = run_algorithm(id, message);
      Block128 packed = Block128::from_bytes(d);
      entries.push_back({packed.hi, packed.lo, ordinal++});
      // odometer increment, least significant position last
      std::size_t pos = len;
      while (pos-- > 0) {
        if (++digits[pos] < radix) {
          message[pos] = std::uint8_t(symbols[digits[pos]]);
          break;
        }
        digits[pos] = 0;
        message[pos] = std::uint8_t(symbols[0]);
      }
      if (pos == std::size_t(-1)) break;  // wrapped past the first position
    }
  }

  std::sort(entries.begin(), entries.end(), [](const ScanEntry& a, const ScanEntry& b) {
    return std::tie(a.hi, a.lo, a.ordinal) < std::tie(b.hi, b.lo, b.ordinal);
  });

  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i + 1;
    while (j < entries.size() && entries[j].hi == entries[i].hi &&
           entries[j].lo == entries[i].lo)
      ++j;
    for (std::size_t a = i; a < j; ++a)
      for (std::size_t b = a + 1; b < j; ++b)
        pairs.emplace_back(entries[a].ordinal, entries[b].ordinal);
    i = j;
  }
  std::sort(pairs.begin(), pairs.end());

  std::vector<CollisionRecord> records;
  records.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    CollisionRecord rec;
    rec.input_a = decode_ordinal(a, symbols);
    rec.input_b = decode_ordinal(b, symbols);
    rec.digest_hex = to_hex(run_algorithm(id, as_bytes(rec.input_a)));
    records.push_back(std::move(rec));
  }
  return records;
}

double randomness_ratio(std::uint32_t alpha_base, std::uint32_t len_base,
                        std::uint32_t alpha_new, std::uint32_t len_new) {
  if (alpha_base == 0 || len_base == 0 || alpha_new == 0 || len_new == 0)
    throw std::invalid_argument("randomness_ratio: all counts must be positive");
  return (double(alpha_new) / double(len_new)) /
         (double(alpha_base) / double(len_base));
}

std::array<double, 128> bit_bias(AlgorithmId id, std::uint32_t trials,
                                 std::uint32_t input_len, std::uint64_t rng_seed) {
  if (trials == 0) throw std::invalid_argument("bit_bias: trials must be >= 1");

  std::array<std::uint64_t, 128> counts{};
  std::vector<std::uint8_t> input(input_len);
  for (std::uint32_t t = 0; t < trials; ++t) {
    SplitMix64 rng(derive_trial_seed(rng_seed, t));
    rng.fill(input);
    auto d = run_algorithm(id, input);
    for (int bit = 0; bit < 128; ++bit)
      counts[bit] += (d[bit / 8] >> (7 - bit % 8)) & 1;
  }

  std::array<double, 128> freqs{};
  for (int bit = 0; bit < 128; ++bit)
    freqs[bit] = double(counts[bit]) / double(trials);
  return freqs;
}

// ---------------------------------------------------------------------
// reports

std::span<const DistinctReference> distinct_reference() {
  return kDistinctReference;
}
double distinct_reference_md5_average() { return kReferenceMd5Average; }
double distinct_reference_block_average() { return kReferenceBlockAverage; }

std::vector<std::string> default_distinct_inputs() {
  std::vector<std::string> inputs;
  for (const auto& ref : kDistinctReference) inputs.emplace_back(ref.input);
  return inputs;
}

AnalysisReport distinctiveness_table(std::span<const std::string> inputs,
                                     std::span<const AlgorithmId> algorithms,
                                     RenderFormat block_render) {
  if (inputs.empty() || algorithms.empty())
    throw std::invalid_argument("distinctiveness_table: empty input or algorithm list");

  const char* render_name = block_render == RenderFormat::kHex     ? "hex"
                            : block_render == RenderFormat::kPaper ? "paper"
                                                                   : "binary";
  AnalysisReport report;
  report.kind = ReportKind::kDistinct;
  report.title = std::string("distinct characters per rendered digest "
                             "(md5: hex; bd128: ") +
                 render_name + ")";

  for (AlgorithmId algo : algorithms) {
    double sum = 0.0;
    for (const std::string& input : inputs) {
      auto digest_bytes = run_algorithm(algo, as_bytes(input));
      std::string rendering =
          algo == AlgorithmId::kMd5
              ? to_hex(digest_bytes)
              : render(Block128::from_bytes(digest_bytes), block_render);
      double pct = distinct_char_pct(rendering);
      sum += pct;
      // digest column stays hex so the report is printable everywhere
      report.rows.push_back({std::string(algorithm_name(algo)), input,
                             to_hex(digest_bytes), "distinct_pct", pct});
    }
    report.rows.push_back({std::string(algorithm_name(algo)), "AVERAGE", "",
                           "distinct_pct", sum / double(inputs.size())});
  }

  if (is_reference_input_set(inputs)) {
    for (AlgorithmId algo : algorithms) {
      bool is_md5 = algo == AlgorithmId::kMd5;
      for (const auto& ref : kDistinctReference)
        report.rows.push_back({std::string(algorithm_name(algo)),
                               std::string(ref.input), "", "distinct_pct_ref",
                               is_md5 ? ref.md5_pct : ref.block_pct});
      report.rows.push_back({std::string(algorithm_name(algo)), "AVERAGE", "",
                             "distinct_pct_ref",
                             is_md5 ? kReferenceMd5Average : kReferenceBlockAverage});
    }
    // measured-vs-reference deltas for the reproducible (md5) column only
    std::vector<ReportRow> deltas;
    for (const ReportRow& row : report.rows) {
      if (row.algorithm != "md5" || row.metric != "distinct_pct") continue;
      double ref_value = kReferenceMd5Average;
      for (const auto& ref : kDistinctReference)
        if (ref.input == row.input) ref_value = ref.md5_pct;
      deltas.push_back({row.algorithm, row.input, "", "distinct_pct_delta",
                        row.value - ref_value});
    }
    report.rows.insert(report.rows.end(), deltas.begin(), deltas.end());
  }
  return report;
}

AnalysisReport avalanche_report(AlgorithmId id, const AvalancheStats& stats) {
  AnalysisReport report;
  report.kind = ReportKind::kAvalanche;
  std::string algo(algorithm_name(id));
  std::string label = "trials=" + std::to_string(stats.trials) +
                      ";len=" + std::to_string(stats.input_len) +
                      ";rng=" + std::to_string(stats.rng_seed);
  report.title = "avalanche algo=" + algo + " " + label;
  report.rows.push_back({algo, label, "", "avalanche_mean", stats.mean});
  report.rows.push_back({algo, label, "", "avalanche_stddev", stats.stddev});
  return report;
}

AnalysisReport collision_report(AlgorithmId id, std::string_view alphabet,
                                std::uint32_t max_len,
                                std::span<const CollisionRecord> records) {
  AnalysisReport report;
  report.kind = ReportKind::kCollisions;
  std::string algo(algorithm_name(id));
  std::string label = "alphabet=" + std::string(alphabet) +
                      ";max_len=" + std::to_string(max_len);
  report.title = "collision scan algo=" + algo + " " + label;
  report.rows.push_back({algo, label, "", "collision_count", double(records.size())});
  for (const CollisionRecord& rec : records)
    report.rows.push_back(
        {algo, rec.input_a + "|" + rec.input_b, rec.digest_hex, "collision", 1.0});
  return report;
}

AnalysisReport ratio_report(std::uint32_t alpha_base, std::uint32_t len_base,
                            std::uint32_t alpha_new, std::uint32_t len_new) {
  AnalysisReport report;
  report.kind = ReportKind::kRatio;
  double ratio = randomness_ratio(alpha_base, len_base, alpha_new, len_new);
  std::string label = "base=" + std::to_string(alpha_base) + ":" +
                      std::to_string(len_base) + ";new=" +
                      std::to_string(alpha_new) + ":" + std::to_string(len_new);
  report.rows.push_back({"ratio", label, "", "randomness_ratio", ratio});
  return report;
}

AnalysisReport bias_report(AlgorithmId id, std::uint32_t trials,
                           std::uint32_t input_len, std::uint64_t rng_seed,
                           const std::array<double, 128>& freqs) {
  AnalysisReport report;
  report.kind = ReportKind::kBias;
  std::string algo(algorithm_name(id));
  std::string label = "trials=" + std::to_string(trials) +
                      ";len=" + std::to_string(input_len) +
                      ";rng=" + std::to_string(rng_seed);
  report.title = "bit bias algo=" + algo + " " + label;
  for (int bit = 0; bit < 128; ++bit) {
    char metric[16];
    std::snprintf(metric, sizeof metric, "bit_%03d", bit);
    report.rows.push_back({algo, label, "", metric, freqs[bit]});
  }
  return report;
}

namespace {

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n\r") == std::string_view::npos)
    return std::string(text);
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

std::string render_csv(const AnalysisReport& report) {
  std::string out = "algorithm,input,digest,metric,value\n";
  for (const ReportRow& row : report.rows) {
    out += csv_field(row.algorithm);
    out += ',';
    out += csv_field(row.input);
    out += ',';
    out += csv_field(row.digest);
    out += ',';
    out += csv_field(row.metric);
    out += ',';
    out += format_fixed(row.value, 4);
    out += '\n';
  }
  return out;
}

namespace {

std::string render_distinct_table(const AnalysisReport& report) {
  // Regroup rows into one line per input: measured column per algorithm,
  // reference and delta columns when present.
  std::vector<std::string> inputs;
  std::vector<std::string> algorithms;
  auto value_of = [&](const std::string& algo, const std::string& input,
                      const std::string& metric) -> const double* {
    for (const ReportRow& row : report.rows)
      if (row.algorithm == algo && row.input == input && row.metric == metric)
        return &row.value;
    return nullptr;
  };
  for (const ReportRow& row : report.rows) {
    if (row.metric != "distinct_pct") continue;
    if (std::find(algorithms.begin(), algorithms.end(), row.algorithm) ==
        algorithms.end())
      algorithms.push_back(row.algorithm);
    if (std::find(inputs.begin(), inputs.end(), row.input) == inputs.end())
      inputs.push_back(row.input);
  }
  bool have_ref = false, have_delta = false;
  for (const ReportRow& row : report.rows) {
    have_ref |= row.metric == "distinct_pct_ref";
    have_delta |= row.metric == "distinct_pct_delta";
  }

  std::size_t input_width = 5;  // "input"
  for (const std::string& input : inputs)
    input_width = std::max(input_width, input.size());

  std::ostringstream out;
  out << report.title << "\n\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%-*s", int(input_width), "input");
  out << buf;
  for (const std::string& algo : algorithms) {
    std::snprintf(buf, sizeof buf, "  %10s", algo.c_str());
    out << buf;
    if (have_ref) {
      std::string head = algo + " ref";
      std::snprintf(buf, sizeof buf, "  %10s", head.c_str());
      out << buf;
    }
    if (have_delta && algo == "md5") {
      std::snprintf(buf, sizeof buf, "  %10s", "delta");
      out << buf;
    }
  }
  out << '\n';

  for (const std::string& input : inputs) {
    std::snprintf(buf, sizeof buf, "%-*s", int(input_width), input.c_str());
    out << buf;
    for (const std::string& algo : algorithms) {
      auto emit = [&](const char* metric) {
        if (const double* v = value_of(algo, input, metric))
          std::snprintf(buf, sizeof buf, "  %10.2f", *v);
        else
          std::snprintf(buf, sizeof buf, "  %10s", "-");
        out << buf;
      };
      emit("distinct_pct");
      if (have_ref) emit("distinct_pct_ref");
      if (have_delta && algo == "md5") emit("distinct_pct_delta");
    }
    out << '\n';
  }
  return std::move(out).str();
}

}  // namespace

std::string render_table(const AnalysisReport& report) {
  switch (report.kind) {
    case ReportKind::kRatio: {
      double ratio = report.rows.at(0).value;
      return format_fixed(ratio, 4) + "\n" +
             format_percent_truncated(ratio * 100.0) + "\n";
    }
    case ReportKind::kAvalanche: {
      std::string out = report.title + "\n";
      for (const ReportRow& row : report.rows) {
        if (row.metric == "avalanche_mean")
          out += "mean flip fraction: " + format_fixed(row.value, 4) + "\n";
        if (row.metric == "avalanche_stddev")
          out += "stddev:             " + format_fixed(row.value, 4) + "\n";
      }
      return out;
    }
    case ReportKind::kCollisions: {
      std::string out = report.title + "\n";
      for (const ReportRow& row : report.rows)
        if (row.metric == "collision_count")
          out += "collisions found: " + format_fixed(row.value, 0) + "\n";
      for (const ReportRow& row : report.rows)
        if (row.metric == "collision")
          out += "  " + row.input + " -> " + row.digest + "\n";
      return out;
    }
    case ReportKind::kBias: {
      std::string out = report.title + "\n";
      double min = 1.0, max = 0.0, sum = 0.0;
      std::size_t count = 0;
      char buf[32];
      for (const ReportRow& row : report.rows) {
        if (row.metric.rfind("bit_", 0) != 0) continue;
        if (count % 8 == 0) {
          std::snprintf(buf, sizeof buf, "%s%03zu:", count ? "\n" : "", count);
          out += buf;
        }
        std::snprintf(buf, sizeof buf, " %.4f", row.value);
        out += buf;
        min = std::min(min, row.value);
        max = std::max(max, row.value);
        sum += row.value;
        ++count;
      }
      if (count) {
        std::snprintf(buf, sizeof buf, "\nmin=%.4f", min);
        out += buf;
        std::snprintf(buf, sizeof buf, " max=%.4f", max);
        out += buf;
        std::snprintf(buf, sizeof buf, " mean=%.4f\n", sum / double(count));
        out += buf;
      }
      return out;
    }
    case ReportKind::kDistinct:
      return render_distinct_table(report);
  }
  throw std::invalid_argument("render_table: unknown report kind");
}

}  // namespace digestlab
