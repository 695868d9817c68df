// extern-C surface of the shared library. Exceptions from the core are
// translated into dl_status codes at this boundary; handles are plain
// heap objects owned by the caller.

#include "digestlab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>

#include "digestlab/analysis.hpp"
#include "digestlab/digest_core.hpp"
#include "digestlab/key_schedule.hpp"
#include "digestlab/md5.hpp"

struct dl_hasher {
  digestlab::AlgorithmParams params;
};

struct dl_report {
  digestlab::AnalysisReport data;
};

namespace {

dl_status status_from_current_exception() {
  try {
    throw;
  } catch (const std::invalid_argument&) {
    return DL_ERR_ARGUMENT;
  } catch (const std::length_error&) {
    return DL_ERR_TOO_LARGE;
  } catch (const std::out_of_range&) {
    return DL_ERR_RANGE;
  } catch (const std::bad_alloc&) {
    return DL_ERR_NOMEM;
  } catch (...) {
    return DL_ERR_INTERNAL;
  }
}

template <typename Fn>
dl_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (...) {
    return status_from_current_exception();
  }
}

std::optional<digestlab::AlgorithmId> to_algorithm(dl_algorithm algo) {
  switch (algo) {
    case DL_ALGO_BD128:
      return digestlab::AlgorithmId::kBlockDigest;
    case DL_ALGO_MD5:
      return digestlab::AlgorithmId::kMd5;
  }
  return std::nullopt;
}

std::optional<digestlab::RenderFormat> to_format(dl_format format) {
  switch (format) {
    case DL_FORMAT_HEX:
      return digestlab::RenderFormat::kHex;
    case DL_FORMAT_PAPER:
      return digestlab::RenderFormat::kPaper;
    case DL_FORMAT_BINARY:
      return digestlab::RenderFormat::kBinary;
  }
  return std::nullopt;
}

std::span<const std::uint8_t> message_span(const void* message, size_t length) {
  return {static_cast<const std::uint8_t*>(message), length};
}

dl_status emit_report(digestlab::AnalysisReport&& data, dl_report** out) {
  *out = new dl_report{std::move(data)};
  return DL_OK;
}

}  // namespace

extern "C" {

const char* dl_version(void) { return "0.1.0"; }

const char* dl_status_message(dl_status status) {
  switch (status) {
    case DL_OK:
      return "ok";
    case DL_ERR_ARGUMENT:
      return "malformed argument";
    case DL_ERR_RANGE:
      return "argument out of range";
    case DL_ERR_TOO_LARGE:
      return "enumeration guard exceeded";
    case DL_ERR_NOMEM:
      return "out of memory";
    case DL_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

dl_status dl_hasher_create(dl_hasher** out) {
  if (!out) return DL_ERR_ARGUMENT;
  return guarded([&] {
    *out = new dl_hasher{};
    return DL_OK;
  });
}

void dl_hasher_destroy(dl_hasher* hasher) { delete hasher; }

dl_status dl_hasher_set_seed(dl_hasher* hasher, uint32_t seed) {
  if (!hasher) return DL_ERR_ARGUMENT;
  if (seed < digestlab::kSeedMin || seed > digestlab::kSeedMax)
    return DL_ERR_RANGE;
  hasher->params.seed = seed;
  return DL_OK;
}

dl_status dl_hasher_set_iv_hex(dl_hasher* hasher, const char* iv_hex32) {
  if (!hasher || !iv_hex32) return DL_ERR_ARGUMENT;
  auto iv = digestlab::Block128::parse_hex(iv_hex32);
  if (!iv) return DL_ERR_ARGUMENT;
  hasher->params.iv = *iv;
  return DL_OK;
}

dl_status dl_hasher_digest(const dl_hasher* hasher, const void* message,
                           size_t length, uint8_t out[DL_DIGEST_BYTES]) {
  if (!hasher || !out || (!message && length > 0)) return DL_ERR_ARGUMENT;
  return guarded([&] {
    auto result = digestlab::digest(message_span(message, length), hasher->params);
    auto bytes = result.value.to_bytes();
    std::memcpy(out, bytes.data(), bytes.size());
    return DL_OK;
  });
}

dl_status dl_md5(const void* message, size_t length,
                 uint8_t out[DL_DIGEST_BYTES]) {
  if (!out || (!message && length > 0)) return DL_ERR_ARGUMENT;
  return guarded([&] {
    auto result = digestlab::md5(message_span(message, length));
    std::memcpy(out, result.bytes.data(), result.bytes.size());
    return DL_OK;
  });
}

dl_status dl_render(const uint8_t digest[DL_DIGEST_BYTES], dl_format format,
                    char* buf, size_t buf_size, size_t* rendered_length) {
  if (!digest || !buf) return DL_ERR_ARGUMENT;
  auto fmt = to_format(format);
  if (!fmt) return DL_ERR_ARGUMENT;
  return guarded([&] {
    auto block =
        digestlab::Block128::from_bytes(std::span(digest, DL_DIGEST_BYTES));
    std::string text = digestlab::render(block, *fmt);
    if (buf_size < text.size() + 1) return DL_ERR_ARGUMENT;
    std::memcpy(buf, text.data(), text.size());
    buf[text.size()] = '\0';
    if (rendered_length) *rendered_length = text.size();
    return DL_OK;
  });
}

void dl_report_destroy(dl_report* report) { delete report; }

size_t dl_report_row_count(const dl_report* report) {
  return report ? report->data.rows.size() : 0;
}

dl_status dl_report_row(const dl_report* report, size_t index,
                        const char** algorithm, const char** input,
                        const char** digest, const char** metric,
                        double* value) {
  if (!report) return DL_ERR_ARGUMENT;
  if (index >= report->data.rows.size()) return DL_ERR_RANGE;
  const digestlab::ReportRow& row = report->data.rows[index];
  if (algorithm) *algorithm = row.algorithm.c_str();
  if (input) *input = row.input.c_str();
  if (digest) *digest = row.digest.c_str();
  if (metric) *metric = row.metric.c_str();
  if (value) *value = row.value;
  return DL_OK;
}

dl_status dl_report_render(const dl_report* report, const char* style,
                           char** out) {
  if (!report || !style || !out) return DL_ERR_ARGUMENT;
  return guarded([&] {
    std::string text;
    if (std::strcmp(style, "csv") == 0)
      text = digestlab::render_csv(report->data);
    else if (std::strcmp(style, "table") == 0)
      text = digestlab::render_table(report->data);
    else
      return DL_ERR_ARGUMENT;
    char* copy = static_cast<char*>(std::malloc(text.size() + 1));
    if (!copy) return DL_ERR_NOMEM;
    std::memcpy(copy, text.c_str(), text.size() + 1);
    *out = copy;
    return DL_OK;
  });
}

void dl_string_free(char* text) { std::free(text); }

dl_status dl_analyze_distinct(const char* const* inputs, size_t n_inputs,
                              dl_format block_render, dl_report** out) {
  if (!out) return DL_ERR_ARGUMENT;
  auto fmt = to_format(block_render);
  if (!fmt) return DL_ERR_ARGUMENT;
  return guarded([&] {
    std::vector<std::string> strings;
    if (!inputs || n_inputs == 0) {
      strings = digestlab::default_distinct_inputs();
    } else {
      strings.reserve(n_inputs);
      for (size_t i = 0; i < n_inputs; ++i) {
        if (!inputs[i]) return DL_ERR_ARGUMENT;
        strings.emplace_back(inputs[i]);
      }
    }
    const digestlab::AlgorithmId algos[] = {digestlab::AlgorithmId::kMd5,
                                            digestlab::AlgorithmId::kBlockDigest};
    return emit_report(digestlab::distinctiveness_table(strings, algos, *fmt),
                       out);
  });
}

dl_status dl_analyze_avalanche(dl_algorithm algo, uint32_t trials,
                               uint32_t input_len, uint64_t rng_seed,
                               dl_report** out) {
  if (!out) return DL_ERR_ARGUMENT;
  auto id = to_algorithm(algo);
  if (!id) return DL_ERR_ARGUMENT;
  return guarded([&] {
    auto stats = digestlab::avalanche(*id, trials, input_len, rng_seed);
    return emit_report(digestlab::avalanche_report(*id, stats), out);
  });
}

dl_status dl_analyze_collisions(const char* alphabet, uint32_t max_len,
                                dl_algorithm algo, dl_report** out) {
  if (!out || !alphabet) return DL_ERR_ARGUMENT;
  auto id = to_algorithm(algo);
  if (!id) return DL_ERR_ARGUMENT;
  return guarded([&] {
    auto records = digestlab::collision_scan(alphabet, max_len, *id);
    return emit_report(digestlab::collision_report(*id, alphabet, max_len, records),
                       out);
  });
}

dl_status dl_analyze_bias(dl_algorithm algo, uint32_t trials,
                          uint32_t input_len, uint64_t rng_seed,
                          dl_report** out) {
  if (!out) return DL_ERR_ARGUMENT;
  auto id = to_algorithm(algo);
  if (!id) return DL_ERR_ARGUMENT;
  return guarded([&] {
    auto freqs = digestlab::bit_bias(*id, trials, input_len, rng_seed);
    return emit_report(
        digestlab::bias_report(*id, trials, input_len, rng_seed, freqs), out);
  });
}

dl_status dl_analyze_ratio(uint32_t alpha_base, uint32_t len_base,
                           uint32_t alpha_new, uint32_t len_new,
                           double* ratio) {
  if (!ratio) return DL_ERR_ARGUMENT;
  return guarded([&] {
    *ratio = digestlab::randomness_ratio(alpha_base, len_base, alpha_new, len_new);
    return DL_OK;
  });
}

dl_status dl_analyze_ratio_report(uint32_t alpha_base, uint32_t len_base,
                                  uint32_t alpha_new, uint32_t len_new,
                                  dl_report** out) {
  if (!out) return DL_ERR_ARGUMENT;
  return guarded([&] {
    return emit_report(
        digestlab::ratio_report(alpha_base, len_base, alpha_new, len_new), out);
  });
}

}  // extern "C"
