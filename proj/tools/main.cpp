// digestlab command line tool: hash stdin or files with the block digest
// or the md5 baseline, and drive the analysis harness. Links the shared
// library through its C API only.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "digestlab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitGuard = 3;

int exit_code_for(dl_status status) {
  if (status == DL_OK) return kExitOk;
  if (status == DL_ERR_TOO_LARGE) return kExitGuard;
  return kExitUsage;
}

int fail(dl_status status, const std::string& what) {
  std::cerr << "digestlab: " << what << ": " << dl_status_message(status) << "\n";
  return exit_code_for(status);
}

// path "-" or empty selects standard input; bytes are taken verbatim.
bool read_input(const std::string& path, std::vector<unsigned char>& out) {
  if (path.empty() || path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin),
               std::istreambuf_iterator<char>());
    return !std::cin.bad();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) return false;
  out.assign(std::istreambuf_iterator<char>(file),
             std::istreambuf_iterator<char>());
  return !file.bad();
}

std::optional<std::uint32_t> parse_u32(const std::string& text) {
  if (text.empty() || text.size() > 10) return std::nullopt;
  std::uint64_t value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + std::uint64_t(c - '0');
  }
  if (value > 0xffffffffULL) return std::nullopt;
  return std::uint32_t(value);
}

// "ALPHA:LEN", both positive integers
bool parse_count_pair(const std::string& text, std::uint32_t& alpha,
                      std::uint32_t& len) {
  auto colon = text.find(':');
  if (colon == std::string::npos) return false;
  auto a = parse_u32(text.substr(0, colon));
  auto l = parse_u32(text.substr(colon + 1));
  if (!a || !l) return false;
  alpha = *a;
  len = *l;
  return true;
}

dl_format format_from_name(const std::string& name) {
  if (name == "paper") return DL_FORMAT_PAPER;
  if (name == "binary") return DL_FORMAT_BINARY;
  return DL_FORMAT_HEX;
}

dl_algorithm algorithm_from_name(const std::string& name) {
  return name == "md5" ? DL_ALGO_MD5 : DL_ALGO_BD128;
}

using ReportPtr = std::unique_ptr<dl_report, decltype(&dl_report_destroy)>;

// Prints the table to stdout and, when csv_path is set, writes the CSV file.
int emit_report(dl_report* raw_report, const std::string& csv_path) {
  ReportPtr report(raw_report, dl_report_destroy);

  char* table = nullptr;
  if (dl_status s = dl_report_render(report.get(), "table", &table); s != DL_OK)
    return fail(s, "rendering report");
  std::fputs(table, stdout);
  dl_string_free(table);

  if (!csv_path.empty()) {
    char* csv = nullptr;
    if (dl_status s = dl_report_render(report.get(), "csv", &csv); s != DL_OK)
      return fail(s, "rendering csv");
    std::ofstream file(csv_path, std::ios::binary);
    bool ok = bool(file) && bool(file << csv);
    dl_string_free(csv);
    if (!ok) {
      std::cerr << "digestlab: cannot write " << csv_path << "\n";
      return kExitIo;
    }
  }
  return kExitOk;
}

struct DigestOptions {
  std::string file = "-";
  std::uint32_t seed = 0;
  bool seed_given = false;
  std::string iv_hex;
  std::string format = "hex";
};

int run_digest(const DigestOptions& opt) {
  dl_hasher* raw = nullptr;
  if (dl_status s = dl_hasher_create(&raw); s != DL_OK)
    return fail(s, "creating hasher");
  std::unique_ptr<dl_hasher, decltype(&dl_hasher_destroy)> hasher(
      raw, dl_hasher_destroy);

  // --seed beats DIGESTLAB_SEED beats the built-in default of 1
  if (opt.seed_given) {
    if (dl_status s = dl_hasher_set_seed(hasher.get(), opt.seed); s != DL_OK)
      return fail(s, "--seed " + std::to_string(opt.seed));
  } else if (const char* env = std::getenv("DIGESTLAB_SEED")) {
    auto seed = parse_u32(env);
    if (!seed) {
      std::cerr << "digestlab: DIGESTLAB_SEED is not an unsigned integer: '"
                << env << "'\n";
      return kExitUsage;
    }
    if (dl_status s = dl_hasher_set_seed(hasher.get(), *seed); s != DL_OK)
      return fail(s, "DIGESTLAB_SEED=" + std::string(env));
  }

  if (!opt.iv_hex.empty()) {
    if (dl_status s = dl_hasher_set_iv_hex(hasher.get(), opt.iv_hex.c_str());
        s != DL_OK)
      return fail(s, "--iv " + opt.iv_hex);
  }

  std::vector<unsigned char> message;
  if (!read_input(opt.file, message)) {
    std::cerr << "digestlab: cannot read " << opt.file << "\n";
    return kExitIo;
  }

  std::uint8_t digest[DL_DIGEST_BYTES];
  if (dl_status s = dl_hasher_digest(hasher.get(), message.data(),
                                     message.size(), digest);
      s != DL_OK)
    return fail(s, "computing digest");

  char buf[DL_RENDER_BUFSIZE];
  size_t length = 0;
  if (dl_status s = dl_render(digest, format_from_name(opt.format), buf,
                              sizeof buf, &length);
      s != DL_OK)
    return fail(s, "rendering digest");
  std::fwrite(buf, 1, length, stdout);
  std::fputc('\n', stdout);
  return kExitOk;
}

int run_md5(const std::string& path) {
  std::vector<unsigned char> message;
  if (!read_input(path, message)) {
    std::cerr << "digestlab: cannot read " << path << "\n";
    return kExitIo;
  }
  std::uint8_t digest[DL_DIGEST_BYTES];
  if (dl_status s = dl_md5(message.data(), message.size(), digest); s != DL_OK)
    return fail(s, "computing md5");
  char buf[DL_RENDER_BUFSIZE];
  size_t length = 0;
  if (dl_status s = dl_render(digest, DL_FORMAT_HEX, buf, sizeof buf, &length);
      s != DL_OK)
    return fail(s, "rendering digest");
  std::fwrite(buf, 1, length, stdout);
  std::fputc('\n', stdout);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"128-bit block digest with a deterministic factorial key "
               "schedule, an md5 baseline, and a statistics harness"};
  app.require_subcommand(1);

  DigestOptions digest_opt;
  auto* digest_cmd =
      app.add_subcommand("digest", "hash a file (or stdin) with the block digest");
  auto* seed_opt =
      digest_cmd->add_option("--seed", digest_opt.seed,
                             "key-schedule seed in [1, 966] (default 1, or "
                             "DIGESTLAB_SEED if set)");
  digest_cmd->add_option("--iv", digest_opt.iv_hex,
                         "chain start as 32 hex characters");
  digest_cmd->add_option("--format", digest_opt.format, "output rendering")
      ->check(CLI::IsMember({"hex", "paper", "binary"}))
      ->default_str("hex");
  digest_cmd->add_option("FILE", digest_opt.file, "input path, - for stdin");

  std::string md5_file = "-";
  auto* md5_cmd = app.add_subcommand("md5", "hash a file (or stdin) with md5");
  md5_cmd->add_option("FILE", md5_file, "input path, - for stdin");

  auto* analyze = app.add_subcommand("analyze", "run harness experiments");
  analyze->require_subcommand(1);

  std::string csv_path;
  std::string strings_file;
  std::string render_name = "paper";
  auto* distinct_cmd = analyze->add_subcommand(
      "distinct", "distinct-character percentages of rendered digests");
  distinct_cmd->add_option("--strings", strings_file,
                           "file with one input per line (default: built-in "
                           "reference set)");
  distinct_cmd->add_option("--render", render_name,
                           "rendering measured for the block digest")
      ->check(CLI::IsMember({"hex", "paper", "binary"}));

  std::string algo_name = "bd128";
  std::uint32_t trials = 1000;
  std::uint32_t input_len = 64;
  std::uint64_t rng_seed = 1;
  auto* avalanche_cmd = analyze->add_subcommand(
      "avalanche", "flipped-bit fraction under single-bit input flips");
  avalanche_cmd->add_option("--algo", algo_name, "bd128 or md5")
      ->check(CLI::IsMember({"bd128", "md5"}));
  avalanche_cmd->add_option("--trials", trials, "number of trials");
  avalanche_cmd->add_option("--len", input_len, "random input length in bytes");
  avalanche_cmd->add_option("--seed", rng_seed, "harness rng seed");

  std::string alphabet = "abcdefghijklmnopqrstuvwxyz";
  std::uint32_t max_len = 2;
  auto* collisions_cmd = analyze->add_subcommand(
      "collisions", "exhaustive collision scan over a small message space");
  collisions_cmd->add_option("--alphabet", alphabet, "symbols to enumerate");
  collisions_cmd->add_option("--max-len", max_len, "maximum message length");
  collisions_cmd->add_option("--algo", algo_name, "bd128 or md5")
      ->check(CLI::IsMember({"bd128", "md5"}));

  std::string base_pair = "36:32";
  std::string new_pair = "256:64";
  auto* ratio_cmd = analyze->add_subcommand(
      "ratio", "characters-per-position ratio between two digest alphabets");
  ratio_cmd->add_option("--base", base_pair, "baseline ALPHABET:LENGTH");
  ratio_cmd->add_option("--new", new_pair, "compared ALPHABET:LENGTH");

  auto* bias_cmd = analyze->add_subcommand(
      "bias", "per-position digest bit frequencies over random inputs");
  bias_cmd->add_option("--algo", algo_name, "bd128 or md5")
      ->check(CLI::IsMember({"bd128", "md5"}));
  bias_cmd->add_option("--trials", trials, "number of trials");
  bias_cmd->add_option("--len", input_len, "random input length in bytes");
  bias_cmd->add_option("--seed", rng_seed, "harness rng seed");

  for (CLI::App* sub :
       {distinct_cmd, avalanche_cmd, collisions_cmd, ratio_cmd, bias_cmd})
    sub->add_option("--csv", csv_path, "also write rows as CSV to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  digest_opt.seed_given = seed_opt->count() > 0;

  if (*digest_cmd) return run_digest(digest_opt);
  if (*md5_cmd) return run_md5(md5_file);

  if (*distinct_cmd) {
    std::vector<std::string> inputs;
    std::vector<const char*> pointers;
    if (!strings_file.empty()) {
      std::ifstream file(strings_file, std::ios::binary);
      if (!file) {
        std::cerr << "digestlab: cannot read " << strings_file << "\n";
        return kExitIo;
      }
      std::string line;
      while (std::getline(file, line))
        if (!line.empty()) inputs.push_back(line);
      if (inputs.empty()) {
        std::cerr << "digestlab: " << strings_file << " holds no inputs\n";
        return kExitUsage;
      }
      for (const std::string& s : inputs) pointers.push_back(s.c_str());
    }
    dl_report* report = nullptr;
    dl_status s = dl_analyze_distinct(pointers.empty() ? nullptr : pointers.data(),
                                      pointers.size(),
                                      format_from_name(render_name), &report);
    if (s != DL_OK) return fail(s, "analyze distinct");
    return emit_report(report, csv_path);
  }

  if (*avalanche_cmd) {
    dl_report* report = nullptr;
    dl_status s = dl_analyze_avalanche(algorithm_from_name(algo_name), trials,
                                       input_len, rng_seed, &report);
    if (s != DL_OK) return fail(s, "analyze avalanche");
    return emit_report(report, csv_path);
  }

  if (*collisions_cmd) {
    dl_report* report = nullptr;
    dl_status s = dl_analyze_collisions(alphabet.c_str(), max_len,
                                        algorithm_from_name(algo_name), &report);
    if (s != DL_OK) return fail(s, "analyze collisions");
    return emit_report(report, csv_path);
  }

  if (*ratio_cmd) {
    std::uint32_t alpha_base = 0, len_base = 0, alpha_new = 0, len_new = 0;
    if (!parse_count_pair(base_pair, alpha_base, len_base) ||
        !parse_count_pair(new_pair, alpha_new, len_new)) {
      std::cerr << "digestlab: expected ALPHABET:LENGTH pairs, got --base "
                << base_pair << " --new " << new_pair << "\n";
      return kExitUsage;
    }
    dl_report* report = nullptr;
    dl_status s =
        dl_analyze_ratio_report(alpha_base, len_base, alpha_new, len_new, &report);
    if (s != DL_OK) return fail(s, "analyze ratio");
    return emit_report(report, csv_path);
  }

  if (*bias_cmd) {
    dl_report* report = nullptr;
    dl_status s = dl_analyze_bias(algorithm_from_name(algo_name), trials,
                                  input_len, rng_seed, &report);
    if (s != DL_OK) return fail(s, "analyze bias");
    return emit_report(report, csv_path);
  }

  return kExitUsage;
}
