/*
 * digestlab C API
 *
 * Shared-library surface over the digestlab core: an experimental 128-bit
 * block digest with a deterministic factorial key schedule, an MD5
 * baseline, and a statistics harness for comparing the two.
 *
 * Every fallible entry point returns a dl_status; handles are opaque and
 * released with their matching *_destroy function. The library keeps no
 * global mutable state, so handles may be used from different threads as
 * long as each handle is used from one thread at a time.
 */

#ifndef DIGESTLAB_H
#define DIGESTLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dl_status {
    DL_OK = 0,
    DL_ERR_ARGUMENT = 1,  /* malformed argument: bad hex, empty input, NULL */
    DL_ERR_RANGE = 2,     /* numeric argument outside its domain */
    DL_ERR_TOO_LARGE = 3, /* enumeration guard exceeded */
    DL_ERR_NOMEM = 4,
    DL_ERR_INTERNAL = 5
} dl_status;

#define DL_DIGEST_BYTES 16

typedef enum dl_format {
    DL_FORMAT_HEX = 0,    /* 32 lowercase hex characters */
    DL_FORMAT_PAPER = 1,  /* 16 bytes, one Latin-1 character per digest byte */
    DL_FORMAT_BINARY = 2  /* 128 '0'/'1' characters */
} dl_format;

typedef enum dl_algorithm {
    DL_ALGO_BD128 = 0,    /* the block digest implemented here */
    DL_ALGO_MD5 = 1       /* the baseline */
} dl_algorithm;

const char *dl_version(void);
const char *dl_status_message(dl_status status);

/* ---------------- block digest ---------------- */

/* Opaque parameter set: key-schedule seed (default 1) and 128-bit IV. */
typedef struct dl_hasher dl_hasher;

dl_status dl_hasher_create(dl_hasher **out);
void      dl_hasher_destroy(dl_hasher *hasher);

/* seed must lie in [1, 966]; 0 is a fixed point of the schedule and is
 * rejected along with everything above 966. */
dl_status dl_hasher_set_seed(dl_hasher *hasher, uint32_t seed);

/* iv_hex32: exactly 32 hex characters. */
dl_status dl_hasher_set_iv_hex(dl_hasher *hasher, const char *iv_hex32);

/* Hashes length bytes at message (NULL allowed when length is 0). */
dl_status dl_hasher_digest(const dl_hasher *hasher, const void *message,
                           size_t length, uint8_t out[DL_DIGEST_BYTES]);

/* ---------------- md5 baseline ---------------- */

dl_status dl_md5(const void *message, size_t length,
                 uint8_t out[DL_DIGEST_BYTES]);

/* ---------------- rendering ---------------- */

/* Large enough for any rendering plus the terminating NUL. */
#define DL_RENDER_BUFSIZE 129

/* Writes the rendering and a trailing NUL into buf. DL_FORMAT_PAPER output
 * can itself contain NUL bytes; *rendered_length (optional) receives the
 * rendered byte count. Fails with DL_ERR_ARGUMENT when buf_size is too
 * small for the requested format. */
dl_status dl_render(const uint8_t digest[DL_DIGEST_BYTES], dl_format format,
                    char *buf, size_t buf_size, size_t *rendered_length);

/* ---------------- analysis harness ---------------- */

/* Opaque result table: rows of (algorithm, input, digest, metric, value). */
typedef struct dl_report dl_report;

void   dl_report_destroy(dl_report *report);
size_t dl_report_row_count(const dl_report *report);

/* Field pointers stay valid until the report is destroyed. Any output
 * parameter may be NULL. */
dl_status dl_report_row(const dl_report *report, size_t index,
                        const char **algorithm, const char **input,
                        const char **digest, const char **metric,
                        double *value);

/* style is "csv" or "table". *out is heap-allocated; release it with
 * dl_string_free. */
dl_status dl_report_render(const dl_report *report, const char *style,
                           char **out);
void dl_string_free(char *text);

/* Distinct-character percentages of rendered digests under both algorithms;
 * inputs == NULL / n_inputs == 0 selects the built-in five-string reference
 * set, which also adds reference and delta rows. block_render selects the
 * rendering measured for bd128 (md5 is always measured on hex). */
dl_status dl_analyze_distinct(const char *const *inputs, size_t n_inputs,
                              dl_format block_render, dl_report **out);

/* Mean and standard deviation of the flipped-bit fraction over single-bit
 * input flips. Deterministic for a fixed rng_seed. */
dl_status dl_analyze_avalanche(dl_algorithm algo, uint32_t trials,
                               uint32_t input_len, uint64_t rng_seed,
                               dl_report **out);

/* Exhaustive scan of all messages of length 1..max_len over alphabet;
 * fails with DL_ERR_TOO_LARGE beyond 10^7 messages. */
dl_status dl_analyze_collisions(const char *alphabet, uint32_t max_len,
                                dl_algorithm algo, dl_report **out);

/* Per-position digest-bit frequencies over random inputs. */
dl_status dl_analyze_bias(dl_algorithm algo, uint32_t trials,
                          uint32_t input_len, uint64_t rng_seed,
                          dl_report **out);

/* (alpha_new / len_new) / (alpha_base / len_base). */
dl_status dl_analyze_ratio(uint32_t alpha_base, uint32_t len_base,
                           uint32_t alpha_new, uint32_t len_new,
                           double *ratio);
dl_status dl_analyze_ratio_report(uint32_t alpha_base, uint32_t len_base,
                                  uint32_t alpha_new, uint32_t len_new,
                                  dl_report **out);

#ifdef __cplusplus
}
#endif

#endif /* DIGESTLAB_H */
