#ifndef MONO_MONO_H
#define MONO_MONO_H

/* C interface to the monochromatic sums-and-products library.
 *
 * Every entry point returns an mc_status. Results are JSON documents held by
 * an opaque mc_document; the caller frees them with mc_document_free. On
 * failure *out is left NULL and mc_last_error() describes the problem for the
 * calling thread. MC_BUDGET_EXHAUSTED is the one failure that still delivers
 * a document (the partial result). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define MC_API __declspec(dllexport)
#else
#  define MC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mc_status {
  MC_OK = 0,
  MC_DOMAIN = 1,
  MC_OVERFLOW = 2,
  MC_UNSUPPORTED_PRIME = 3,
  MC_OUT_OF_RANGE = 4,
  MC_PARSE = 5,
  MC_BUDGET_EXHAUSTED = 6,
  MC_INTERNAL = 7,
  MC_INVALID_ARGUMENT = 8,
  MC_NO_MEMORY = 9
} mc_status;

typedef struct mc_document mc_document;

typedef struct mc_search_options {
  const char* colouring;          /* phi, bigphi, ..., const */
  const char* mode;               /* "pairwise" or "finite" */
  size_t target;
  uint64_t budget;
  unsigned workers;               /* 0 picks the hardware concurrency */
  size_t prime_index_bound;
  const char* numerator_bound;    /* decimal */
  const char* denominator_bound;  /* decimal */
  int integers_only;
} mc_search_options;

typedef struct mc_construct_options {
  size_t terms;
  uint64_t budget;
  unsigned workers;               /* 0 picks the hardware concurrency */
  size_t pool;
  int products_only;              /* nonzero: stop after the product subsystem */
} mc_construct_options;

MC_API void mc_search_options_init(mc_search_options* options);
MC_API void mc_construct_options_init(mc_construct_options* options);

/* input is a rational "p" or "p/q"; pair colourings take "a,b". */
MC_API mc_status mc_colour(const char* colouring, const char* input, mc_document** out);

/* base_index 0 selects the minimal terminating base. */
MC_API mc_status mc_expand(const char* input, size_t base_index, mc_document** out);

MC_API mc_status mc_check(const char* colouring, const char* mode, const char* const* terms,
                          size_t count, mc_document** out);

MC_API mc_status mc_search(const mc_search_options* options, mc_document** out);

MC_API mc_status mc_construct(const mc_construct_options* options, mc_document** out);

MC_API mc_status mc_properties(uint64_t seed, uint64_t samples, mc_document** out);

/* Parses a certificate document and recomputes it. An incorrect certificate
 * is MC_OK with "valid": false; malformed JSON is MC_PARSE. */
MC_API mc_status mc_validate(const char* certificate_json, mc_document** out);

/* Serialization owned by the document, valid until it is freed. */
MC_API const char* mc_document_json(mc_document* doc, int pretty);
MC_API void mc_document_free(mc_document* doc);

MC_API const char* mc_last_error(void);
MC_API const char* mc_status_string(mc_status status);

#ifdef __cplusplus
}
#endif

#endif
