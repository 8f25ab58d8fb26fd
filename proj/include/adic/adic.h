#ifndef ADIC_ADIC_H
#define ADIC_ADIC_H

/* C interface to the adic library. All handles are opaque; every call that
 * can fail returns an adic_status and leaves a message retrievable through
 * adic_last_error on the context. Strings returned through char** are owned
 * by the caller and released with adic_string_free. */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum adic_status {
  ADIC_OK = 0,
  ADIC_INVALID_ARGUMENT = 1,
  ADIC_AMBIENT_MISMATCH,
  ADIC_ZERO_IN_GENERATOR_SET,
  ADIC_ZERO_DENOMINATOR,
  ADIC_ZERO_INPUT,
  ADIC_UNCERTAIN_TAIL,
  ADIC_CENTER_OUTSIDE_DISC,
  ADIC_ZERO_SERIES,
  ADIC_ZERO_POLYNOMIAL,
  ADIC_NOT_POLYNOMIAL,
  ADIC_EVALUATION_OF_NON_POLYNOMIAL_AT_CLASSICAL_POINT,
  ADIC_NON_POLYNOMIAL_GENERATOR,
  ADIC_POINT_NOT_IN_D,
  ADIC_GAMMA1_NOT_CONTAINED,
  ADIC_NOT_OPEN_IDEAL,
  ADIC_UNKNOWN_OPENNESS,
  ADIC_EMPTY_SAMPLE_SET,
  ADIC_NOT_IN_RING,
  ADIC_PARSE_ERROR,
  ADIC_SCHEMA_ERROR,
  ADIC_INTERNAL_ERROR = 100
} adic_status;

typedef struct adic_ctx adic_ctx;
typedef struct adic_series adic_series;
typedef struct adic_point adic_point;

/* default_prime = 0 means requests must name their prime. */
adic_status adic_ctx_new(uint64_t default_prime, uint64_t default_seed, adic_ctx** out);
void adic_ctx_free(adic_ctx* ctx);
/* Message of the last failed call on ctx ("" if none). Valid until the next call. */
const char* adic_last_error(const adic_ctx* ctx);
/* Wire name of a status, e.g. "NotOpenIdeal". */
const char* adic_status_name(adic_status status);

/* Runs one JSON request. A domain or schema failure is not an error of this
 * call: it is reported inside *response and through *exit_status (0 ok,
 * 1 domain error, 2 parse or schema error). */
adic_status adic_run_request(adic_ctx* ctx, const char* request, int pretty, char** response,
                             int* exit_status);
void adic_string_free(char* s);

/* Series {"coeffs":[...],"tail_vp":...} and points {"kind":...} in the
 * request encoding. */
adic_status adic_series_parse(adic_ctx* ctx, uint64_t prime, const char* json, adic_series** out);
void adic_series_free(adic_series* f);
adic_status adic_point_parse(adic_ctx* ctx, uint64_t prime, const char* json, adic_point** out);
void adic_point_free(adic_point* x);

/* |f(x)| in textual form, e.g. "(p^{0}, (1/2)^{1})". */
adic_status adic_evaluate(adic_ctx* ctx, const adic_series* f, const adic_point* x, char** value);
/* Type tag 1, 2, 3 or 5 and whether x lies in the closed unit disc. */
adic_status adic_classify(adic_ctx* ctx, const adic_point* x, int* type_tag, int* in_d);

#ifdef __cplusplus
}
#endif

#endif
