/* C interface to the triality library. All data crosses the boundary as
 * JSON text (schema "v1"); see README.md for the document shapes. */
#ifndef TRIALITY_H
#define TRIALITY_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define TRI_API __declspec(dllexport)
#else
#define TRI_API __attribute__((visibility("default")))
#endif

typedef struct tri_context tri_context;

/* Values are stable. TRI_E_PARSE and TRI_E_UNKNOWN_COMMAND are input errors,
 * everything else except TRI_OK is a domain error. */
typedef enum tri_status {
  TRI_OK = 0,
  TRI_E_PARSE = 1,
  TRI_E_SCALAR_MODE_MISMATCH = 2,
  TRI_E_DIVISION_BY_ZERO = 3,
  TRI_E_ISOTROPIC_VECTOR = 4,
  TRI_E_NOT_A_SIMILITUDE = 5,
  TRI_E_INVALID_TRIPLE = 6,
  TRI_E_NON_SQUARE_SPINOR_NORM = 7,
  TRI_E_ZERO_SCALAR = 8,
  TRI_E_WRONG_RANK = 9,
  TRI_E_RANK_MISMATCH = 10,
  TRI_E_RANK_TOO_SMALL = 11,
  TRI_E_DETERMINANT_MISMATCH = 12,
  TRI_E_NEEDS_HALF_POWER_MODE = 13,
  TRI_E_NOT_PGSP6_PARAM = 14,
  TRI_E_WEIGHT_CONSTRAINT_VIOLATED = 15,
  TRI_E_MISSING_SATAKE_DATA = 16,
  TRI_E_SHAPE_INVALID = 17,
  TRI_E_DEGREE_MISMATCH = 18,
  TRI_E_SIZE_MISMATCH = 19,
  TRI_E_CENTRAL_CHARACTER_MISMATCH = 20,
  TRI_E_NOT_G2_TYPE = 21,
  TRI_E_POLE_AT = 22,
  TRI_E_MISSING_SELFDUAL_TYPE = 23,
  TRI_E_MISSING_ROOT_NUMBER = 24,
  TRI_E_UNKNOWN_COMMAND = 25,
  TRI_E_UNSUPPORTED = 26,
  TRI_E_INVALID_ARGUMENT = 27,
  TRI_E_INTERNAL = 28
} tri_status;

TRI_API const char* tri_version(void);

TRI_API tri_context* tri_context_new(void);
TRI_API void tri_context_free(tri_context* ctx);

/* Default complex-mode tolerance for runs on this context (an "eps" option
 * overrides it per run). Non-positive values are rejected. */
TRI_API tri_status tri_context_set_tolerance(tri_context* ctx, double eps);

/* Runs `command` (and `subcommand`, or NULL) on `input_json` with flags in
 * `options_json` (either may be NULL for "{}"). On success *out_json
 * receives a newly allocated document, released with tri_string_free. On
 * failure *out_json is NULL and tri_last_error describes the error. The
 * tolerance is process-global while a run executes, so contexts with
 * different tolerances must not run concurrently. */
TRI_API tri_status tri_run(tri_context* ctx, const char* command, const char* subcommand,
                           const char* input_json, const char* options_json, char** out_json);

/* JSON error document {"schema","error":{"code","message","location"?}} for
 * the last failed run on ctx, or "" when the last run succeeded. Valid until
 * the next call on ctx. */
TRI_API const char* tri_last_error(const tri_context* ctx);

TRI_API const char* tri_status_name(tri_status status);
/* 0 for TRI_OK, 2 for input errors, 1 for domain errors. */
TRI_API int tri_status_exit_code(tri_status status);

/* Newline-separated "command[ subcommand]" list; static storage. */
TRI_API const char* tri_command_list(void);

TRI_API void tri_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* TRIALITY_H */
