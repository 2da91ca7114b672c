#ifndef WEYLCCR_H
#define WEYLCCR_H

/* C interface to the weylccr library.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_destroy function (which accepts NULL). Every fallible call
 * returns a status code; on failure weylccr_last_error() describes the
 * problem for the calling thread.
 *
 * Functions that produce text follow the size-query convention: *len holds
 * the capacity of buf on input and the required size (including the
 * terminating NUL) on output. Passing buf == NULL or a short buffer returns
 * WEYLCCR_ERR_BUFFER_TOO_SMALL with *len set.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define WEYLCCR_API __declspec(dllexport)
#else
#define WEYLCCR_API __attribute__((visibility("default")))
#endif

enum weylccr_status {
  WEYLCCR_OK = 0,
  WEYLCCR_ERR_INVALID_ARGUMENT = 1,
  WEYLCCR_ERR_DIMENSION_MISMATCH = 2,
  WEYLCCR_ERR_FRAME_MISMATCH = 3,
  WEYLCCR_ERR_SINGULAR_FRAME = 4,
  WEYLCCR_ERR_NOT_DECOMPOSABLE = 5,
  WEYLCCR_ERR_NOT_A_STATE = 6,
  WEYLCCR_ERR_WINDOW_TOO_SMALL = 7,
  WEYLCCR_ERR_OUT_OF_SUBALGEBRA = 8,
  WEYLCCR_ERR_INVALID_PROBE_SET = 9,
  WEYLCCR_ERR_UNSUPPORTED = 10,
  WEYLCCR_ERR_PARSE = 11,
  WEYLCCR_ERR_BUFFER_TOO_SMALL = 12,
  WEYLCCR_ERR_NULL_POINTER = 13,
  WEYLCCR_ERR_INTERNAL = 99
};

typedef struct weylccr_frame weylccr_frame;
typedef struct weylccr_element weylccr_element;
typedef struct weylccr_state weylccr_state;
typedef struct weylccr_report weylccr_report;

WEYLCCR_API const char* weylccr_version(void);
/* Symbolic name of a status code, e.g. "parse error". */
WEYLCCR_API const char* weylccr_status_name(int status);
/* Message of the last failure on this thread ("" if none). */
WEYLCCR_API const char* weylccr_last_error(void);

/* Frames: a lattice basis E with columns e^1..e^d. */
WEYLCCR_API int weylccr_frame_identity(size_t d, weylccr_frame** out);
WEYLCCR_API int weylccr_frame_from_json(const char* json, weylccr_frame** out);
WEYLCCR_API int weylccr_frame_dimension(const weylccr_frame* frame, size_t* d);
WEYLCCR_API void weylccr_frame_destroy(weylccr_frame* frame);

/* Elements. A NULL frame means the identity frame with the dimension of the
 * first coordinate list in the expression. */
WEYLCCR_API int weylccr_element_parse(const char* expr, const weylccr_frame* frame, weylccr_element** out);
WEYLCCR_API int weylccr_element_from_json(const char* json, weylccr_element** out);
WEYLCCR_API int weylccr_element_term_count(const weylccr_element* x, size_t* count);
WEYLCCR_API int weylccr_element_multiply(const weylccr_element* x, const weylccr_element* y, weylccr_element** out);
WEYLCCR_API int weylccr_element_adjoint(const weylccr_element* x, weylccr_element** out);
WEYLCCR_API int weylccr_element_to_string(const weylccr_element* x, char* buf, size_t* len);
WEYLCCR_API int weylccr_element_to_json(const weylccr_element* x, char* buf, size_t* len);
WEYLCCR_API void weylccr_element_destroy(weylccr_element* x);

/* States. */
WEYLCCR_API int weylccr_state_from_json(const char* json, weylccr_state** out);
WEYLCCR_API int weylccr_state_to_json(const weylccr_state* s, char* buf, size_t* len);
WEYLCCR_API int weylccr_state_evaluate(const weylccr_state* s, const weylccr_element* x, double* re, double* im);
WEYLCCR_API void weylccr_state_destroy(weylccr_state* s);

/* Verification batteries and path demos. */
typedef struct weylccr_run_config {
  double tolerance;
  uint64_t seed;
  const weylccr_frame* frame; /* may be NULL */
} weylccr_run_config;

WEYLCCR_API void weylccr_run_config_init(weylccr_run_config* config);
/* Space-separated list of suite names. */
WEYLCCR_API const char* weylccr_suite_names(void);
WEYLCCR_API int weylccr_verify(const char* suite, const weylccr_run_config* config, weylccr_report** out);
/* kind is one of "plane_wave", "bloch", "zak" (or plane_wave_line, bloch_slerp, zak_line). */
WEYLCCR_API int weylccr_path_demo(const char* kind, const weylccr_state* from, const weylccr_state* to, size_t grid,
                                  const weylccr_frame* frame, weylccr_report** out);
WEYLCCR_API int weylccr_report_passed(const weylccr_report* report, int* passed);
/* Renders the report as text (as_json == 0) or JSON. */
WEYLCCR_API int weylccr_report_render(const weylccr_report* report, int as_json, char* buf, size_t* len);
WEYLCCR_API void weylccr_report_destroy(weylccr_report* report);

#ifdef __cplusplus
}
#endif

#endif
