/*
 * recipe: a toolkit for programs written in a small teaching dialect of
 * Scheme. Parse and pretty-print programs, run their tests with expression
 * coverage, synthesize a function from sample expressions, audit a function
 * against the nine-step design recipe, and host rocket-game sessions.
 *
 * Conventions
 *   - Every fallible call returns recipe_status. On failure a message is
 *     available from recipe_last_error() on the same thread until the next
 *     call into the library.
 *   - Strings returned through char** out-parameters are owned by the caller
 *     and must be released with recipe_string_free().
 *   - Handles are opaque. A recipe_program is immutable after parsing and may
 *     be shared between threads. A recipe_service is internally synchronized.
 */
#ifndef RECIPE_RECIPE_H
#define RECIPE_RECIPE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(RECIPE_BUILDING_LIBRARY)
#    define RECIPE_API __declspec(dllexport)
#  else
#    define RECIPE_API __declspec(dllimport)
#  endif
#else
#  define RECIPE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum recipe_status {
  RECIPE_OK = 0,
  RECIPE_PARSE_ERROR = 1,
  RECIPE_EVAL_ERROR = 2,
  RECIPE_SHAPE_ERROR = 3,      /* samples differ inside a special form */
  RECIPE_NO_DIFFERENCE = 4,    /* samples are identical: nothing to abstract */
  RECIPE_UNKNOWN_FUNCTION = 5,
  RECIPE_INVALID_ARGUMENT = 6,
  RECIPE_NOT_FOUND = 7,
  RECIPE_INTERNAL = 99
} recipe_status;

typedef struct recipe_program recipe_program;
typedef struct recipe_service recipe_service;

RECIPE_API const char* recipe_version(void);
RECIPE_API const char* recipe_status_name(recipe_status status);

/* Message for the most recent failure on this thread ("" if none). */
RECIPE_API const char* recipe_last_error(void);

RECIPE_API void recipe_string_free(char* s);

/* ---- programs --------------------------------------------------------- */

RECIPE_API recipe_status recipe_program_parse(const char* source, size_t length,
                                              recipe_program** out);
RECIPE_API void recipe_program_free(recipe_program* program);

/* Canonical program text. Parsing the result yields an equal program. */
RECIPE_API recipe_status recipe_program_print(const recipe_program* program, char** out);

/* {"definitions":[{"kind","name"/"function","line",("params")}],"free_comments":n} */
RECIPE_API recipe_status recipe_program_summary_json(const recipe_program* program, char** out);

/*
 * Runs every test. `report` receives JSON when `json` is nonzero and a
 * human-readable report otherwise. `all_passed` is set to 1 when every test
 * passed and every function body was fully covered.
 */
RECIPE_API recipe_status recipe_program_run(const recipe_program* program, uint64_t seed,
                                            int json, char** report, int* all_passed);

typedef struct recipe_abstract_options {
  const char* name;                /* required */
  const char* const* params;       /* optional parameter names, hole order */
  size_t param_count;
  const char* const* atomic;       /* extra atomic constructors */
  size_t atomic_count;
  const char* const* samples;      /* optional explicit sample constants */
  size_t sample_count;
  const char* purpose;             /* optional */
} recipe_abstract_options;

/*
 * Synthesizes a function from the program's sample expressions. Text mode
 * yields the scaffold program; JSON mode yields
 * {"name","params":[{"name","type"}],"body","signature","warnings","scaffold"}.
 */
RECIPE_API recipe_status recipe_program_abstract(const recipe_program* program,
                                                 const recipe_abstract_options* options, int json,
                                                 char** out);

typedef struct recipe_check_options {
  const char* function;            /* required */
  uint64_t seed;
  const char* const* atomic;
  size_t atomic_count;
} recipe_check_options;

/* Nine-step recipe audit of one function. `passed` is 1 when no step fails. */
RECIPE_API recipe_status recipe_program_check(const recipe_program* program,
                                              const recipe_check_options* options, int json,
                                              char** report, int* passed);

/* ---- game service ----------------------------------------------------- */

/*
 * `config_json` holds default game-config overrides (NULL or "" for the
 * built-in defaults). `idle_timeout_ms` of 0 selects ten minutes.
 */
RECIPE_API recipe_status recipe_service_create(const char* config_json, uint64_t idle_timeout_ms,
                                               recipe_service** out);
RECIPE_API void recipe_service_free(recipe_service* service);

/*
 * Routes one HTTP request. Always produces a status code and a JSON body;
 * the return value is RECIPE_OK unless arguments are invalid.
 */
RECIPE_API recipe_status recipe_service_handle(recipe_service* service, const char* method,
                                               const char* path, const char* body,
                                               int* http_status, char** response_body);

#ifdef __cplusplus
}
#endif

#endif /* RECIPE_RECIPE_H */
