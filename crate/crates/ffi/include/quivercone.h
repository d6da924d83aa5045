#ifndef QUIVERCONE_H
#define QUIVERCONE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes.
typedef enum NcqStatus {
  NCQ_STATUS_OK = 0,
  NCQ_STATUS_NULL_POINTER = 1,
  NCQ_STATUS_INVALID_UTF8 = 2,
  // The session text or an argument could not be parsed or resolved.
  NCQ_STATUS_PARSE_ERROR = 3,
  // A library computation rejected its input.
  NCQ_STATUS_COMPUTE_ERROR = 4,
  // The session ran but at least one command failed; the report is still produced.
  NCQ_STATUS_COMMAND_FAILED = 5,
  NCQ_STATUS_PANIC = 6,
} NcqStatus;

// A quiver under construction or returned by an operation.
typedef struct NcqQuiver NcqQuiver;

// A parsed and resolved session.
typedef struct NcqSession NcqSession;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failure on this thread, or null. Valid until the next failing call.
const char *ncq_last_error_message(void);

// Releases a string returned by this library.
//
// # Safety
// `s` must be null or a pointer obtained from this library and not yet freed.
void ncq_string_free(char *s);

// Parses and resolves a session. `degree < 0` keeps the per-command default;
// `field` may be null (rational) or `"q"` / `"cyclo:m"`.
//
// # Safety
// `src` and `field` must be null or valid NUL-terminated strings; `out` must be writable.
enum NcqStatus ncq_session_parse(const char *src,
                                 int64_t degree,
                                 const char *field,
                                 struct NcqSession **out);

// Runs every command and writes the JSON report to `out_json`.
//
// # Safety
// `session` must come from [`ncq_session_parse`]; `out_json` must be writable.
enum NcqStatus ncq_session_run(const struct NcqSession *session, char **out_json);

// Number of commands in the session.
//
// # Safety
// `session` must be null or come from [`ncq_session_parse`].
uintptr_t ncq_session_num_commands(const struct NcqSession *session);

// # Safety
// `session` must be null or come from [`ncq_session_parse`] and not yet freed.
void ncq_session_free(struct NcqSession *session);

// A new empty quiver.
struct NcqQuiver *ncq_quiver_new(void);

// # Safety
// `q` must come from this library; `name` must be a valid string.
enum NcqStatus ncq_quiver_add_vertex(struct NcqQuiver *q, const char *name);

// Adds an arrow `tail -> head`.
//
// # Safety
// `q` must come from this library; the strings must be valid.
enum NcqStatus ncq_quiver_add_arrow(struct NcqQuiver *q,
                                    const char *name,
                                    const char *tail,
                                    const char *head);

// # Safety
// `q` must be null or come from this library.
uintptr_t ncq_quiver_num_vertices(const struct NcqQuiver *q);

// # Safety
// `q` must be null or come from this library.
uintptr_t ncq_quiver_num_arrows(const struct NcqQuiver *q);

// The double quiver as a new handle.
//
// # Safety
// `q` must come from this library; `out` must be writable.
enum NcqStatus ncq_quiver_double(const struct NcqQuiver *q, struct NcqQuiver **out);

// Graphviz text of the quiver.
//
// # Safety
// `q` must come from this library; `out` must be writable.
enum NcqStatus ncq_quiver_to_dot(const struct NcqQuiver *q, char **out);

// # Safety
// `q` must be null or come from this library and not yet freed.
void ncq_quiver_free(struct NcqQuiver *q);

// Local-quiver arrow count between simple factors `i` and `j` (0-based) of a
// semisimple point of the preprojective algebra of the double `qd`.
// `dims` holds `num_dims` dimension vectors of length `ncq_quiver_num_vertices(qd)`, row-major.
//
// # Safety
// `qd` must come from this library; `dims` must point to `num_dims × num_vertices` values.
enum NcqStatus ncq_cb_arrow_count(const struct NcqQuiver *qd,
                                  const uint64_t *dims,
                                  uintptr_t num_dims,
                                  uintptr_t i,
                                  uintptr_t j,
                                  int64_t *out);

// `dim Rep_n Π_g`.
//
// # Safety
// `out` must be writable.
enum NcqStatus ncq_dim_rep_preproj(uint64_t g, uint64_t n, uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QUIVERCONE_H */
