#ifndef TIGHT_HANDLEBODY_H
#define TIGHT_HANDLEBODY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ThbStatus {
  THB_OK = 0,
  THB_NULL_ARGUMENT = 1,
  THB_INVALID_UTF8 = 2,
  THB_SYNTAX_ERROR = 3,
  THB_INVALID_PRESENTATION = 4,
  THB_RESOURCE_LIMIT = 5,
  THB_NO_CONFIGURATION = 6,
  THB_BAD_SLOPE = 7,
  THB_PANIC = 8,
} ThbStatus;

/**
 * A validated presentation, with the configuration from its `config` lines
 * if it had any.
 */
typedef struct ThbPresentation ThbPresentation;

/**
 * A finished classification.
 */
typedef struct ThbReport ThbReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL. Owned by the
 * library; valid until the next call on the same thread.
 */
const char *thb_last_error(void);

const char *thb_version(void);

/**
 * Parses and validates a presentation document.
 */
enum ThbStatus thb_presentation_parse(const char *text, struct ThbPresentation **out);

/**
 * The solid torus with two boundary dividing curves of slope `-p/q`.
 */
enum ThbStatus thb_presentation_solid_torus(uint64_t p, uint64_t q, struct ThbPresentation **out);

void thb_presentation_free(struct ThbPresentation *p);

/**
 * Genus, or 0 for NULL.
 */
uint32_t thb_presentation_genus(const struct ThbPresentation *p);

/**
 * Classifies a presentation. `limit` 0 selects the default bound and
 * `workers` 0 one thread per core.
 */
enum ThbStatus thb_classify(const struct ThbPresentation *p,
                            uint64_t limit,
                            uint32_t workers,
                            struct ThbReport **out);

void thb_report_free(struct ThbReport *r);

uint64_t thb_report_tight_count(const struct ThbReport *r);

uint64_t thb_report_total_configurations(const struct ThbReport *r);

uint64_t thb_report_potentially_allowable(const struct ThbReport *r);

uint64_t thb_report_transitions(const struct ThbReport *r);

/**
 * The text report; free with `thb_string_free`. NULL for NULL input.
 */
char *thb_report_render(const struct ThbReport *r);

/**
 * Decides tightness of the configuration given by the document's `config`
 * lines; writes 1 for tight, 0 for overtwisted.
 */
enum ThbStatus thb_check(const struct ThbPresentation *p, uint64_t limit, int32_t *tight);

/**
 * Reference count of tight structures on the solid torus with boundary
 * slope `-p/q`.
 */
enum ThbStatus thb_oracle_solid_torus(uint64_t p, uint64_t q, uint64_t *count);

void thb_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TIGHT_HANDLEBODY_H */
