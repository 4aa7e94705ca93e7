#ifndef INVOLUTE_H
#define INVOLUTE_H

#ifdef __cplusplus
extern "C" {
#endif

/* Shared-library surface.  All functions return 0 on success, 1 on invalid
 * input (parse/shape/unknown-name errors), 2 on internal consistency
 * failures.  On nonzero return, involute_last_error() describes the problem
 * for the calling thread. */

typedef struct involute_spec involute_spec;
typedef struct involute_report involute_report;

/* Parses a JSON system specification. */
int involute_spec_parse(const char* bytes, involute_spec** out);
void involute_spec_free(involute_spec* spec);

/* Runs the full analysis pipeline. */
int involute_analyze(const involute_spec* spec, involute_report** out);
void involute_report_free(involute_report* report);

/* format: "text", "json", or "characters".  *out is a NUL-terminated string
 * owned by the caller; release with involute_string_free. */
int involute_report_render(const involute_report* report, const char* format,
                           char** out);

/* The report's preferred output format as declared in the spec. */
int involute_spec_format(const involute_spec* spec, char** out);

/* Newline-separated list of built-in generator names. */
int involute_builtin_systems(char** out);

void involute_string_free(char* s);

/* Message for the most recent failure on this thread; never NULL. */
const char* involute_last_error(void);

#ifdef __cplusplus
}
#endif

#endif
