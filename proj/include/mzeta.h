#ifndef MZETA_H
#define MZETA_H

/*
 * mzeta — exact lambda-ring engine for motivic zeta functions.
 *
 * C facade over the computation core.  All state lives behind opaque
 * handles; every fallible call returns a status code and stores a
 * diagnostic retrievable with mz_engine_last_error().  Strings returned
 * through char** out-parameters are heap-allocated and must be released
 * with mz_string_free().
 *
 * Handles are not thread-safe; use one engine per thread or synchronize
 * externally.  Documents and reports are immutable once created and may be
 * read from any thread.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mz_status {
    MZ_OK = 0,
    MZ_ERR_USAGE = 1,    /* invalid arguments or malformed input */
    MZ_ERR_DOMAIN = 2,   /* mathematically undefined request */
    MZ_ERR_IO = 3,       /* file access failure */
    MZ_ERR_INTERNAL = 4  /* invariant breach inside the engine */
} mz_status;

/* Universal-polynomial engine with optional on-disk cache. */
typedef struct mz_engine mz_engine;
/* Parsed motive document (atoms, classes, tasks). */
typedef struct mz_doc mz_doc;
/* Result of one command: sections of items, checks and equations. */
typedef struct mz_report mz_report;

/* --- engine ------------------------------------------------------------ */

/* cache_dir: directory for the persistent cache; NULL or "" consults the
 * MZETA_CACHE_DIR environment variable and falls back to a memory-only
 * cache.  Returns NULL only on allocation failure. */
mz_engine* mz_engine_new(const char* cache_dir);
void mz_engine_free(mz_engine* engine);

/* Message of the most recent failure on this engine; empty string when the
 * last call succeeded.  Owned by the engine, valid until its next call. */
const char* mz_engine_last_error(const mz_engine* engine);

/* --- universal polynomials --------------------------------------------- */

/* Canonical text of P_n over the two-alphabet generators s1.., t1.. */
mz_status mz_universal_p(mz_engine* engine, int n, char** out_text);
/* Canonical text of P_{n,r} over the one-alphabet generators s1.. */
mz_status mz_universal_pnr(mz_engine* engine, int n, int r, char** out_text);
/* Canonical text of the root-product polynomial q_{g,n} in s1..s2g, t. */
mz_status mz_universal_q(mz_engine* engine, int g, int n, char** out_text);

/* --- documents ---------------------------------------------------------- */

mz_status mz_doc_parse(mz_engine* engine, const char* text, mz_doc** out_doc);
mz_status mz_doc_parse_file(mz_engine* engine, const char* path, mz_doc** out_doc);
void mz_doc_free(mz_doc* doc);

/* --- commands ----------------------------------------------------------- */

/* Zeta report.  expr: class name, or NULL/"" to run the document's own
 * task list.  order >= 0 overrides the series order; weight >= 0 requests
 * the reflection check T -> 1/(L^weight T) (needs a plus/minus split). */
mz_status mz_cmd_zeta(mz_engine* engine, const mz_doc* doc, const char* expr,
                      int order, int weight, mz_report** out_report);

mz_status mz_cmd_verify_abelian(mz_engine* engine, int g, mz_report** out_report);
mz_status mz_cmd_verify_curve(mz_engine* engine, int g, mz_report** out_report);
mz_status mz_cmd_verify_product(mz_engine* engine, int gx, int gy,
                                mz_report** out_report);
mz_status mz_cmd_verify_blowup(mz_engine* engine, int g, int codim,
                               mz_report** out_report);
mz_status mz_cmd_verify_identities(mz_engine* engine, int max_weight,
                                   mz_report** out_report);

mz_status mz_cmd_cache_status(mz_engine* engine, mz_report** out_report);
mz_status mz_cmd_cache_clear(mz_engine* engine, mz_report** out_report);
mz_status mz_cmd_cache_warm(mz_engine* engine, int g, mz_report** out_report);

/* --- reports ------------------------------------------------------------ */

/* 1 when every check and equation in the report passed, 0 otherwise. */
int mz_report_passed(const mz_report* report);
/* Plain-text rendering; timings are confined to the trailing "# timings"
 * block, everything before it is deterministic for fixed inputs + cache. */
mz_status mz_report_text(const mz_report* report, char** out_text);
/* JSON rendering; timings are confined to the final "timings" key. */
mz_status mz_report_json(const mz_report* report, char** out_text);
void mz_report_free(mz_report* report);

/* --- misc --------------------------------------------------------------- */

void mz_string_free(char* text);

/* Static version string ("mzeta x.y.z"); do not free. */
const char* mz_version(void);

#ifdef __cplusplus
}
#endif

#endif /* MZETA_H */
