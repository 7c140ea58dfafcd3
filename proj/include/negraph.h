/*
 * negraph C API: negation and uncertainty detection for finding mentions
 * in dependency-parsed report text.
 *
 * All objects are opaque handles created and destroyed by this library.
 * Functions return NG_OK on success; on failure they return a status code
 * and leave a human-readable message retrievable with ng_last_error()
 * (per thread, valid until the next failing call on that thread).
 * Strings returned through char** out-parameters are heap-allocated and
 * must be released with ng_free().
 */

#ifndef NEGRAPH_H
#define NEGRAPH_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ng_status {
  NG_OK = 0,
  NG_ERR_IO = 1,      /* file not readable / not writable */
  NG_ERR_DATA = 2,    /* malformed CoNLL-U, rules, lexicon, gold, results */
  NG_ERR_PATTERN = 3, /* pattern syntax error */
  NG_ERR_ARG = 4      /* bad arguments, mismatched or duplicate ids */
} ng_status;

typedef struct ng_engine ng_engine;   /* compiled rules + lexicon */
typedef struct ng_corpus ng_corpus;   /* parsed documents */
typedef struct ng_results ng_results; /* per-document detection results */

const char* ng_version(void);

/* Last error message for the calling thread ("" when none). */
const char* ng_last_error(void);

void ng_free(char* s);

/* ---- engine ---- */

ng_status ng_engine_open(const char* rules_path, const char* lexicon_path,
                         ng_engine** out);
void ng_engine_close(ng_engine* e);
size_t ng_engine_rule_count(const ng_engine* e);
size_t ng_engine_lexicon_count(const ng_engine* e);

/* ---- corpus ---- */

ng_status ng_corpus_open(ng_corpus** out);
void ng_corpus_close(ng_corpus* c);
/* Parse one CoNLL-U file and append its documents. Duplicate doc ids
 * across the corpus are NG_ERR_ARG. */
ng_status ng_corpus_add_file(ng_corpus* c, const char* path);
/* Parse CoNLL-U text; default_doc_id names sentences that carry no
 * doc_id comment. */
ng_status ng_corpus_add_text(ng_corpus* c, const char* conllu,
                             const char* default_doc_id);
size_t ng_corpus_document_count(const ng_corpus* c);

/* ---- detection ---- */

/* Run recognition + rule classification over every document. jobs is the
 * worker thread count (values < 1 mean 1); output is deterministic and
 * sorted by doc id regardless of jobs. */
ng_status ng_detect(const ng_engine* e, const ng_corpus* c, int jobs,
                    ng_results** out);
void ng_results_close(ng_results* r);
size_t ng_results_document_count(const ng_results* r);
/* JSON Lines, one document per line, sorted by doc id. */
ng_status ng_results_to_jsonl(const ng_results* r, char** out);
/* Re-load results previously serialized with ng_results_to_jsonl. */
ng_status ng_results_open_jsonl(const char* path, ng_results** out);

/* ---- evaluation ---- */

#define NG_EVAL_POSITIVE 0
#define NG_EVAL_NEGATION 1

/* Score results against a gold JSONL file and render the report table.
 * mode is NG_EVAL_POSITIVE or NG_EVAL_NEGATION. */
ng_status ng_evaluate(const ng_results* r, const char* gold_path, int mode,
                      char** report_out);

/* ---- pattern debugging ---- */

/* Match one pattern over the corpus and render every binding, per
 * sentence and anchor candidate. anchor: NULL = every vertex; a decimal
 * number = that vertex index; anything else = vertices with that lemma.
 * Pattern syntax errors are NG_ERR_PATTERN and the message carries the
 * byte offset. */
ng_status ng_explain_pattern(const char* pattern, const ng_corpus* c,
                             const char* anchor, char** out);

#ifdef __cplusplus
}
#endif

#endif /* NEGRAPH_H */
