/*
 * storyfear C API.
 *
 * A corpus-comparative toolkit for scary-story analytics: SSToP odds-ratio
 * lexicons, fear classification over mean word embeddings, SVD story modes,
 * LDA topic trends and Porter stemming, driven by a key-value run config.
 *
 * All functions return SF_OK (0) on success or a nonzero sf_status; the
 * thread-local message behind sf_last_error() describes the most recent
 * failure on the calling thread. Handles are opaque and must be released
 * with their matching *_free function.
 */
#ifndef STORYFEAR_H
#define STORYFEAR_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

enum sf_status {
    SF_OK = 0,
    SF_ERR_IO = 1,
    SF_ERR_FORMAT = 2,
    SF_ERR_ARG = 3,
    SF_ERR_STATE = 4,     /* missing prerequisite (e.g. run `ingest` first) */
    SF_ERR_COVERAGE = 5,  /* no usable input survived filtering */
    SF_ERR_TRAIN = 6,
    SF_ERR_NOT_FOUND = 7,
    SF_ERR_LOCK = 8,
    SF_ERR_INTERNAL = 99
};

const char* sf_version(void);

/* Message for the last failing call on this thread; never NULL. */
const char* sf_last_error(void);

/* Frees buffers returned through char** out-parameters. */
void sf_free(void* p);

/* ---- run configuration ------------------------------------------------- */

typedef struct sf_config sf_config;

sf_config* sf_config_new(void);
void sf_config_free(sf_config* config);
int sf_config_load_file(sf_config* config, const char* path);
int sf_config_set(sf_config* config, const char* key, const char* value);
/* NULL when the key is unset; the pointer stays valid until the next
 * sf_config_* call on this config. */
const char* sf_config_get(sf_config* config, const char* key);

/* Runs one pipeline command: ingest, stats, sstop, similarity, fear-train,
 * fear-eval, modes, topics or disease. Reports land in the configured
 * out_dir. */
int sf_run(const sf_config* config, const char* command);

/* ---- text -------------------------------------------------------------- */

/* Cleans raw text (camelCase split, lowercase, stopword removal) and returns
 * the tokens joined by single spaces in *out (caller frees with sf_free).
 * stopword_path NULL selects the bundled English list; "" disables stopword
 * removal. */
int sf_clean_text(const char* text, const char* stopword_path, char** out);

/* Porter stem of a lowercase word into out (capacity cap, NUL-terminated). */
int sf_porter_stem(const char* word, char* out, size_t cap);

/* ---- metrics ----------------------------------------------------------- */

/* Rank-statistic ROC-AUC, ties counted half. Labels are 0/1 and both classes
 * must be present. */
int sf_roc_auc(const double* scores, const int* labels, size_t n, double* out);

/* Spearman rank correlation with average-rank tie handling plus the
 * two-sided t-approximation p-value. Either out pointer may be NULL. */
int sf_spearman(const double* x, const double* y, size_t n, double* rho,
                double* p_value);

/* ---- SSToP lexicon ----------------------------------------------------- */

typedef struct sf_lexicon sf_lexicon;

/* Opens a lexicon CSV produced by the sstop command. */
int sf_lexicon_open(const char* csv_path, sf_lexicon** out);
void sf_lexicon_free(sf_lexicon* lexicon);
size_t sf_lexicon_size(const sf_lexicon* lexicon);
/* SF_ERR_NOT_FOUND when the word has no entry. */
int sf_lexicon_score(const sf_lexicon* lexicon, const char* word, double* out);

/* ---- embeddings and fear scoring --------------------------------------- */

typedef struct sf_embedding sf_embedding;

/* Loads a textual word-vector table (optional `<count> <dim>` header). */
int sf_embedding_open(const char* path, sf_embedding** out);
void sf_embedding_free(sf_embedding* table);
size_t sf_embedding_dim(const sf_embedding* table);
size_t sf_embedding_size(const sf_embedding* table);
/* Copies the word's vector into out (sf_embedding_dim doubles);
 * SF_ERR_NOT_FOUND when absent. */
int sf_embedding_lookup(const sf_embedding* table, const char* word, double* out);

typedef struct sf_fear_model sf_fear_model;

/* Loads a fear_model.json written by fear-train. */
int sf_fear_model_open(const char* path, sf_fear_model** out);
void sf_fear_model_free(sf_fear_model* model);
/* Fear probability of one sentence: mean embedding of its cleaned tokens
 * through the logistic model (bundled stopword list). */
int sf_fear_score(const sf_fear_model* model, const sf_embedding* table,
                  const char* sentence, double* out);

#ifdef __cplusplus
}
#endif

#endif /* STORYFEAR_H */
