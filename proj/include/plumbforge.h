/* plumbforge C API. Every call returns a pf_status; on failure pf_last_error() holds the
 * message for the calling thread. Strings handed out are freed with pf_string_free. */
#ifndef PLUMBFORGE_H
#define PLUMBFORGE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PF_API __declspec(dllexport)
#else
#define PF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pf_status {
    PF_OK = 0,
    PF_ERR_INVALID_INPUT = 1,
    PF_ERR_PARSE = 2,
    PF_ERR_INDEFINITE = 3,
    PF_ERR_CAP_EXCEEDED = 4,
    PF_ERR_NOT_APPLICABLE = 5,
    PF_ERR_MISMATCH = 6,
    PF_ERR_INCONSISTENT = 7,
    PF_ERR_INTERNAL = 99
} pf_status;

typedef enum pf_parity { PF_PARITY_UNKNOWN = 0, PF_PARITY_EVEN = 1, PF_PARITY_ODD = 2 } pf_parity;

typedef struct pf_graph pf_graph;
typedef struct pf_word pf_word;

PF_API const char* pf_last_error(void);
PF_API const char* pf_status_name(pf_status s);
PF_API void pf_string_free(char* s);

/* graphs: text or JSON, detected from the first character */
PF_API pf_status pf_graph_parse(const char* text, pf_graph** out);
/* "single" (genus, b), "min-elliptic" (n), "triangle" (k), "cusp" (a_1..a_r) */
PF_API pf_status pf_graph_builtin(const char* name, const long long* params, size_t n, pf_graph** out);
PF_API void pf_graph_free(pf_graph* g);
PF_API pf_status pf_graph_to_text(const pf_graph* g, char** out);
PF_API pf_status pf_graph_to_json(const pf_graph* g, char** out);

/* words: text or JSON */
PF_API pf_status pf_word_parse(const char* text, pf_word** out);
PF_API void pf_word_free(pf_word* w);
PF_API pf_status pf_word_to_text(const pf_word* w, char** out);
PF_API pf_status pf_word_to_json(const pf_word* w, char** out);
PF_API size_t pf_word_length(const pf_word* w);

/* JSON reports */
PF_API pf_status pf_analyze(const pf_graph* g, unsigned max_extra, uint64_t cap, char** json);
PF_API pf_status pf_pg_bound(const pf_graph* g, uint64_t cap, char** json);
PF_API pf_status pf_envelope(const pf_graph* g, uint64_t cap, char** json);
PF_API pf_status pf_classify(const pf_graph* g, const char* invariants_json, uint64_t cap, char** json);

/* Gay-Mark open book; json may be NULL */
PF_API pf_status pf_openbook(const pf_graph* g, pf_word** word, char** json);

/* "xgbm" (g, b, m), "min-elliptic" (k), "triangle" (k). filling 1 plain, 2 star, 3 lantern;
 * ignored for xgbm. */
PF_API pf_status pf_family(const char* name, const long long* params, size_t n, int filling, pf_word** out);

/* graph may be NULL. has_fiber_square = 0 uses the word's own pencil entry. The verdict is
 * included when a graph is given. */
PF_API pf_status pf_fibration(const pf_word* w, const pf_graph* g, pf_parity parity, int has_fiber_square,
                              long long fiber_square, uint64_t cap, char** json);

PF_API pf_status pf_cusp(const long long* weights, size_t r, int with_words, uint64_t cap, char** json);

/* pairwise is r*r row-major or NULL */
PF_API pf_status pf_incidence(const long long* deltas, const long long* ls, size_t r, const long long* pairwise,
                              uint64_t cap, char** json);

#ifdef __cplusplus
}
#endif

#endif
