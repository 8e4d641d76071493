#ifndef COPA_H
#define COPA_H

/* C API for the connector composition kernel. All state lives in an opaque
 * workspace of named objects (automata, connectors, morphisms, nets).
 * Functions return COPA_OK or an error code; the message behind the most
 * recent failure is available via copa_last_error until the next call on
 * the same workspace. Strings returned through char** are heap-allocated
 * and must be released with copa_string_free. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct copa_workspace copa_workspace;

typedef enum {
    COPA_OK = 0,
    COPA_ERR_INVALID_ARGUMENT = 1,
    COPA_ERR_MISMATCH = 2,
    COPA_ERR_BUDGET = 3,     /* search budget exhausted; not a negative answer */
    COPA_ERR_SIZE_GUARD = 4, /* state-space cap exceeded */
    COPA_ERR_PARSE = 5,
    COPA_ERR_VALIDATION = 6,
    COPA_ERR_NOT_FOUND = 7,
    COPA_ERR_IO = 8,
    COPA_ERR_INTERNAL = 9
} copa_status;

copa_workspace* copa_workspace_new(void);
void copa_workspace_free(copa_workspace* ws);
const char* copa_last_error(const copa_workspace* ws);
void copa_string_free(char* s);

/* Loading: text-format files or strings; builtins installs the pinned
 * example objects (ring, ring_behavior, iface/patch/host, ring_net, ...). */
copa_status copa_load_file(copa_workspace* ws, const char* path);
copa_status copa_load_string(copa_workspace* ws, const char* text);
copa_status copa_load_builtins(copa_workspace* ws);

/* Resource limits for subsequent operations on this workspace. */
copa_status copa_set_max_states(copa_workspace* ws, unsigned long long cap);
copa_status copa_set_search_budget(copa_workspace* ws, unsigned long long budget);

/* Composite semantics of a named connector, stored as automaton `out`. */
copa_status copa_sem(copa_workspace* ws, const char* connector, int prune, const char* out);
copa_status copa_reachable(copa_workspace* ws, const char* automaton, const char* out);

/* Pullback of two named morphisms with a shared target; stores
 * <prefix>_apex (automaton) and <prefix>_left/_right (projections). */
copa_status copa_pullback(copa_workspace* ws, const char* left_morphism,
                          const char* right_morphism, const char* prefix);
/* Product of two named automata; same output naming as copa_pullback. */
copa_status copa_product(copa_workspace* ws, const char* a, const char* b, const char* prefix);

/* Pushout of two named connector morphisms with a shared source; stores
 * <prefix>_connector and <prefix>_left/_right (leg connector morphisms). */
copa_status copa_pushout(copa_workspace* ws, const char* left_cmorphism,
                         const char* right_cmorphism, const char* prefix);

/* Searches for a simulation a -> b; *found reports the outcome and the
 * morphism is stored under `out` when one exists. */
copa_status copa_find_simulation(copa_workspace* ws, const char* a, const char* b,
                                 const char* out, int* found);
copa_status copa_check_isomorphic(copa_workspace* ws, const char* a, const char* b, int* iso);

copa_status copa_encode_petri(copa_workspace* ws, const char* net, const char* out_connector);
copa_status copa_marking_graph(copa_workspace* ws, const char* net, const char* out_automaton);

/* Compositionality check of the span formed by two named connector
 * morphisms; *pass reports the verdict, *report_json the full report. */
copa_status copa_check_span(copa_workspace* ws, const char* left_cmorphism,
                            const char* right_cmorphism, int* pass, char** report_json);

/* Seeded randomized law suite ("pullback", "cube", "functor", "span",
 * "petri" or "all"); the report carries counterexample documents on fail. */
copa_status copa_check_random(copa_workspace* ws, const char* suite, unsigned long long count,
                              unsigned long long seed, int* pass, char** report_json);

/* Applies the reconfiguration rule to the host along the match, transferring
 * the named current state; the report carries the verdict and preimages. */
copa_status copa_reconfigure(copa_workspace* ws, const char* rule_cmorphism,
                             const char* match_cmorphism, const char* state,
                             char** report_json);

/* Serializes a named object. Formats: "json", "text", "dot" (dot only for
 * automata and connectors; hide_internal drops "_"-prefixed nodes from the
 * drawing). */
copa_status copa_export(copa_workspace* ws, const char* name, const char* format,
                        int hide_internal, char** out);

#ifdef __cplusplus
}
#endif

#endif /* COPA_H */
