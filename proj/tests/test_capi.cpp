/* Exercises the shared library strictly through the C header, the same way
 * an external binding would. Plain main: returns nonzero on first failure. */
#include <copa/copa.h>

#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                  \
    do {                                                              \
        if (!(cond)) {                                                \
            fprintf(stderr, "FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                               \
        }                                                             \
    } while (0)

int main(void) {
    copa_workspace* ws = copa_workspace_new();
    EXPECT(ws != NULL);

    EXPECT(copa_load_builtins(ws) == COPA_OK);

    /* Semantics of the ring collapses to three states; export and re-import. */
    EXPECT(copa_sem(ws, "ring", 1, "ring_sem") == COPA_OK);
    int iso = 0;
    EXPECT(copa_check_isomorphic(ws, "ring_sem", "ring_behavior_full", &iso) == COPA_OK);
    EXPECT(iso == 1);

    char* text = NULL;
    EXPECT(copa_export(ws, "ring_sem", "text", 0, &text) == COPA_OK);
    EXPECT(text != NULL && strstr(text, "automaton ring_sem") != NULL);
    EXPECT(copa_load_string(ws, text) == COPA_OK); /* redefinition, same bytes */
    copa_string_free(text);

    /* Deterministic export: two calls, identical bytes. */
    char* j1 = NULL;
    char* j2 = NULL;
    EXPECT(copa_export(ws, "ring", "json", 0, &j1) == COPA_OK);
    EXPECT(copa_export(ws, "ring", "json", 0, &j2) == COPA_OK);
    EXPECT(j1 && j2 && strcmp(j1, j2) == 0);
    copa_string_free(j1);
    copa_string_free(j2);

    /* Dot rendering hides underscore-prefixed nodes on request. */
    char* dot = NULL;
    EXPECT(copa_export(ws, "ring", "dot", 1, &dot) == COPA_OK);
    EXPECT(dot && strstr(dot, "_h1") == NULL);
    copa_string_free(dot);

    /* Pullback of the pinned cospan, then reachability. */
    EXPECT(copa_pullback(ws, "seq_left_to_phase", "seq_right_to_phase", "pb") == COPA_OK);
    EXPECT(copa_reachable(ws, "pb_apex", "pb_live") == COPA_OK);
    EXPECT(copa_check_isomorphic(ws, "pb_live", "ring_behavior", &iso) == COPA_OK);
    EXPECT(iso == 1);

    /* Pushout of the insertion span rebuilds the ring. */
    EXPECT(copa_pushout(ws, "insert_rule", "insert_match", "po") == COPA_OK);
    EXPECT(copa_export(ws, "po_connector", "json", 0, &j1) == COPA_OK);
    EXPECT(copa_export(ws, "ring", "json", 0, &j2) == COPA_OK);
    EXPECT(j1 && j2 && strcmp(j1, j2) == 0);
    copa_string_free(j1);
    copa_string_free(j2);

    /* Simulation search against the builtin fixtures. */
    int found = -1;
    EXPECT(copa_find_simulation(ws, "tri_loop", "ab_loop", "sim", &found) == COPA_OK);
    EXPECT(found == 1);
    EXPECT(copa_find_simulation(ws, "ab_loop", "tri_loop", "sim2", &found) == COPA_OK);
    EXPECT(found == 0); /* the target lacks the tau loop the source needs */

    /* Petri encoding agrees with the marking-graph oracle. */
    EXPECT(copa_encode_petri(ws, "ring_net", "net_conn") == COPA_OK);
    EXPECT(copa_sem(ws, "net_conn", 1, "net_sem") == COPA_OK);
    EXPECT(copa_marking_graph(ws, "ring_net", "net_oracle") == COPA_OK);
    EXPECT(copa_check_isomorphic(ws, "net_sem", "net_oracle", &iso) == COPA_OK);
    EXPECT(iso == 1);

    /* Span compositionality and a small randomized suite. */
    int pass = 0;
    char* report = NULL;
    EXPECT(copa_check_span(ws, "insert_rule", "insert_match", &pass, &report) == COPA_OK);
    EXPECT(pass == 1);
    EXPECT(report && strstr(report, "\"pass\"") != NULL);
    copa_string_free(report);

    report = NULL;
    EXPECT(copa_check_random(ws, "petri", 5, 42, &pass, &report) == COPA_OK);
    EXPECT(pass == 1);
    copa_string_free(report);

    /* Reconfiguration with state transfer. */
    report = NULL;
    EXPECT(copa_reconfigure(ws, "insert_rule", "insert_match", "(q1,q1,q0,q0)", &report) ==
           COPA_OK);
    EXPECT(report && strstr(report, "\"VALID\"") != NULL);
    copa_string_free(report);

    report = NULL;
    EXPECT(copa_reconfigure(ws, "insert_rule", "insert_match", "(q1,q0,q0,q0)", &report) ==
           COPA_OK);
    EXPECT(report && strstr(report, "\"INVALID-STATE\"") != NULL);
    copa_string_free(report);

    /* Error paths: unknown names report NOT_FOUND with a message; parse
     * errors report PARSE; the message persists until the next call. */
    EXPECT(copa_sem(ws, "no_such_connector", 0, "x") == COPA_ERR_NOT_FOUND);
    EXPECT(strstr(copa_last_error(ws), "no_such_connector") != NULL);
    EXPECT(copa_load_string(ws, "automaton broken {") == COPA_ERR_PARSE);
    EXPECT(copa_last_error(ws)[0] != '\0');

    /* Resource limits surface as SIZE_GUARD / BUDGET. */
    EXPECT(copa_set_max_states(ws, 2) == COPA_OK);
    EXPECT(copa_sem(ws, "ring", 0, "too_big") == COPA_ERR_SIZE_GUARD);
    EXPECT(copa_set_max_states(ws, 1000000) == COPA_OK);
    EXPECT(copa_set_search_budget(ws, 1) == COPA_OK);
    EXPECT(copa_find_simulation(ws, "ring_behavior_full", "ring_behavior_full", "s", &found) ==
           COPA_ERR_BUDGET);
    EXPECT(copa_set_search_budget(ws, 10000000) == COPA_OK);

    copa_workspace_free(ws);
    copa_workspace_free(NULL); /* must be a no-op */

    if (failures) {
        fprintf(stderr, "%d C API check(s) failed\n", failures);
        return 1;
    }
    printf("C API checks passed\n");
    return 0;
}
