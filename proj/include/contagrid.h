/* C interface of the contagrid engine.
 *
 * All functions return a cg_status; results come back through out
 * parameters. Strings returned through char** are allocated by the library
 * and released with cg_string_free. Handles are opaque and released with
 * their matching *_free function. cg_last_error_message() describes the most
 * recent failure on the calling thread.
 */
#ifndef CONTAGRID_H
#define CONTAGRID_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cg_status {
  CG_OK = 0,
  CG_ERROR_INVALID_ARGUMENT = 1, /* domain violation or malformed input */
  CG_ERROR_BUDGET_EXCEEDED = 2,  /* candidate space exceeds the search budget */
  CG_ERROR_STRUCTURE = 3,        /* value fails a structural precondition */
  CG_ERROR_INTERNAL = 4,
} cg_status;

const char* cg_status_name(cg_status status);
const char* cg_last_error_message(void);
const char* cg_version(void);

void cg_string_free(char* text);

/* --- closure simulation ---------------------------------------------- */

typedef struct cg_trace cg_trace;

/* seeds_text is the canonical form "r,c;r,c;..."; "" is the empty set. */
cg_status cg_closure_run(int32_t rows, int32_t cols, const char* seeds_text, cg_trace** out_trace);
void cg_trace_free(cg_trace* trace);

int32_t cg_trace_full(const cg_trace* trace);
int32_t cg_trace_round_count(const cg_trace* trace);
/* round 0 is the seed set; rounds 1..count are the newly contaminated cells. */
cg_status cg_trace_cells_text(const cg_trace* trace, int32_t round, char** out_text);
/* ASCII frame after `round` rounds: 'S' seed, '#' propagated, '.' clean. */
cg_status cg_trace_frame_text(const cg_trace* trace, int32_t round, char** out_text);
/* {"n":..,"m":..,"seeds":[[r,c],...]} */
cg_status cg_trace_scenario_json(const cg_trace* trace, char** out_json);

/* --- closed forms ------------------------------------------------------ */

cg_status cg_gamma_formula(int32_t rows, int32_t cols, int64_t* out_value);

/* --- search ------------------------------------------------------------ */

typedef struct cg_search_options {
  uint64_t max_candidates; /* 0 selects the default budget */
  int32_t force;           /* run even past the budget */
  int32_t prune_boundary;
  int32_t prune_empty_pair;
  int32_t prune_odd_columns;
  int32_t jobs;      /* worker count; 0 or 1 is serial */
  int32_t witnesses; /* materialize the witness list (alpha only) */
} cg_search_options;

void cg_search_options_init(cg_search_options* options);

cg_status cg_gamma_brute(int32_t rows, int32_t cols, const cg_search_options* options,
                         int64_t* out_value, char** out_witness_text);

/* Both emit the enumeration result as JSON:
 * {"dims":{"n":..,"m":..},"k":..,"count":..,"prunes":[..],"candidates":..,
 *  "witnesses":[..]?}                                                      */
cg_status cg_alpha_enumerate(int32_t rows, int32_t cols, const cg_search_options* options,
                             char** out_json);
cg_status cg_beta_count(int32_t rows, int32_t cols, const cg_search_options* options,
                        char** out_json);

/* --- tables and verification ------------------------------------------- */

/* quantity: "gamma" or "alpha"; format: "csv" or "json". */
cg_status cg_table(const char* quantity, int32_t max_n, int32_t max_m, const char* format,
                   const cg_search_options* options, char** out_text);

/* suite: lemmas, formulas, tables, conjectures or all. out_proved_failures
 * receives the number of proved claims that failed verification. */
cg_status cg_verify(const char* suite, int32_t max_dim, int32_t property_cases,
                    const cg_search_options* options, char** out_json, char** out_summary,
                    int32_t* out_proved_failures);

#ifdef __cplusplus
}
#endif

#endif /* CONTAGRID_H */
