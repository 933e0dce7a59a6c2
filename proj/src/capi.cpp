#include "contagrid.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "json.hpp"

#include "contagrid/closed_forms.hpp"
#include "contagrid/grid.hpp"
#include "contagrid/search.hpp"
#include "contagrid/tables.hpp"
#include "contagrid/verification.hpp"

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
cg_status wrap(Fn&& fn) {
  try {
    fn();
    return CG_OK;
  } catch (const contagrid::budget_error& e) {
    t_last_error = e.what();
    return CG_ERROR_BUDGET_EXCEEDED;
  } catch (const contagrid::structure_error& e) {
    t_last_error = e.what();
    return CG_ERROR_STRUCTURE;
  } catch (const contagrid::input_error& e) {
    t_last_error = e.what();
    return CG_ERROR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return CG_ERROR_INTERNAL;
  }
}

contagrid::search::SearchBudget budget_of(const cg_search_options* options) {
  contagrid::search::SearchBudget budget;
  if (options && options->max_candidates > 0) budget.max_candidates = options->max_candidates;
  if (options) budget.force = options->force != 0;
  return budget;
}

contagrid::search::PruneConfig prune_of(const cg_search_options* options) {
  contagrid::search::PruneConfig prune;
  if (options) {
    prune.use_boundary_prune = options->prune_boundary != 0;
    prune.use_empty_pair_prune = options->prune_empty_pair != 0;
    prune.use_odd_column_restriction = options->prune_odd_columns != 0;
  }
  return prune;
}

int jobs_of(const cg_search_options* options) {
  return options && options->jobs > 1 ? options->jobs : 1;
}

}  // namespace

struct cg_trace {
  contagrid::ClosureTrace trace;
};

extern "C" {

const char* cg_status_name(cg_status status) {
  switch (status) {
    case CG_OK: return "ok";
    case CG_ERROR_INVALID_ARGUMENT: return "invalid-argument";
    case CG_ERROR_BUDGET_EXCEEDED: return "budget-exceeded";
    case CG_ERROR_STRUCTURE: return "structure";
    case CG_ERROR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* cg_last_error_message(void) { return t_last_error.c_str(); }

const char* cg_version(void) { return "1.0.0"; }

void cg_string_free(char* text) { std::free(text); }

cg_status cg_closure_run(int32_t rows, int32_t cols, const char* seeds_text,
                         cg_trace** out_trace) {
  return wrap([&] {
    if (!out_trace) throw contagrid::input_error("out_trace is null");
    contagrid::GridDims dims(rows, cols);
    contagrid::CellSet seeds =
        contagrid::CellSet::from_text(dims, seeds_text ? seeds_text : "");
    auto* handle = new cg_trace{contagrid::closure(seeds)};
    *out_trace = handle;
  });
}

void cg_trace_free(cg_trace* trace) { delete trace; }

int32_t cg_trace_full(const cg_trace* trace) { return trace && trace->trace.full ? 1 : 0; }

int32_t cg_trace_round_count(const cg_trace* trace) {
  return trace ? static_cast<int32_t>(trace->trace.rounds.size()) : 0;
}

cg_status cg_trace_cells_text(const cg_trace* trace, int32_t round, char** out_text) {
  return wrap([&] {
    if (!trace || !out_text) throw contagrid::input_error("null argument");
    int rounds = static_cast<int>(trace->trace.rounds.size());
    if (round < 0 || round > rounds) {
      throw contagrid::input_error("round " + std::to_string(round) + " out of range 0.." +
                                   std::to_string(rounds));
    }
    const contagrid::CellSet& cells =
        round == 0 ? trace->trace.seeds : trace->trace.rounds[round - 1];
    *out_text = dup_string(cells.text());
  });
}

cg_status cg_trace_frame_text(const cg_trace* trace, int32_t round, char** out_text) {
  return wrap([&] {
    if (!trace || !out_text) throw contagrid::input_error("null argument");
    int rounds = static_cast<int>(trace->trace.rounds.size());
    if (round < 0 || round > rounds) {
      throw contagrid::input_error("round " + std::to_string(round) + " out of range 0.." +
                                   std::to_string(rounds));
    }
    *out_text = dup_string(contagrid::render_frame(trace->trace, round));
  });
}

cg_status cg_trace_scenario_json(const cg_trace* trace, char** out_json) {
  return wrap([&] {
    if (!trace || !out_json) throw contagrid::input_error("null argument");
    nlohmann::ordered_json out;
    out["n"] = trace->trace.seeds.dims().rows;
    out["m"] = trace->trace.seeds.dims().cols;
    nlohmann::ordered_json seeds = nlohmann::ordered_json::array();
    for (contagrid::Cell u : trace->trace.seeds.cells()) {
      seeds.push_back({u.row, u.col});
    }
    out["seeds"] = seeds;
    *out_json = dup_string(out.dump());
  });
}

cg_status cg_gamma_formula(int32_t rows, int32_t cols, int64_t* out_value) {
  return wrap([&] {
    if (!out_value) throw contagrid::input_error("out_value is null");
    *out_value = contagrid::closed_forms::gamma(contagrid::GridDims(rows, cols)).value;
  });
}

void cg_search_options_init(cg_search_options* options) {
  if (!options) return;
  options->max_candidates = 0;
  options->force = 0;
  options->prune_boundary = 0;
  options->prune_empty_pair = 0;
  options->prune_odd_columns = 0;
  options->jobs = 1;
  options->witnesses = 0;
}

cg_status cg_gamma_brute(int32_t rows, int32_t cols, const cg_search_options* options,
                         int64_t* out_value, char** out_witness_text) {
  return wrap([&] {
    if (!out_value) throw contagrid::input_error("out_value is null");
    auto result = contagrid::search::brute_gamma(contagrid::GridDims(rows, cols),
                                                 budget_of(options), prune_of(options),
                                                 jobs_of(options));
    *out_value = result.value;
    if (out_witness_text) *out_witness_text = dup_string(result.witness.text());
  });
}

cg_status cg_alpha_enumerate(int32_t rows, int32_t cols, const cg_search_options* options,
                             char** out_json) {
  return wrap([&] {
    if (!out_json) throw contagrid::input_error("out_json is null");
    bool materialize = options && options->witnesses != 0;
    auto result =
        contagrid::search::enumerate_optimal(contagrid::GridDims(rows, cols), budget_of(options),
                                             prune_of(options), materialize, jobs_of(options));
    *out_json = dup_string(result.to_json());
  });
}

cg_status cg_beta_count(int32_t rows, int32_t cols, const cg_search_options* options,
                        char** out_json) {
  return wrap([&] {
    if (!out_json) throw contagrid::input_error("out_json is null");
    auto result = contagrid::search::count_feasible(contagrid::GridDims(rows, cols),
                                                    budget_of(options), jobs_of(options));
    *out_json = dup_string(result.to_json());
  });
}

cg_status cg_table(const char* quantity, int32_t max_n, int32_t max_m, const char* format,
                   const cg_search_options* options, char** out_text) {
  return wrap([&] {
    if (!quantity || !format || !out_text) throw contagrid::input_error("null argument");
    *out_text = dup_string(contagrid::tables::table_text(quantity, max_n, max_m, format,
                                                         budget_of(options), jobs_of(options)));
  });
}

cg_status cg_verify(const char* suite, int32_t max_dim, int32_t property_cases,
                    const cg_search_options* options, char** out_json, char** out_summary,
                    int32_t* out_proved_failures) {
  return wrap([&] {
    if (!suite || !out_json) throw contagrid::input_error("null argument");
    contagrid::verification::VerifyOptions verify_options;
    if (max_dim > 0) verify_options.max_dim = max_dim;
    if (property_cases > 0) verify_options.property_cases = property_cases;
    verify_options.budget = budget_of(options).max_candidates;
    verify_options.force = budget_of(options).force;
    verify_options.jobs = jobs_of(options);
    auto report = contagrid::verification::run_suite(suite, verify_options);
    *out_json = dup_string(report.to_json());
    if (out_summary) *out_summary = dup_string(report.summary());
    if (out_proved_failures) {
      int32_t failures = 0;
      for (const auto& entry : report.entries) {
        if (entry.status == contagrid::verification::ClaimStatus::proved_fail) ++failures;
      }
      *out_proved_failures = failures;
    }
  });
}

}  // extern "C"
