// Command-line front end. All domain work goes through the C API in
// contagrid.h; this file only parses arguments and formats output.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "contagrid.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitStuck = 2;
constexpr int kExitUsage = 64;

struct OwnedString {
  char* value = nullptr;
  ~OwnedString() { cg_string_free(value); }
  std::string str() const { return value ? value : ""; }
};

[[noreturn]] void fail(cg_status status) {
  std::cerr << "error (" << cg_status_name(status) << "): " << cg_last_error_message() << "\n";
  std::exit(kExitUsage);
}

void check(cg_status status) {
  if (status != CG_OK) fail(status);
}

bool parse_dims(const std::string& text, int32_t& rows, int32_t& cols) {
  auto pos = text.find_first_of("xX");
  if (pos == std::string::npos || pos == 0 || pos + 1 >= text.size()) return false;
  try {
    std::size_t used = 0;
    rows = std::stoi(text.substr(0, pos), &used);
    if (used != pos) return false;
    std::string rest = text.substr(pos + 1);
    cols = std::stoi(rest, &used);
    if (used != rest.size()) return false;
  } catch (const std::exception&) {
    return false;
  }
  return rows >= 1 && cols >= 1;
}

std::uint64_t budget_from_env() {
  const char* env = std::getenv("CONTAGRID_BUDGET");
  if (!env || !*env) return 0;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    std::cerr << "warning: ignoring malformed CONTAGRID_BUDGET='" << env << "'\n";
    return 0;
  }
}

struct SearchFlags {
  std::uint64_t budget = 0;
  bool force = false;
  bool prune_boundary = false;
  bool prune_empty_pair = false;
  bool prune_odd_columns = false;
  int jobs = 1;
  bool witnesses = false;

  cg_search_options to_options() const {
    cg_search_options options;
    cg_search_options_init(&options);
    options.max_candidates = budget ? budget : budget_from_env();
    options.force = force ? 1 : 0;
    options.prune_boundary = prune_boundary ? 1 : 0;
    options.prune_empty_pair = prune_empty_pair ? 1 : 0;
    options.prune_odd_columns = prune_odd_columns ? 1 : 0;
    options.jobs = jobs;
    options.witnesses = witnesses ? 1 : 0;
    return options;
  }
};

void add_budget_flags(CLI::App* cmd, SearchFlags& flags) {
  cmd->add_option("--budget", flags.budget, "Cap on enumerated candidates");
  cmd->add_flag("--force", flags.force, "Run even when the candidate count exceeds the budget");
  cmd->add_option("--jobs", flags.jobs, "Worker threads")->check(CLI::Range(1, 256));
}

int run_simulate(const std::string& dims_text, const std::string& seeds_text,
                 const std::string& scenario_path, bool trace, bool as_json) {
  int32_t rows = 0, cols = 0;
  std::string seeds = seeds_text;
  if (!scenario_path.empty()) {
    std::ifstream in(scenario_path);
    if (!in) {
      std::cerr << "error: cannot open scenario file '" << scenario_path << "'\n";
      return kExitUsage;
    }
    nlohmann::json doc;
    try {
      in >> doc;
      rows = doc.at("n").get<int32_t>();
      cols = doc.at("m").get<int32_t>();
      std::ostringstream text;
      bool first = true;
      for (const auto& pair : doc.at("seeds")) {
        if (!first) text << ";";
        text << pair.at(0).get<int>() << "," << pair.at(1).get<int>();
        first = false;
      }
      seeds = text.str();
    } catch (const std::exception& e) {
      std::cerr << "error: malformed scenario file: " << e.what() << "\n";
      return kExitUsage;
    }
  } else if (!parse_dims(dims_text, rows, cols)) {
    std::cerr << "error: --dims expects NxM with N,M >= 1, got '" << dims_text << "'\n";
    return kExitUsage;
  }

  cg_trace* trace_handle = nullptr;
  check(cg_closure_run(rows, cols, seeds.c_str(), &trace_handle));
  int32_t rounds = cg_trace_round_count(trace_handle);
  bool full = cg_trace_full(trace_handle) != 0;

  if (as_json) {
    OwnedString scenario;
    check(cg_trace_scenario_json(trace_handle, &scenario.value));
    OwnedString final_cells;
    check(cg_trace_cells_text(trace_handle, 0, &final_cells.value));
    nlohmann::ordered_json out;
    out["scenario"] = nlohmann::ordered_json::parse(scenario.str());
    out["full"] = full;
    out["rounds"] = rounds;
    std::cout << out.dump() << "\n";
  } else {
    if (trace) {
      for (int32_t r = 0; r <= rounds; ++r) {
        OwnedString frame;
        check(cg_trace_frame_text(trace_handle, r, &frame.value));
        std::cout << "round " << r << "\n" << frame.str();
      }
    }
    if (full) {
      std::cout << "FULL\n";
    } else {
      std::cout << "STUCK after " << rounds << " rounds\n";
    }
  }
  cg_trace_free(trace_handle);
  return full ? kExitOk : kExitStuck;
}

int run_gamma(const std::string& dims_text, const std::string& method, bool as_json,
              const SearchFlags& flags) {
  int32_t rows = 0, cols = 0;
  if (!parse_dims(dims_text, rows, cols)) {
    std::cerr << "error: --dims expects NxM with N,M >= 1, got '" << dims_text << "'\n";
    return kExitUsage;
  }
  int64_t formula_value = 0;
  int64_t brute_value = 0;
  OwnedString witness;
  bool want_formula = method == "formula" || method == "all";
  bool want_brute = method == "brute" || method == "all";
  if (want_formula) check(cg_gamma_formula(rows, cols, &formula_value));
  if (want_brute) {
    cg_search_options options = flags.to_options();
    check(cg_gamma_brute(rows, cols, &options, &brute_value, &witness.value));
  }
  bool agree = !want_formula || !want_brute || formula_value == brute_value;

  if (as_json) {
    nlohmann::ordered_json out;
    out["dims"] = {{"n", rows}, {"m", cols}};
    out["method"] = method;
    if (want_formula) out["formula"] = formula_value;
    if (want_brute) {
      out["brute"] = brute_value;
      out["witness"] = witness.str();
    }
    if (method == "all") out["agree"] = agree;
    std::cout << out.dump() << "\n";
  } else if (method == "all") {
    std::cout << "formula " << formula_value << "\n";
    std::cout << "brute " << brute_value << " witness " << witness.str() << "\n";
    if (!agree) std::cerr << "error: closed form and exhaustive search disagree\n";
  } else {
    std::cout << (want_formula ? formula_value : brute_value) << "\n";
  }
  return agree ? kExitOk : kExitVerifyFailure;
}

int run_enumeration(const std::string& dims_text, bool alpha, bool as_json,
                    const SearchFlags& flags) {
  int32_t rows = 0, cols = 0;
  if (!parse_dims(dims_text, rows, cols)) {
    std::cerr << "error: --dims expects NxM with N,M >= 1, got '" << dims_text << "'\n";
    return kExitUsage;
  }
  cg_search_options options = flags.to_options();
  OwnedString result;
  check(alpha ? cg_alpha_enumerate(rows, cols, &options, &result.value)
              : cg_beta_count(rows, cols, &options, &result.value));
  if (as_json) {
    std::cout << result.str() << "\n";
    return kExitOk;
  }
  nlohmann::json doc = nlohmann::json::parse(result.str());
  std::cout << doc.at("count").get<std::uint64_t>() << "\n";
  if (doc.contains("witnesses")) {
    for (const auto& w : doc.at("witnesses")) {
      std::cout << w.get<std::string>() << "\n";
    }
  }
  return kExitOk;
}

int run_table(const std::string& quantity, int max_n, int max_m, const std::string& format,
              const SearchFlags& flags) {
  cg_search_options options = flags.to_options();
  OwnedString text;
  check(cg_table(quantity.c_str(), max_n, max_m, format.c_str(), &options, &text.value));
  std::cout << text.str();
  if (format == "json") std::cout << "\n";
  return kExitOk;
}

int run_verify(const std::string& suite, int max_dim, int cases, const SearchFlags& flags) {
  cg_search_options options = flags.to_options();
  OwnedString report;
  OwnedString summary;
  int32_t failures = 0;
  check(cg_verify(suite.c_str(), max_dim, cases, &options, &report.value, &summary.value,
                  &failures));
  std::cout << report.str() << "\n";
  std::cerr << summary.str() << "\n";
  return failures == 0 ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"contamination dynamics on rectangular grids: simulation, closed forms, "
               "exhaustive enumeration and verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cg_version()));

  // simulate
  std::string sim_dims, sim_seeds, sim_scenario;
  bool sim_trace = false, sim_json = false;
  CLI::App* simulate = app.add_subcommand("simulate", "Run the propagation to its fixed point");
  simulate->add_option("--dims", sim_dims, "Grid shape NxM");
  simulate->add_option("--seeds", sim_seeds, "Seed cells \"r,c;r,c;...\"");
  simulate->add_option("--scenario", sim_scenario, "Scenario JSON file {n,m,seeds}");
  simulate->add_flag("--trace", sim_trace, "Print one ASCII frame per round");
  simulate->add_flag("--json", sim_json, "Machine-readable output");

  // gamma
  std::string gamma_dims, gamma_method = "formula";
  bool gamma_json = false;
  SearchFlags gamma_flags;
  CLI::App* gamma = app.add_subcommand("gamma", "Contamination number of a grid");
  gamma->add_option("--dims", gamma_dims, "Grid shape NxM")->required();
  gamma->add_option("--method", gamma_method, "formula, brute or all")
      ->check(CLI::IsMember({"formula", "brute", "all"}));
  gamma->add_flag("--json", gamma_json, "Machine-readable output");
  add_budget_flags(gamma, gamma_flags);

  // alpha
  std::string alpha_dims;
  bool alpha_json = false;
  SearchFlags alpha_flags;
  CLI::App* alpha = app.add_subcommand("alpha", "Count (and list) minimum contaminating sets");
  alpha->add_option("--dims", alpha_dims, "Grid shape NxM")->required();
  alpha->add_flag("--witnesses", alpha_flags.witnesses, "List the solutions");
  alpha->add_flag("--prune-boundary", alpha_flags.prune_boundary,
                  "Skip candidates missing a boundary edge");
  alpha->add_flag("--prune-empty-pairs", alpha_flags.prune_empty_pair,
                  "Skip candidates with two adjacent seed-free lines");
  alpha->add_flag("--prune-odd-columns", alpha_flags.prune_odd_columns,
                  "Restrict candidates to one seed per odd column (odd m)");
  alpha->add_flag("--json", alpha_json, "Machine-readable output");
  add_budget_flags(alpha, alpha_flags);

  // beta
  std::string beta_dims;
  bool beta_json = false;
  SearchFlags beta_flags;
  CLI::App* beta = app.add_subcommand("beta", "Count all contaminating sets");
  beta->add_option("--dims", beta_dims, "Grid shape NxM")->required();
  beta->add_flag("--json", beta_json, "Machine-readable output");
  add_budget_flags(beta, beta_flags);

  // table
  std::string table_quantity, table_format = "csv";
  int table_max = -1, table_max_n = -1, table_max_m = -1;
  SearchFlags table_flags;
  CLI::App* table = app.add_subcommand("table", "Emit the upper-triangle table of gamma or alpha");
  table->add_option("quantity", table_quantity, "gamma or alpha")
      ->required()
      ->check(CLI::IsMember({"gamma", "alpha"}));
  table->add_option("--max", table_max, "Bound for both n and m");
  table->add_option("--max-n", table_max_n, "Row bound");
  table->add_option("--max-m", table_max_m, "Column bound");
  table->add_option("--format", table_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  add_budget_flags(table, table_flags);

  // verify
  std::string verify_suite = "all";
  int verify_max = 6, verify_cases = 300;
  SearchFlags verify_flags;
  CLI::App* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--suite", verify_suite, "lemmas, formulas, tables, conjectures or all")
      ->check(CLI::IsMember({"lemmas", "formulas", "tables", "conjectures", "all"}));
  verify->add_option("--max", verify_max, "Bound for enumeration-backed checks");
  verify->add_option("--cases", verify_cases, "Randomized cases per property");
  add_budget_flags(verify, verify_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return kExitUsage;
  }

  if (simulate->parsed()) {
    if (sim_scenario.empty() && sim_dims.empty()) {
      std::cerr << "error: simulate needs --dims/--seeds or --scenario\n";
      return kExitUsage;
    }
    return run_simulate(sim_dims, sim_seeds, sim_scenario, sim_trace, sim_json);
  }
  if (gamma->parsed()) return run_gamma(gamma_dims, gamma_method, gamma_json, gamma_flags);
  if (alpha->parsed()) return run_enumeration(alpha_dims, true, alpha_json, alpha_flags);
  if (beta->parsed()) return run_enumeration(beta_dims, false, beta_json, beta_flags);
  if (table->parsed()) {
    int default_max = table_quantity == "gamma" ? 15 : 6;
    int max_n = table_max_n >= 0 ? table_max_n : (table_max >= 0 ? table_max : default_max);
    int max_m = table_max_m >= 0 ? table_max_m : (table_max >= 0 ? table_max : default_max);
    return run_table(table_quantity, max_n, max_m, table_format, table_flags);
  }
  if (verify->parsed()) {
    return run_verify(verify_suite, verify_max, verify_cases, verify_flags);
  }
  return kExitUsage;
}
