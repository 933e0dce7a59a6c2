#include "contagrid/tables.hpp"

#include "json.hpp"

#include "contagrid/closed_forms.hpp"

namespace contagrid::tables {

namespace {

using json = nlohmann::ordered_json;

long long table_value(const std::string& quantity, int n, int m,
                      const search::SearchBudget& budget, int jobs) {
  if (quantity == "gamma") {
    return closed_forms::gamma(GridDims(n, m)).value;
  }
  if (n == 0 || m == 0) return 0;
  GridDims dims(n, m);
  search::PruneConfig prune;
  prune.use_boundary_prune = true;
  prune.use_empty_pair_prune = true;
  int k = static_cast<int>(closed_forms::gamma(dims).value);
  if (dims.cols % 2 == 1 && k == (dims.cols + 1) / 2) {
    prune.use_odd_column_restriction = true;
  }
  return static_cast<long long>(
      search::enumerate_optimal(dims, budget, prune, false, jobs).count);
}

}  // namespace

std::string table_text(const std::string& quantity, int max_n, int max_m,
                       const std::string& format, const search::SearchBudget& budget, int jobs) {
  if (quantity != "gamma" && quantity != "alpha") {
    throw input_error("unknown table quantity '" + quantity + "': expected gamma or alpha");
  }
  if (format != "csv" && format != "json") {
    throw input_error("unknown table format '" + format + "': expected csv or json");
  }
  if (max_n < 0 || max_m < 0 || max_n > max_m) {
    throw input_error("table bounds need 0 <= max_n <= max_m");
  }
  int min_n = quantity == "alpha" ? 0 : 1;

  if (format == "csv") {
    std::string out = "n,m,value\n";
    for (int n = min_n; n <= max_n; ++n) {
      int first_m = n == 0 ? 0 : std::max(n, 1);
      for (int m = first_m; m <= max_m; ++m) {
        out += std::to_string(n) + "," + std::to_string(m) + "," +
               std::to_string(table_value(quantity, n, m, budget, jobs)) + "\n";
      }
    }
    return out;
  }

  json out;
  out["quantity"] = quantity;
  out["max_n"] = max_n;
  out["max_m"] = max_m;
  json entries = json::array();
  for (int n = min_n; n <= max_n; ++n) {
    int first_m = n == 0 ? 0 : std::max(n, 1);
    for (int m = first_m; m <= max_m; ++m) {
      entries.push_back(
          {{"n", n}, {"m", m}, {"value", table_value(quantity, n, m, budget, jobs)}});
    }
  }
  out["entries"] = entries;
  return out.dump();
}

}  // namespace contagrid::tables
