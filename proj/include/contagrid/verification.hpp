#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "contagrid/grid.hpp"
#include "contagrid/search.hpp"

namespace contagrid::verification {

// --- reference oracles -----------------------------------------------------
// Independent evaluation paths used to cross-check the production engine.

// Literal neighborhood form of the contamination conditions: either two
// distinct contaminated cells lie in VN(u), or two contaminated cells lie in
// M(u) with M(v) and M(w) intersecting exactly in {u}.
bool contaminable_literal(const CellSet& state, Cell u);

// One-cell-at-a-time closure, choosing a random eligible cell each
// iteration. The fixed point must match the synchronous engine.
CellSet sequential_closure(const CellSet& seeds, std::mt19937_64& rng);

// The refuted piecewise formula for the contamination number: the max-based
// branches over the parities of n and m.
long long conjectured_gamma_piecewise(GridDims dims);

// Reference triangles frozen from independently computed data.
struct TriangleEntry {
  int n;
  int m;
  long long value;
};
const std::vector<TriangleEntry>& gamma_reference_triangle();  // 1 <= n <= m <= 15
const std::vector<TriangleEntry>& alpha_reference_triangle();  // 1 <= n <= m <= 9
// The 22 odd-value permutation words of the 7x7 optimal solutions.
const std::vector<std::string>& seven_square_permutations();

// --- randomized property suites ---------------------------------------------

struct PropertyResult {
  std::string name;
  std::string statement;
  int cases = 0;
  int failures = 0;
  std::string first_failure;  // empty when clean
};

std::vector<std::string> property_names();
PropertyResult run_property(const std::string& name, int cases, int max_dim, std::uint64_t seed);
std::vector<PropertyResult> run_all_properties(int cases, int max_dim, std::uint64_t seed);

// --- claim verification ------------------------------------------------------

enum class ClaimStatus {
  proved_pass,
  proved_fail,
  conjecture_match,
  conjecture_mismatch,
  reported_discrepancy,
};

std::string to_string(ClaimStatus status);

struct ClaimEntry {
  std::string claim;      // stable identifier of the checked statement
  std::string statement;  // what was checked
  std::string values;     // JSON object with the computed quantities
  ClaimStatus status = ClaimStatus::proved_pass;
};

struct VerifyReport {
  std::string suite;
  std::vector<ClaimEntry> entries;

  bool has_proved_failure() const;
  std::string to_json() const;
  std::string summary() const;
};

struct VerifyOptions {
  int max_dim = 6;  // caps enumeration-backed checks
  std::uint64_t budget = search::kDefaultBudget;
  bool force = false;
  int jobs = 1;
  int property_cases = 300;
  std::uint64_t rng_seed = 0xc0ffee;
};

// suite is one of: lemmas, formulas, tables, conjectures, all.
VerifyReport run_suite(const std::string& suite, const VerifyOptions& options);

}  // namespace contagrid::verification
