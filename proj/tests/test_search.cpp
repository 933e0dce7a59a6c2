#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "contagrid/closed_forms.hpp"
#include "contagrid/grid.hpp"
#include "contagrid/search.hpp"

using namespace contagrid;
using namespace contagrid::search;

namespace {

const SearchBudget kBudget{};

// Independent oracle: count full-closure subsets of the given size by
// walking every subset of the (small) grid.
std::uint64_t oracle_count_size_k(GridDims dims, int k) {
  int cells = dims.cells();
  REQUIRE(cells <= 24);
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    if (__builtin_popcountll(mask) != k) continue;
    CellSet s(dims);
    for (int i = 0; i < cells; ++i) {
      if (mask & (std::uint64_t{1} << i)) s.insert_index(i);
    }
    if (closure_is_full(s)) ++count;
  }
  return count;
}

std::uint64_t oracle_count_feasible(GridDims dims) {
  int cells = dims.cells();
  REQUIRE(cells <= 20);
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    CellSet s(dims);
    for (int i = 0; i < cells; ++i) {
      if (mask & (std::uint64_t{1} << i)) s.insert_index(i);
    }
    if (closure_is_full(s)) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("brute gamma examples") {
  SUBCASE("4x5 needs three seeds") {
    auto r = brute_gamma(GridDims(4, 5), kBudget, {});
    CHECK(r.value == 3);
    CHECK(closure_is_full(r.witness));
    CHECK(r.witness.size() == 3);
  }
  SUBCASE("1x3 and its least witness") {
    auto r = brute_gamma(GridDims(1, 3), kBudget, {});
    CHECK(r.value == 2);
    CHECK(r.witness.text() == "1,1;1,3");
  }
  SUBCASE("3x3 and its least witness") {
    auto r = brute_gamma(GridDims(3, 3), kBudget, {});
    CHECK(r.value == 2);
    CHECK(r.witness.text() == "1,1;3,3");
  }
}

TEST_CASE("brute gamma equals the closed form with and without prunes") {
  for (int n = 1; n <= 5; ++n) {
    for (int m = n; m <= 6; ++m) {
      GridDims dims(n, m);
      long long expected = closed_forms::gamma(dims).value;
      CAPTURE(n);
      CAPTURE(m);
      CHECK(brute_gamma(dims, kBudget, {}).value == expected);
      PruneConfig prunes;
      prunes.use_boundary_prune = true;
      prunes.use_empty_pair_prune = true;
      auto pruned = brute_gamma(dims, kBudget, prunes);
      CHECK(pruned.value == expected);
      CHECK(pruned.witness.text() == brute_gamma(dims, kBudget, {}).witness.text());
    }
  }
}

TEST_CASE("enumerate_optimal reference counts") {
  auto count = [](int n, int m) {
    return enumerate_optimal(GridDims(n, m), kBudget, {}, false).count;
  };
  CHECK(count(2, 3) == 10);
  CHECK(count(4, 4) == 12);
  CHECK(count(1, 7) == 1);
  CHECK(count(3, 4) == 20);
  CHECK(count(1, 4) == 2);
  CHECK(count(1, 1) == 1);
  SUBCASE("7x7 under the odd-column restriction") {
    PruneConfig prune;
    prune.use_odd_column_restriction = true;
    auto r = enumerate_optimal(GridDims(7, 7), kBudget, prune, false);
    CHECK(r.count == 22);
    CHECK(r.candidates_examined == 2401);  // 7^4
  }
}

TEST_CASE("enumerate_optimal counts agree with the subset-walk oracle") {
  for (GridDims dims : {GridDims(2, 3), GridDims(3, 3), GridDims(2, 4), GridDims(1, 5),
                        GridDims(3, 4), GridDims(4, 4), GridDims(2, 6)}) {
    int k = static_cast<int>(closed_forms::gamma(dims).value);
    CAPTURE(dims.rows);
    CAPTURE(dims.cols);
    CHECK(enumerate_optimal(dims, kBudget, {}, false).count == oracle_count_size_k(dims, k));
  }
}

TEST_CASE("witness materialization") {
  auto r = enumerate_optimal(GridDims(2, 3), kBudget, {}, true);
  REQUIRE(r.witnesses.has_value());
  CHECK(r.witnesses->size() == 10);
  // sorted by canonical text, unique, all optimal with full closure
  std::vector<std::string> texts;
  for (const CellSet& w : *r.witnesses) {
    texts.push_back(w.text());
    CHECK(w.size() == 3);
    CHECK(closure_is_full(w));
  }
  CHECK(std::is_sorted(texts.begin(), texts.end()));
  CHECK(std::set<std::string>(texts.begin(), texts.end()).size() == texts.size());
}

TEST_CASE("budget errors name the candidate count") {
  SearchBudget tiny{100, false};
  try {
    enumerate_optimal(GridDims(4, 5), tiny, {}, false);
    FAIL("expected budget_error");
  } catch (const budget_error& e) {
    CHECK(e.candidates() == 1140);  // C(20,3)
    CHECK(std::string(e.what()).find("1140") != std::string::npos);
  }
  SUBCASE("force overrides") {
    SearchBudget forced{100, true};
    CHECK(enumerate_optimal(GridDims(4, 5), forced, {}, false).count == 8);
  }
}

TEST_CASE("odd-column restriction rejects incompatible shapes") {
  PruneConfig prune;
  prune.use_odd_column_restriction = true;
  CHECK_THROWS_AS(enumerate_optimal(GridDims(2, 4), kBudget, prune, false), input_error);
  CHECK_THROWS_AS(enumerate_optimal(GridDims(2, 5), kBudget, prune, false), input_error);
}

TEST_CASE("count_feasible examples and oracle agreement") {
  CHECK(count_feasible(GridDims(1, 2), kBudget).count == 1);
  CHECK(count_feasible(GridDims(1, 4), kBudget).count == 3);
  SUBCASE("path characterization against raw enumeration") {
    for (int m = 1; m <= 14; ++m) {
      CAPTURE(m);
      CHECK(count_feasible(GridDims(1, m), kBudget).count == oracle_count_feasible(GridDims(1, m)));
    }
  }
  SUBCASE("the odd-m power formula undercounts from m=5 on") {
    // The unique-optimal-superset argument misses sets like {1,2,4,5}:
    // the raw count is the Fibonacci-type value, not 2^((m-1)/2).
    CHECK(count_feasible(GridDims(1, 3), kBudget).count == 2);  // matches 2^1
    CHECK(count_feasible(GridDims(1, 5), kBudget).count == 5);  // formula says 4
    CHECK(count_feasible(GridDims(1, 7), kBudget).count == 13);  // formula says 8
  }
  SUBCASE("two-dimensional grids by raw enumeration") {
    CHECK(count_feasible(GridDims(2, 2), kBudget).count == oracle_count_feasible(GridDims(2, 2)));
    CHECK(count_feasible(GridDims(2, 2), kBudget).count == 7);
    CHECK(count_feasible(GridDims(2, 3), kBudget).count == oracle_count_feasible(GridDims(2, 3)));
    CHECK(count_feasible(GridDims(3, 3), kBudget).count == oracle_count_feasible(GridDims(3, 3)));
  }
  SUBCASE("column grids transpose to the path characterization") {
    CHECK(count_feasible(GridDims(5, 1), kBudget).count ==
          count_feasible(GridDims(1, 5), kBudget).count);
  }
  SUBCASE("budget applies to the subset space") {
    SearchBudget tiny{1000, false};
    CHECK_THROWS_AS(count_feasible(GridDims(4, 4), tiny), budget_error);
  }
}

TEST_CASE("prune equivalence on the validation grids") {
  std::vector<GridDims> dims_list;
  for (int n = 1; n <= 5; ++n) {
    for (int m = n; m <= 5; ++m) dims_list.push_back(GridDims(n, m));
  }
  dims_list.push_back(GridDims(2, 6));
  dims_list.push_back(GridDims(3, 7));
  dims_list.push_back(GridDims(2, 7));
  for (GridDims dims : dims_list) {
    CAPTURE(dims.rows);
    CAPTURE(dims.cols);
    auto report = verify_prune_equivalence(dims, kBudget);
    CHECK(report.all_match);
    for (const auto& entry : report.entries) {
      CHECK(entry.count_matches);
      CHECK(entry.witnesses_match);
    }
  }
  SUBCASE("reference counts on spec'd instances") {
    CHECK(verify_prune_equivalence(GridDims(3, 5), kBudget).entries[0].count == 10);
    CHECK(verify_prune_equivalence(GridDims(2, 4), kBudget).entries[0].count == 8);
    CHECK(verify_prune_equivalence(GridDims(3, 3), kBudget).entries[0].count == 2);
  }
}

TEST_CASE("prunes reduce closure evaluations") {
  auto report = verify_prune_equivalence(GridDims(3, 5), kBudget);
  REQUIRE(report.entries.size() >= 2);
  const auto& baseline = report.entries[0];
  for (std::size_t i = 1; i < report.entries.size(); ++i) {
    CHECK(report.entries[i].closures_evaluated <= baseline.closures_evaluated);
  }
}

TEST_CASE("determinism across worker counts") {
  GridDims dims(5, 6);
  std::string j1 = enumerate_optimal(dims, kBudget, {}, true, 1).to_json();
  std::string j2 = enumerate_optimal(dims, kBudget, {}, true, 2).to_json();
  std::string j8 = enumerate_optimal(dims, kBudget, {}, true, 8).to_json();
  CHECK(j1 == j2);
  CHECK(j1 == j8);
  SUBCASE("feasibility counts too") {
    CHECK(count_feasible(GridDims(3, 4), kBudget, 1).count ==
          count_feasible(GridDims(3, 4), kBudget, 8).count);
  }
}

TEST_CASE("result JSON shape") {
  auto r = enumerate_optimal(GridDims(2, 3), kBudget, {}, false);
  CHECK(r.to_json() ==
        R"({"dims":{"n":2,"m":3},"k":3,"count":10,"prunes":[],"candidates":20})");
  PruneConfig prune;
  prune.use_boundary_prune = true;
  prune.use_empty_pair_prune = true;
  auto pruned = enumerate_optimal(GridDims(2, 3), kBudget, prune, false);
  CHECK(pruned.to_json().find(R"("prunes":["boundary","empty-pair"])") != std::string::npos);
}

TEST_CASE("feasibility is monotone under supersets (spot check)") {
  std::mt19937_64 rng(424242);
  int found = 0;
  while (found < 200) {
    int n = 1 + static_cast<int>(rng() % 4);
    int max_m = std::max(n, 20 / n);
    int m = n + static_cast<int>(rng() % (max_m - n + 1));
    GridDims dims(n, m);
    CellSet s(dims);
    for (int i = 0; i < dims.cells(); ++i) {
      if (rng() % 3 == 0) s.insert_index(i);
    }
    if (!closure_is_full(s)) continue;
    ++found;
    CellSet superset = s;
    for (int i = 0; i < dims.cells(); ++i) {
      if (rng() % 4 == 0) superset.insert_index(i);
    }
    CHECK(closure_is_full(superset));
  }
}

TEST_CASE("solution lifting") {
  SUBCASE("3x5 from 3x3") {
    auto report = lift_solutions(GridDims(3, 5), kBudget);
    CHECK(report.small_count == 2);
    CHECK(report.large_count == 10);
    CHECK(report.lifted_count == 6);  // n * alpha(3,3)
    CHECK(report.all_lifts_optimal);
    REQUIRE(report.non_restricting_witness.has_value());
    // The witness's first three columns do not solve the 3x3 grid.
    CellSet restriction(GridDims(3, 3));
    for (Cell u : report.non_restricting_witness->cells()) {
      if (u.col <= 3) restriction.insert(u);
    }
    CHECK_FALSE(closure_is_full(restriction));
  }
  SUBCASE("3x7 from 3x5") {
    auto report = lift_solutions(GridDims(3, 7), kBudget);
    CHECK(report.small_count == 10);
    CHECK(report.large_count == 40);
    CHECK(report.lifted_count == 30);
    CHECK(report.all_lifts_optimal);
    CHECK(report.non_restricting_witness.has_value());
  }
  SUBCASE("domain validation") {
    CHECK_THROWS_AS(lift_solutions(GridDims(3, 4), kBudget), input_error);
    CHECK_THROWS_AS(lift_solutions(GridDims(2, 5), kBudget), input_error);
    CHECK_THROWS_AS(lift_solutions(GridDims(3, 3), kBudget), input_error);
  }
}
