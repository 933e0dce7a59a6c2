#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "contagrid/grid.hpp"

namespace contagrid::search {

inline constexpr std::uint64_t kDefaultBudget = 200'000'000;

// Candidate-space restrictions and rejection tests. All of them are
// accelerators: enabling any combination must not change results, which
// verify_prune_equivalence checks empirically.
struct PruneConfig {
  bool use_boundary_prune = false;        // every boundary edge must hold a seed
  bool use_empty_pair_prune = false;      // no two adjacent seed-free lines, both axes
  bool use_odd_column_restriction = false;  // one seed per odd column (odd m only)

  bool any() const {
    return use_boundary_prune || use_empty_pair_prune || use_odd_column_restriction;
  }
  std::vector<std::string> names() const;
};

struct SearchBudget {
  std::uint64_t max_candidates = kDefaultBudget;
  bool force = false;
};

struct EnumerationResult {
  GridDims dims;
  std::optional<int> k;  // subset size; empty for unconstrained feasibility counts
  std::uint64_t count = 0;
  std::optional<std::vector<CellSet>> witnesses;  // sorted by canonical text form
  PruneConfig prunes;
  std::uint64_t candidates_examined = 0;
  std::uint64_t closures_evaluated = 0;

  // {"dims":{"n":..,"m":..},"k":..,"count":..,"prunes":[..],"candidates":..,
  //  "witnesses":[..]?}  — byte-stable for fixed inputs.
  std::string to_json() const;
};

struct BruteGammaResult {
  long long value;
  CellSet witness;  // lexicographically least by canonical text form
  std::uint64_t candidates_examined;
};

// Smallest k such that some k-subset has full closure. With all prunes
// disabled this is the ground-truth oracle for the closed forms.
BruteGammaResult brute_gamma(GridDims dims, const SearchBudget& budget, const PruneConfig& prune,
                             int jobs = 1);

// Counts (and optionally lists) all subsets of size gamma(dims) with full
// closure. Deterministic for any worker count: the candidate space is split
// into disjoint colexicographic ranges and merged by sum / sorted merge.
EnumerationResult enumerate_optimal(GridDims dims, const SearchBudget& budget,
                                    const PruneConfig& prune, bool materialize, int jobs = 1);

// Counts all subsets with full closure. One-row (and one-column) grids use
// the path characterization — ends seeded, no two adjacent non-seeds —
// which is revalidated against raw 2^m enumeration for m <= 16 on every
// call. Everything else is raw 2^(n*m) enumeration.
EnumerationResult count_feasible(GridDims dims, const SearchBudget& budget, int jobs = 1);

struct PruneEquivalenceEntry {
  std::string config;
  std::uint64_t count = 0;
  std::uint64_t candidates_examined = 0;
  std::uint64_t closures_evaluated = 0;
  bool count_matches = false;
  bool witnesses_match = false;
};

struct PruneEquivalenceReport {
  GridDims dims;
  int k;
  std::vector<PruneEquivalenceEntry> entries;  // entry 0 is the unpruned baseline
  bool all_match = false;
  std::string to_json() const;
};

// Runs the optimal enumeration unpruned, with each prune individually and
// with all applicable prunes together; checks counts and witness sets agree.
PruneEquivalenceReport verify_prune_equivalence(GridDims dims, const SearchBudget& budget,
                                                int jobs = 1);

struct LiftReport {
  GridDims dims;           // the larger grid G(n,m), m odd, m-2 >= n >= 3
  std::uint64_t small_count = 0;      // optimal solutions of G(n,m-2)
  std::uint64_t large_count = 0;      // optimal solutions of G(n,m)
  std::uint64_t lifted_count = 0;     // distinct lifted solutions, expect n*small_count
  bool all_lifts_optimal = false;     // every lift has full closure on G(n,m)
  std::optional<CellSet> non_restricting_witness;  // optimal on G(n,m), columns 1..m-2 not a solution
  std::string to_json() const;
};

// Checks that column-extension lifts every optimal solution of G(n,m-2) to
// n distinct optimal solutions of G(n,m), and exhibits an optimal solution
// of G(n,m) whose first m-2 columns do not solve G(n,m-2).
LiftReport lift_solutions(GridDims dims, const SearchBudget& budget, int jobs = 1);

}  // namespace contagrid::search
