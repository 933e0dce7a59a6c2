#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "contagrid/grid.hpp"
#include "contagrid/search.hpp"

namespace contagrid::combinatorics {

// A permutation of 1..k in one-line notation.
struct Perm {
  std::vector<int> values;

  explicit Perm(std::vector<int> v);
  static Perm from_digits(std::string_view digits);  // e.g. "2413"
  int size() const { return static_cast<int>(values.size()); }
  std::string text() const;
};

// Number of optimal seed sets of the 1 x m path: 1 for odd m, m/2 for even m.
long long alpha_path_formula(long long m);

// Optimal seed sets of the 2 x 2k grid: k * 2^k.
long long alpha_2row_even(long long k);
// Same quantity through the recurrence a(k) = 2 a(k-1) + 2^k, a(0)=0, a(1)=2.
long long alpha_2row_even_recurrence(long long k);

// Conjectured count for the 2 x (2k+1) grid: (k+1)(3k+2) 2^(k-1); 1 at k=0.
long long alpha_2row_odd_conjecture(long long k);

struct CleanColumnReport {
  int k;  // grid is 2 x (2k+1)
  std::map<int, std::uint64_t> histogram;  // clean-column count -> solutions
  bool keys_in_range = false;              // keys subset of {k-1, k}
  std::uint64_t k_bucket = 0;
  std::uint64_t expected_k_bucket = 0;  // (k+1) 2^k
  bool k_bucket_matches = false;
};

// Histogram of seed-free columns over the optimal solutions of a 2 x (2k+1)
// grid, checked against the proved k-clean-column count.
CleanColumnReport classify_clean_columns(GridDims dims, const std::vector<CellSet>& solutions);

// Ternary words over {1,2,3} of the given length avoiding both factors 13
// and 31, by the last-letter transfer recursion.
long long ternary_avoiding(int len);
// Words containing 13 or 31 as a factor: 3^len - ternary_avoiding(len).
long long ternary_containing(int len);

// Large Schroeder numbers 1, 2, 6, 22, 90, 394, ...
long long schroder(int k);

// Fibonacci numbers with F_0 = 0, F_1 = 1.
long long fibonacci(int r);

// True iff some subsequence of sigma is order-isomorphic to pi.
bool contains_pattern(const Perm& sigma, const Perm& pi);
// Reverse-complement: reverse the sequence and replace v by k+1-v.
Perm reverse_complement(const Perm& p);

// A square-grid optimal solution seen as a permutation of the odd values
// {1,3,...,2k+1}: seed rows by increasing odd column. The image normalizes
// odd values to ranks (1,3,5,7 -> 1,2,3,4).
struct OddPermutation {
  std::vector<int> odd_values;
  std::vector<int> image;
  std::string odd_text() const;
  std::string image_text() const;
};

// Requires one seed per odd column, all seeds in odd rows, even columns
// empty; otherwise throws structure_error.
OddPermutation perm_encode(const CellSet& solution);
// Inverse of perm_encode on the (2k+1) x (2k+1) grid.
CellSet perm_decode(int k, const std::vector<int>& odd_values);

struct SquarePatternReport {
  int k;
  GridDims dims;
  std::uint64_t enumerated_count = 0;     // from enumerate_optimal
  std::uint64_t unencodable_solutions = 0;
  bool enumeration_agreement = false;  // encoded solutions == perms with full closure
  std::uint64_t optimal_count = 0;
  std::uint64_t avoiding_count = 0;  // images avoiding 2413 and 3142
  long long schroder_value = 0;
  bool matches_schroder = false;
  bool pattern_equivalence = false;  // optimal set == avoiding set exactly
  std::vector<std::string> optimal_perms;        // sorted odd-value words
  std::vector<std::string> non_optimal_perms;    // candidate perms that are not optimal
  std::vector<std::string> optimal_containing;   // exceptions: optimal but contain a pattern
  std::vector<std::string> avoiding_not_optimal;  // exceptions: avoid patterns, not optimal
  std::string to_json() const;
};

// Partitions all (k+1)! permutations of the odd values into optimal and
// non-optimal seed sets of G(2k+1,2k+1) and compares the optimal side with
// 2413/3142-avoidance and the Schroeder count.
SquarePatternReport square_pattern_report(int k, const search::SearchBudget& budget,
                                          const search::PruneConfig& prune, int jobs = 1);

// Column word of a 3-row solution: 0 for a clean column, otherwise the row
// of the unique seed in that column.
using ColWord = std::vector<int>;
ColWord word_encode_3rows(const CellSet& solution);
std::string colword_text(const ColWord& word);

// Necessary conditions for optimality on 3 x 2k grids: the word avoids the
// factor 00 and (a) has factor 12 or 21 plus a letter 3, or (b) factor 23 or
// 32 plus a letter 1, or (c) factor 103 or 301.
bool check_3row_even_constraints(const ColWord& word);

struct UpperBoundReport {
  GridDims dims;
  std::uint64_t alpha = 0;
  std::uint64_t power_bound = 0;  // n^gamma
  bool within_power_bound = false;
  std::optional<std::uint64_t> factorial_bound;  // gamma! for odd squares
  std::optional<bool> within_factorial_bound;
};

UpperBoundReport alpha_upper_bounds(GridDims dims, std::uint64_t alpha);

struct BetaPathFormulas {
  long long literal;                           // 2^((m-1)/2) odd; binomial sum even
  std::optional<long long> fibonacci_claim;    // F_{m/2}, stated for even m
};

BetaPathFormulas beta_path_formulas(int m);

// 2^(nm - gamma) * alpha, reported next to raw counts, never asserted.
std::uint64_t beta_general_formula(GridDims dims, std::uint64_t alpha);

enum class CheckStatus { match, mismatch, not_computed };

struct SequenceCheck {
  std::string name;
  long long index = 0;
  long long formula_value = 0;
  std::optional<long long> enumerated_value;
  CheckStatus status = CheckStatus::not_computed;

  static SequenceCheck make(std::string name, long long index, long long formula,
                            std::optional<long long> enumerated);
  std::string to_json() const;
};

std::string to_string(CheckStatus status);

}  // namespace contagrid::combinatorics
