#include "contagrid/combinatorics.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

#include "contagrid/closed_forms.hpp"

namespace contagrid::combinatorics {

namespace {

using json = nlohmann::ordered_json;

long long checked_pow2(long long e) {
  if (e < 0 || e >= 63) throw input_error("2^" + std::to_string(e) + " out of range");
  return 1LL << e;
}

long long binom_ll(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Perm::Perm(std::vector<int> v) : values(std::move(v)) {
  std::vector<bool> seen(values.size() + 1, false);
  for (int x : values) {
    if (x < 1 || x > static_cast<int>(values.size()) || seen[x]) {
      throw input_error("not a permutation of 1.." + std::to_string(values.size()));
    }
    seen[x] = true;
  }
}

Perm Perm::from_digits(std::string_view digits) {
  std::vector<int> v;
  v.reserve(digits.size());
  for (char c : digits) {
    if (c < '1' || c > '9') throw input_error("permutation digits must be 1..9");
    v.push_back(c - '0');
  }
  return Perm(std::move(v));
}

std::string Perm::text() const {
  std::string out;
  for (int x : values) out += std::to_string(x);
  return out;
}

long long alpha_path_formula(long long m) {
  if (m < 1) throw input_error("path length must be >= 1, got " + std::to_string(m));
  return m % 2 == 1 ? 1 : m / 2;
}

long long alpha_2row_even(long long k) {
  if (k < 0) throw input_error("k must be >= 0");
  return k * checked_pow2(k);
}

long long alpha_2row_even_recurrence(long long k) {
  if (k < 0) throw input_error("k must be >= 0");
  if (k == 0) return 0;
  if (k == 1) return 2;
  long long prev = 2;
  for (long long i = 2; i <= k; ++i) prev = 2 * prev + checked_pow2(i);
  return prev;
}

long long alpha_2row_odd_conjecture(long long k) {
  if (k < 0) throw input_error("k must be >= 0");
  if (k == 0) return 1;
  return (k + 1) * (3 * k + 2) * checked_pow2(k - 1);
}

CleanColumnReport classify_clean_columns(GridDims dims, const std::vector<CellSet>& solutions) {
  if (dims.rows != 2 || dims.cols % 2 == 0) {
    throw input_error("clean-column classification applies to 2 x (2k+1) grids, got " +
                      to_string(dims));
  }
  int k = (dims.cols - 1) / 2;
  CleanColumnReport report;
  report.k = k;
  for (const CellSet& s : solutions) {
    std::vector<bool> occupied(dims.cols + 1, false);
    for (Cell u : s.cells()) occupied[u.col] = true;
    int clean = 0;
    for (int c = 1; c <= dims.cols; ++c) clean += occupied[c] ? 0 : 1;
    ++report.histogram[clean];
  }
  report.keys_in_range = true;
  for (const auto& [clean, cnt] : report.histogram) {
    if (clean != k && clean != k - 1) report.keys_in_range = false;
  }
  auto it = report.histogram.find(k);
  report.k_bucket = it == report.histogram.end() ? 0 : it->second;
  report.expected_k_bucket = static_cast<std::uint64_t>(k + 1) << k;
  report.k_bucket_matches = report.k_bucket == report.expected_k_bucket;
  return report;
}

long long ternary_avoiding(int len) {
  if (len < 1) throw input_error("word length must be >= 1");
  // State = last letter. From 1 the next letter is 1 or 2; from 2 anything;
  // from 3 the next letter is 2 or 3.
  long long end1 = 1, end2 = 1, end3 = 1;
  for (int i = 2; i <= len; ++i) {
    long long n1 = end1 + end2;
    long long n2 = end1 + end2 + end3;
    long long n3 = end2 + end3;
    end1 = n1;
    end2 = n2;
    end3 = n3;
  }
  return end1 + end2 + end3;
}

long long ternary_containing(int len) {
  long long total = 1;
  for (int i = 0; i < len; ++i) total *= 3;
  return total - ternary_avoiding(len);
}

long long schroder(int k) {
  if (k < 0) throw input_error("Schroeder index must be >= 0");
  if (k == 0) return 1;
  if (k == 1) return 2;
  long long s0 = 1, s1 = 2;
  for (int i = 2; i <= k; ++i) {
    long long s2 = (3 * (2 * i - 1) * s1 - (i - 2) * s0) / (i + 1);
    s0 = s1;
    s1 = s2;
  }
  return s1;
}

long long fibonacci(int r) {
  if (r < 0) throw input_error("Fibonacci index must be >= 0");
  long long a = 0, b = 1;
  for (int i = 0; i < r; ++i) {
    long long next = a + b;
    a = b;
    b = next;
  }
  return a;
}

namespace {

bool contains_pattern_from(const std::vector<int>& sigma, const std::vector<int>& pi,
                           std::vector<int>& picked, std::size_t start) {
  std::size_t depth = picked.size();
  if (depth == pi.size()) return true;
  for (std::size_t i = start; i + (pi.size() - depth) <= sigma.size(); ++i) {
    bool consistent = true;
    for (std::size_t j = 0; j < depth; ++j) {
      // relative order of the new element against each picked one
      bool sigma_less = sigma[i] < picked[j];
      bool pi_less = pi[depth] < pi[j];
      if (sigma_less != pi_less) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;
    picked.push_back(sigma[i]);
    if (contains_pattern_from(sigma, pi, picked, i + 1)) return true;
    picked.pop_back();
  }
  return false;
}

}  // namespace

bool contains_pattern(const Perm& sigma, const Perm& pi) {
  if (pi.size() > sigma.size()) {
    throw input_error("pattern longer than the host permutation");
  }
  std::vector<int> picked;
  picked.reserve(pi.size());
  return contains_pattern_from(sigma.values, pi.values, picked, 0);
}

Perm reverse_complement(const Perm& p) {
  int k = p.size();
  std::vector<int> out(k);
  for (int i = 0; i < k; ++i) out[k - 1 - i] = k + 1 - p.values[i];
  return Perm(std::move(out));
}

std::string OddPermutation::odd_text() const {
  std::string out;
  for (int v : odd_values) out += std::to_string(v);
  return out;
}

std::string OddPermutation::image_text() const {
  std::string out;
  for (int v : image) out += std::to_string(v);
  return out;
}

OddPermutation perm_encode(const CellSet& solution) {
  GridDims dims = solution.dims();
  if (dims.rows != dims.cols || dims.rows % 2 == 0) {
    throw input_error("permutation encoding applies to odd square grids, got " + to_string(dims));
  }
  int side = dims.rows;
  std::vector<std::vector<int>> by_col(side + 1);
  for (Cell u : solution.cells()) by_col[u.col].push_back(u.row);
  OddPermutation out;
  std::set<int> seen;
  for (int c = 1; c <= side; ++c) {
    if (c % 2 == 0) {
      if (!by_col[c].empty()) {
        throw structure_error("solution has a seed in even column " + std::to_string(c));
      }
      continue;
    }
    if (by_col[c].size() != 1) {
      throw structure_error("odd column " + std::to_string(c) + " holds " +
                            std::to_string(by_col[c].size()) + " seeds, expected exactly 1");
    }
    int r = by_col[c][0];
    if (r % 2 == 0) {
      throw structure_error("seed at row " + std::to_string(r) + ", column " + std::to_string(c) +
                            " is not in an odd row");
    }
    if (!seen.insert(r).second) {
      throw structure_error("row " + std::to_string(r) + " is used by two odd columns");
    }
    out.odd_values.push_back(r);
    out.image.push_back((r + 1) / 2);
  }
  return out;
}

CellSet perm_decode(int k, const std::vector<int>& odd_values) {
  if (k < 0 || static_cast<int>(odd_values.size()) != k + 1) {
    throw input_error("expected " + std::to_string(k + 1) + " odd values");
  }
  int side = 2 * k + 1;
  GridDims dims(side, side);
  CellSet out(dims);
  std::set<int> seen;
  for (int i = 0; i <= k; ++i) {
    int r = odd_values[i];
    if (r < 1 || r > side || r % 2 == 0 || !seen.insert(r).second) {
      throw input_error("values must be distinct odd numbers in 1.." + std::to_string(side));
    }
    out.insert(Cell{r, 2 * i + 1});
  }
  return out;
}

std::string SquarePatternReport::to_json() const {
  json out;
  out["k"] = k;
  out["dims"] = {{"n", dims.rows}, {"m", dims.cols}};
  out["enumerated_count"] = enumerated_count;
  out["unencodable_solutions"] = unencodable_solutions;
  out["enumeration_agreement"] = enumeration_agreement;
  out["optimal_count"] = optimal_count;
  out["avoiding_count"] = avoiding_count;
  out["schroder"] = schroder_value;
  out["matches_schroder"] = matches_schroder;
  out["pattern_equivalence"] = pattern_equivalence;
  out["optimal_perms"] = optimal_perms;
  out["non_optimal_perms"] = non_optimal_perms;
  out["optimal_containing"] = optimal_containing;
  out["avoiding_not_optimal"] = avoiding_not_optimal;
  return out.dump();
}

SquarePatternReport square_pattern_report(int k, const search::SearchBudget& budget,
                                          const search::PruneConfig& prune, int jobs) {
  if (k < 0) throw input_error("k must be >= 0");
  int side = 2 * k + 1;
  GridDims dims(side, side);
  SquarePatternReport report;
  report.k = k;
  report.dims = dims;
  report.schroder_value = schroder(k);

  search::EnumerationResult enumerated =
      search::enumerate_optimal(dims, budget, prune, true, jobs);
  report.enumerated_count = enumerated.count;

  std::set<std::string> encoded;
  for (const CellSet& s : *enumerated.witnesses) {
    try {
      encoded.insert(perm_encode(s).odd_text());
    } catch (const structure_error&) {
      ++report.unencodable_solutions;
    }
  }

  const Perm p2413 = Perm::from_digits("2413");
  const Perm p3142 = Perm::from_digits("3142");

  std::vector<int> odd_values;
  for (int i = 0; i <= k; ++i) odd_values.push_back(2 * i + 1);
  std::sort(odd_values.begin(), odd_values.end());

  std::set<std::string> optimal, avoiding;
  do {
    OddPermutation word;
    word.odd_values = odd_values;
    for (int v : odd_values) word.image.push_back((v + 1) / 2);
    std::string text = word.odd_text();

    CellSet seeds = perm_decode(k, odd_values);
    bool full = closure_is_full(seeds);
    if (full) {
      optimal.insert(text);
      report.optimal_perms.push_back(text);
    } else {
      report.non_optimal_perms.push_back(text);
    }

    Perm image(word.image);
    bool avoids = k + 1 < 4 || (!contains_pattern(image, p2413) && !contains_pattern(image, p3142));
    if (avoids) avoiding.insert(text);

    if (full && !avoids) report.optimal_containing.push_back(text);
    if (!full && avoids) report.avoiding_not_optimal.push_back(text);
  } while (std::next_permutation(odd_values.begin(), odd_values.end()));

  std::sort(report.optimal_perms.begin(), report.optimal_perms.end());
  std::sort(report.non_optimal_perms.begin(), report.non_optimal_perms.end());
  std::sort(report.optimal_containing.begin(), report.optimal_containing.end());
  std::sort(report.avoiding_not_optimal.begin(), report.avoiding_not_optimal.end());

  report.optimal_count = optimal.size();
  report.avoiding_count = avoiding.size();
  report.matches_schroder =
      report.optimal_count == static_cast<std::uint64_t>(report.schroder_value);
  report.pattern_equivalence = optimal == avoiding;
  report.enumeration_agreement =
      report.unencodable_solutions == 0 && encoded == optimal;
  return report;
}

ColWord word_encode_3rows(const CellSet& solution) {
  GridDims dims = solution.dims();
  if (dims.rows != 3) {
    throw input_error("column-word encoding applies to 3-row grids, got " + to_string(dims));
  }
  std::vector<std::vector<int>> by_col(dims.cols + 1);
  for (Cell u : solution.cells()) by_col[u.col].push_back(u.row);
  ColWord word(dims.cols, 0);
  for (int c = 1; c <= dims.cols; ++c) {
    if (by_col[c].size() > 1) {
      throw structure_error("column " + std::to_string(c) + " holds " +
                            std::to_string(by_col[c].size()) + " seeds, expected at most 1");
    }
    if (!by_col[c].empty()) word[c - 1] = by_col[c][0];
  }
  return word;
}

std::string colword_text(const ColWord& word) {
  std::string out;
  for (int letter : word) out += std::to_string(letter);
  return out;
}

bool check_3row_even_constraints(const ColWord& word) {
  auto has_factor2 = [&](int a, int b) {
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] == a && word[i + 1] == b) return true;
    }
    return false;
  };
  auto has_factor3 = [&](int a, int b, int c) {
    for (std::size_t i = 0; i + 2 < word.size(); ++i) {
      if (word[i] == a && word[i + 1] == b && word[i + 2] == c) return true;
    }
    return false;
  };
  auto has_letter = [&](int a) {
    return std::find(word.begin(), word.end(), a) != word.end();
  };
  if (has_factor2(0, 0)) return false;
  if ((has_factor2(1, 2) || has_factor2(2, 1)) && has_letter(3)) return true;
  if ((has_factor2(2, 3) || has_factor2(3, 2)) && has_letter(1)) return true;
  if (has_factor3(1, 0, 3) || has_factor3(3, 0, 1)) return true;
  return false;
}

UpperBoundReport alpha_upper_bounds(GridDims dims, std::uint64_t alpha) {
  if (!(dims.cols >= dims.rows && dims.rows >= 3 && dims.cols % 2 == 1)) {
    throw input_error("upper bounds apply to m >= n >= 3 with odd m, got " + to_string(dims));
  }
  long long gamma = closed_forms::gamma(dims).value;
  UpperBoundReport report;
  report.dims = dims;
  report.alpha = alpha;
  unsigned __int128 power = 1;
  for (long long i = 0; i < gamma; ++i) power *= static_cast<unsigned>(dims.rows);
  report.power_bound = power > ~std::uint64_t{0} ? ~std::uint64_t{0}
                                                 : static_cast<std::uint64_t>(power);
  report.within_power_bound = alpha <= report.power_bound;
  if (dims.rows == dims.cols) {
    std::uint64_t fact = 1;
    for (long long i = 2; i <= gamma; ++i) fact *= i;
    report.factorial_bound = fact;
    report.within_factorial_bound = alpha <= fact;
  }
  return report;
}

BetaPathFormulas beta_path_formulas(int m) {
  if (m < 1) throw input_error("path length must be >= 1, got " + std::to_string(m));
  BetaPathFormulas out{0, std::nullopt};
  if (m % 2 == 1) {
    out.literal = checked_pow2((m - 1) / 2);
  } else {
    long long sum = 0;
    for (long long k = 0; k <= m / 2 - 1; ++k) sum += binom_ll(m - k - 1, k);
    out.literal = sum;
    out.fibonacci_claim = fibonacci(m / 2);
  }
  return out;
}

std::uint64_t beta_general_formula(GridDims dims, std::uint64_t alpha) {
  long long gamma = closed_forms::gamma(dims).value;
  long long exponent = static_cast<long long>(dims.cells()) - gamma;
  unsigned __int128 value = alpha;
  for (long long i = 0; i < exponent; ++i) {
    value *= 2;
    if (value > ~std::uint64_t{0}) return ~std::uint64_t{0};
  }
  return static_cast<std::uint64_t>(value);
}

SequenceCheck SequenceCheck::make(std::string name, long long index, long long formula,
                                  std::optional<long long> enumerated) {
  SequenceCheck check;
  check.name = std::move(name);
  check.index = index;
  check.formula_value = formula;
  check.enumerated_value = enumerated;
  if (!enumerated) {
    check.status = CheckStatus::not_computed;
  } else if (*enumerated == formula) {
    check.status = CheckStatus::match;
  } else {
    check.status = CheckStatus::mismatch;
  }
  return check;
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::match: return "match";
    case CheckStatus::mismatch: return "mismatch";
    case CheckStatus::not_computed: return "not-computed";
  }
  return "?";
}

std::string SequenceCheck::to_json() const {
  json out;
  out["name"] = name;
  out["index"] = index;
  out["formula"] = formula_value;
  if (enumerated_value) {
    out["enumerated"] = *enumerated_value;
  } else {
    out["enumerated"] = nullptr;
  }
  out["status"] = to_string(status);
  return out.dump();
}

}  // namespace contagrid::combinatorics
