#include "contagrid/search.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "json.hpp"

#include "contagrid/closed_forms.hpp"

namespace contagrid::search {

namespace {

using json = nlohmann::ordered_json;

constexpr std::uint64_t kSaturated = ~std::uint64_t{0};

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t pow_sat(std::uint64_t base, int exp) {
  unsigned __int128 r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    if (r > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(r);
}

void check_budget(std::uint64_t candidates, const SearchBudget& budget) {
  if (candidates == kSaturated) {
    throw input_error("candidate space too large to iterate");
  }
  if (candidates > budget.max_candidates && !budget.force) {
    throw budget_error(candidates, budget.max_candidates);
  }
}

// ---------------------------------------------------------------------------
// Single-word engine for grids with at most 64 cells. All the heavy
// enumeration runs here; bigger grids fall back to the CellSet engine.

inline std::uint64_t shl64(std::uint64_t x, int t) { return t >= 64 ? 0 : x << t; }
inline std::uint64_t shr64(std::uint64_t x, int t) { return t >= 64 ? 0 : x >> t; }

struct Grid64 {
  GridDims dims;
  int n, m, cells;
  std::uint64_t universe;
  std::uint64_t not_first_col, not_last_col;
  std::uint64_t first_row, last_row, first_col, last_col;
  std::array<std::uint64_t, 64> colmask{};
  std::array<std::uint64_t, 64> rowmask{};

  explicit Grid64(GridDims d) : dims(d), n(d.rows), m(d.cols), cells(d.cells()) {
    universe = cells == 64 ? kSaturated : (std::uint64_t{1} << cells) - 1;
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < m; ++c) {
        std::uint64_t bit = std::uint64_t{1} << (r * m + c);
        colmask[c] |= bit;
        rowmask[r] |= bit;
      }
    }
    first_col = colmask[0];
    last_col = colmask[m - 1];
    first_row = rowmask[0];
    last_row = rowmask[n - 1];
    not_first_col = universe & ~first_col;
    not_last_col = universe & ~last_col;
  }

  std::uint64_t step_added(std::uint64_t s) const {
    std::uint64_t right = s & not_last_col;   // sources whose dc=+1 image stays in-row
    std::uint64_t left = s & not_first_col;
    std::uint64_t d_ul = shr64(left, m + 1);   // image of shift (-1,-1)
    std::uint64_t d_u = shr64(s, m);           // (-1, 0)
    std::uint64_t d_ur = shr64(right, m - 1);  // (-1,+1)
    std::uint64_t d_l = left >> 1;             // ( 0,-1)
    std::uint64_t d_r = (right << 1) & universe;
    std::uint64_t d_dl = shl64(left, m - 1) & universe;
    std::uint64_t d_d = shl64(s, m) & universe;
    std::uint64_t d_dr = shl64(right, m + 1) & universe;
    // rule a..h: eligible = image(-o1) & image(-o2)
    std::uint64_t next = (d_dr & d_ul) | (d_ur & d_dl) | (d_d & d_u) | (d_r & d_l) |
                         (d_r & d_d) | (d_r & d_u) | (d_u & d_l) | (d_d & d_l);
    return next & ~s;
  }

  bool closure_full(std::uint64_t s) const {
    while (true) {
      if (s == universe) return true;
      std::uint64_t added = step_added(s);
      if (!added) return false;
      s |= added;
    }
  }

  std::uint64_t closure_final(std::uint64_t s) const {
    while (true) {
      std::uint64_t added = step_added(s);
      if (!added) return s;
      s |= added;
    }
  }

  bool boundary_covered(std::uint64_t s) const {
    return (s & first_row) && (s & last_row) && (s & first_col) && (s & last_col);
  }

  bool has_adjacent_empty_line(std::uint64_t s) const {
    std::uint64_t occ = 0;
    for (int c = 0; c < m; ++c) occ |= std::uint64_t{(s & colmask[c]) != 0} << c;
    std::uint64_t empty = ~occ & (m == 64 ? kSaturated : (std::uint64_t{1} << m) - 1);
    if (empty & (empty >> 1)) return true;
    occ = 0;
    for (int r = 0; r < n; ++r) occ |= std::uint64_t{(s & rowmask[r]) != 0} << r;
    empty = ~occ & ((std::uint64_t{1} << n) - 1);
    return (empty & (empty >> 1)) != 0;
  }

  CellSet to_cellset(std::uint64_t s) const {
    CellSet out(dims);
    while (s) {
      out.insert_index(__builtin_ctzll(s));
      s &= s - 1;
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// Colexicographic combination iteration.

std::vector<int> unrank_colex(std::uint64_t rank, int k, int n) {
  std::vector<int> p(k);
  int v = n - 1;
  for (int i = k; i >= 1; --i) {
    while (binom(v, i) > rank) --v;
    p[i - 1] = v;
    rank -= binom(v, i);
  }
  return p;
}

std::uint64_t next_mask_gosper(std::uint64_t v) {
  std::uint64_t t = v | (v - 1);
  return (t + 1) | (((~t & (t + 1)) - 1) >> (__builtin_ctzll(v) + 1));
}

bool next_combination_positions(std::vector<int>& p, int n) {
  int k = static_cast<int>(p.size());
  for (int i = 0; i < k; ++i) {
    int limit = (i + 1 < k) ? p[i + 1] : n;
    if (p[i] + 1 < limit) {
      ++p[i];
      for (int j = 0; j < i; ++j) p[j] = j;
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Per-worker accumulation; merged in worker-index order so the outcome is
// independent of scheduling.

struct Accum {
  std::uint64_t count = 0;
  std::uint64_t candidates = 0;
  std::uint64_t closures = 0;
  std::vector<CellSet> witnesses;
  bool has_min = false;
  std::string min_text;

  void record_hit(const CellSet& witness, bool materialize, bool track_min) {
    ++count;
    if (materialize) witnesses.push_back(witness);
    if (track_min) {
      std::string text = witness.text();
      if (!has_min || text < min_text) {
        min_text = std::move(text);
        has_min = true;
      }
    }
  }
};

struct EnumOptions {
  PruneConfig prune;
  bool materialize = false;
  bool track_min = false;
};

void run_combo_range_64(const Grid64& g, int k, std::uint64_t lo, std::uint64_t hi,
                        const EnumOptions& opt, Accum& acc) {
  if (lo >= hi) return;
  std::uint64_t mask = 0;
  for (int p : unrank_colex(lo, k, g.cells)) mask |= std::uint64_t{1} << p;
  for (std::uint64_t i = lo; i < hi; ++i, mask = next_mask_gosper(mask)) {
    ++acc.candidates;
    if (opt.prune.use_boundary_prune && !g.boundary_covered(mask)) continue;
    if (opt.prune.use_empty_pair_prune && g.has_adjacent_empty_line(mask)) continue;
    ++acc.closures;
    if (g.closure_full(mask)) {
      acc.record_hit(g.to_cellset(mask), opt.materialize, opt.track_min);
    }
  }
}

void run_combo_range_generic(const Propagator& engine, int k, std::uint64_t lo, std::uint64_t hi,
                             const EnumOptions& opt, Accum& acc) {
  if (lo >= hi) return;
  GridDims dims = engine.dims();
  int cells = dims.cells();
  std::vector<int> positions = unrank_colex(lo, k, cells);
  for (std::uint64_t i = lo; i < hi; ++i) {
    CellSet candidate(dims);
    for (int p : positions) candidate.insert_index(p);
    ++acc.candidates;
    bool rejected = false;
    if (opt.prune.use_boundary_prune && !boundary_edges_covered(candidate)) rejected = true;
    if (!rejected && opt.prune.use_empty_pair_prune &&
        (has_adjacent_empty_lines(candidate, Axis::cols) ||
         has_adjacent_empty_lines(candidate, Axis::rows))) {
      rejected = true;
    }
    if (!rejected) {
      ++acc.closures;
      if (engine.closure_is_full(candidate)) {
        acc.record_hit(candidate, opt.materialize, opt.track_min);
      }
    }
    if (i + 1 < hi) next_combination_positions(positions, cells);
  }
}

// Candidates with exactly one seed per odd column, encoded as a base-n
// counter whose least significant digit is the first odd column.
void run_odd_column_range(const Propagator& engine, const Grid64* g64, std::uint64_t lo,
                          std::uint64_t hi, const EnumOptions& opt, Accum& acc) {
  if (lo >= hi) return;
  GridDims dims = engine.dims();
  int n = dims.rows, m = dims.cols;
  int q = (m + 1) / 2;
  std::vector<int> digits(q);
  std::uint64_t rest = lo;
  for (int i = 0; i < q; ++i) {
    digits[i] = static_cast<int>(rest % n);
    rest /= n;
  }
  for (std::uint64_t i = lo; i < hi; ++i) {
    CellSet candidate(dims);
    std::uint64_t mask = 0;
    for (int d = 0; d < q; ++d) {
      int index = digits[d] * m + 2 * d;
      if (g64) {
        mask |= std::uint64_t{1} << index;
      } else {
        candidate.insert_index(index);
      }
    }
    ++acc.candidates;
    if (g64) {
      if (opt.prune.use_boundary_prune && !g64->boundary_covered(mask)) {
      } else if (opt.prune.use_empty_pair_prune && g64->has_adjacent_empty_line(mask)) {
      } else {
        ++acc.closures;
        if (g64->closure_full(mask)) {
          acc.record_hit(g64->to_cellset(mask), opt.materialize, opt.track_min);
        }
      }
    } else {
      bool rejected = false;
      if (opt.prune.use_boundary_prune && !boundary_edges_covered(candidate)) rejected = true;
      if (!rejected && opt.prune.use_empty_pair_prune &&
          (has_adjacent_empty_lines(candidate, Axis::cols) ||
           has_adjacent_empty_lines(candidate, Axis::rows))) {
        rejected = true;
      }
      if (!rejected) {
        ++acc.closures;
        if (engine.closure_is_full(candidate)) {
          acc.record_hit(candidate, opt.materialize, opt.track_min);
        }
      }
    }
    // advance the counter
    for (int d = 0; d < q; ++d) {
      if (++digits[d] < n) break;
      digits[d] = 0;
    }
  }
}

void run_subset_range_64(const Grid64& g, std::uint64_t lo, std::uint64_t hi, Accum& acc) {
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    ++acc.candidates;
    ++acc.closures;
    if (g.closure_full(mask)) ++acc.count;
  }
}

template <typename RangeFn>
Accum run_parallel(std::uint64_t total, int jobs, RangeFn&& range_fn) {
  int workers = std::max(1, jobs);
  if (total < 2048) workers = 1;
  std::vector<Accum> locals(workers);
  if (workers == 1) {
    range_fn(0, total, locals[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      auto lo = static_cast<std::uint64_t>(static_cast<unsigned __int128>(total) * w / workers);
      auto hi =
          static_cast<std::uint64_t>(static_cast<unsigned __int128>(total) * (w + 1) / workers);
      threads.emplace_back([&, lo, hi, w] { range_fn(lo, hi, locals[w]); });
    }
    for (auto& t : threads) t.join();
  }
  Accum merged;
  for (Accum& local : locals) {
    merged.count += local.count;
    merged.candidates += local.candidates;
    merged.closures += local.closures;
    merged.witnesses.insert(merged.witnesses.end(), local.witnesses.begin(),
                            local.witnesses.end());
    if (local.has_min && (!merged.has_min || local.min_text < merged.min_text)) {
      merged.min_text = local.min_text;
      merged.has_min = true;
    }
  }
  return merged;
}

void sort_witnesses(std::vector<CellSet>& witnesses) {
  std::vector<std::pair<std::string, std::size_t>> keys;
  keys.reserve(witnesses.size());
  for (std::size_t i = 0; i < witnesses.size(); ++i) keys.emplace_back(witnesses[i].text(), i);
  std::sort(keys.begin(), keys.end());
  std::vector<CellSet> sorted;
  sorted.reserve(witnesses.size());
  for (auto& [text, i] : keys) sorted.push_back(std::move(witnesses[i]));
  witnesses = std::move(sorted);
}

Accum enumerate_size_k(GridDims dims, int k, const EnumOptions& opt, std::uint64_t total,
                       int jobs) {
  if (dims.cells() <= 64) {
    Grid64 g(dims);
    return run_parallel(total, jobs, [&](std::uint64_t lo, std::uint64_t hi, Accum& acc) {
      run_combo_range_64(g, k, lo, hi, opt, acc);
    });
  }
  Propagator engine(dims);
  return run_parallel(total, jobs, [&](std::uint64_t lo, std::uint64_t hi, Accum& acc) {
    run_combo_range_generic(engine, k, lo, hi, opt, acc);
  });
}

std::uint64_t odd_column_space_size(GridDims dims, int k) {
  if (dims.cols % 2 == 0) {
    throw input_error("odd-column restriction requires an odd column count, got " +
                      to_string(dims));
  }
  int q = (dims.cols + 1) / 2;
  if (k != q) {
    throw input_error("odd-column restriction is incompatible with subset size " +
                      std::to_string(k) + " on " + to_string(dims) + ": it places exactly " +
                      std::to_string(q) + " seeds, one per odd column");
  }
  return pow_sat(dims.rows, q);
}

// Feasible subsets of the 1 x m path: ends seeded, no two adjacent non-seeds.
std::uint64_t path_feasible_count(int m) {
  if (m == 1) return 1;
  std::uint64_t end_seeded = 1, end_clean = 0;  // position 1 is seeded
  for (int i = 2; i <= m; ++i) {
    if (end_seeded > kSaturated - end_clean) {
      throw input_error("feasible-set count exceeds the 64-bit range for m=" + std::to_string(m));
    }
    std::uint64_t seeded = end_seeded + end_clean;
    std::uint64_t clean = end_seeded;
    end_seeded = seeded;
    end_clean = clean;
  }
  return end_seeded;  // position m seeded
}

json prunes_json(const PruneConfig& prune) {
  json out = json::array();
  for (const std::string& name : prune.names()) out.push_back(name);
  return out;
}

}  // namespace

std::vector<std::string> PruneConfig::names() const {
  std::vector<std::string> out;
  if (use_boundary_prune) out.push_back("boundary");
  if (use_empty_pair_prune) out.push_back("empty-pair");
  if (use_odd_column_restriction) out.push_back("odd-columns");
  return out;
}

std::string EnumerationResult::to_json() const {
  json out;
  out["dims"] = {{"n", dims.rows}, {"m", dims.cols}};
  if (k) {
    out["k"] = *k;
  } else {
    out["k"] = nullptr;
  }
  out["count"] = count;
  out["prunes"] = prunes_json(prunes);
  out["candidates"] = candidates_examined;
  if (witnesses) {
    json list = json::array();
    for (const CellSet& w : *witnesses) list.push_back(w.text());
    out["witnesses"] = list;
  }
  return out.dump();
}

BruteGammaResult brute_gamma(GridDims dims, const SearchBudget& budget, const PruneConfig& prune,
                             int jobs) {
  if (prune.use_odd_column_restriction) {
    // The restriction fixes the candidate size, so it cannot drive a
    // smallest-k sweep.
    throw input_error("the odd-column restriction is incompatible with the minimum search");
  }
  EnumOptions opt{prune, /*materialize=*/false, /*track_min=*/true};
  std::uint64_t used = 0;
  for (int k = 1; k <= dims.cells(); ++k) {
    std::uint64_t space = binom(dims.cells(), k);
    if (space == kSaturated || used + space < used) {
      throw input_error("candidate space too large to iterate");
    }
    check_budget(used + space, budget);
    Accum acc = enumerate_size_k(dims, k, opt, space, jobs);
    used += acc.candidates;
    if (acc.count > 0) {
      return BruteGammaResult{k, CellSet::from_text(dims, acc.min_text), used};
    }
  }
  throw input_error("no contaminating set found; grid universe itself should be one");
}

EnumerationResult enumerate_optimal(GridDims dims, const SearchBudget& budget,
                                    const PruneConfig& prune, bool materialize, int jobs) {
  int k = static_cast<int>(closed_forms::gamma(dims).value);
  std::uint64_t total = prune.use_odd_column_restriction ? odd_column_space_size(dims, k)
                                                         : binom(dims.cells(), k);
  check_budget(total, budget);
  EnumOptions opt{prune, materialize, /*track_min=*/false};
  Accum acc;
  if (prune.use_odd_column_restriction) {
    Propagator engine(dims);
    std::optional<Grid64> g64;
    if (dims.cells() <= 64) g64.emplace(dims);
    acc = run_parallel(total, jobs, [&](std::uint64_t lo, std::uint64_t hi, Accum& local) {
      run_odd_column_range(engine, g64 ? &*g64 : nullptr, lo, hi, opt, local);
    });
  } else {
    acc = enumerate_size_k(dims, k, opt, total, jobs);
  }
  EnumerationResult result{dims, k, acc.count, std::nullopt, prune, acc.candidates, acc.closures};
  if (materialize) {
    sort_witnesses(acc.witnesses);
    result.witnesses = std::move(acc.witnesses);
  }
  return result;
}

EnumerationResult count_feasible(GridDims dims, const SearchBudget& budget, int jobs) {
  EnumerationResult result{dims, std::nullopt, 0, std::nullopt, PruneConfig{}, 0, 0};
  if (dims.rows == 1 || dims.cols == 1) {
    int m = std::max(dims.rows, dims.cols);
    result.count = path_feasible_count(m);
    if (m <= 16) {
      // Revalidate the characterization against raw enumeration before use.
      Grid64 g(GridDims(1, m));
      std::uint64_t raw = 0;
      std::uint64_t total = std::uint64_t{1} << m;
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (g.closure_full(mask)) ++raw;
      }
      result.candidates_examined = total;
      result.closures_evaluated = total;
      if (raw != result.count) {
        throw std::logic_error("path feasibility characterization disagrees with raw enumeration (" +
                               std::to_string(result.count) + " vs " + std::to_string(raw) +
                               " for m=" + std::to_string(m) + ")");
      }
    }
    return result;
  }
  std::uint64_t total = pow_sat(2, dims.cells());
  check_budget(total, budget);
  Grid64 g(dims);  // raw feasibility counting is capped well below 64 cells by the budget
  Accum acc = run_parallel(total, jobs, [&](std::uint64_t lo, std::uint64_t hi, Accum& local) {
    run_subset_range_64(g, lo, hi, local);
  });
  result.count = acc.count;
  result.candidates_examined = acc.candidates;
  result.closures_evaluated = acc.closures;
  return result;
}

std::string PruneEquivalenceReport::to_json() const {
  json out;
  out["dims"] = {{"n", dims.rows}, {"m", dims.cols}};
  out["k"] = k;
  json list = json::array();
  for (const PruneEquivalenceEntry& e : entries) {
    list.push_back({{"config", e.config},
                    {"count", e.count},
                    {"candidates", e.candidates_examined},
                    {"closures", e.closures_evaluated},
                    {"count_matches", e.count_matches},
                    {"witnesses_match", e.witnesses_match}});
  }
  out["entries"] = list;
  out["all_match"] = all_match;
  return out.dump();
}

PruneEquivalenceReport verify_prune_equivalence(GridDims dims, const SearchBudget& budget,
                                                int jobs) {
  int k = static_cast<int>(closed_forms::gamma(dims).value);
  bool odd_applicable = dims.cols % 2 == 1 && k == (dims.cols + 1) / 2;

  struct Config {
    std::string name;
    PruneConfig prune;
  };
  std::vector<Config> configs;
  configs.push_back({"none", {}});
  configs.push_back({"boundary", {true, false, false}});
  configs.push_back({"empty-pair", {false, true, false}});
  if (odd_applicable) configs.push_back({"odd-columns", {false, false, true}});
  configs.push_back({"all", {true, true, odd_applicable}});

  PruneEquivalenceReport report{dims, k, {}, true};
  std::vector<std::string> baseline_texts;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    EnumerationResult r = enumerate_optimal(dims, budget, configs[i].prune, true, jobs);
    std::vector<std::string> texts;
    for (const CellSet& w : *r.witnesses) texts.push_back(w.text());
    PruneEquivalenceEntry entry{configs[i].name, r.count, r.candidates_examined,
                                r.closures_evaluated, true, true};
    if (i == 0) {
      baseline_texts = texts;
    } else {
      entry.count_matches = r.count == report.entries[0].count;
      entry.witnesses_match = texts == baseline_texts;
      if (!entry.count_matches || !entry.witnesses_match) report.all_match = false;
    }
    report.entries.push_back(entry);
  }
  return report;
}

std::string LiftReport::to_json() const {
  json out;
  out["dims"] = {{"n", dims.rows}, {"m", dims.cols}};
  out["small_count"] = small_count;
  out["large_count"] = large_count;
  out["lifted_count"] = lifted_count;
  out["all_lifts_optimal"] = all_lifts_optimal;
  if (non_restricting_witness) {
    out["non_restricting_witness"] = non_restricting_witness->text();
  } else {
    out["non_restricting_witness"] = nullptr;
  }
  return out.dump();
}

LiftReport lift_solutions(GridDims dims, const SearchBudget& budget, int jobs) {
  int n = dims.rows, m = dims.cols;
  if (!(m % 2 == 1 && m - 2 >= n && n >= 3)) {
    throw input_error("solution lifting needs odd m with m-2 >= n >= 3, got " + to_string(dims));
  }
  GridDims small_dims(n, m - 2);
  EnumerationResult small = enumerate_optimal(small_dims, budget, {}, true, jobs);
  EnumerationResult large = enumerate_optimal(dims, budget, {}, true, jobs);

  std::set<std::string> large_texts;
  for (const CellSet& w : *large.witnesses) large_texts.insert(w.text());

  LiftReport report{dims, small.count, large.count, 0, true, std::nullopt};
  std::set<std::string> lifted;
  for (const CellSet& s : *small.witnesses) {
    for (int r = 1; r <= n; ++r) {
      CellSet candidate(dims);
      for (Cell u : s.cells()) candidate.insert(u);
      candidate.insert(Cell{r, m});
      std::string text = candidate.text();
      if (!closure_is_full(candidate) || !large_texts.count(text)) {
        report.all_lifts_optimal = false;
      }
      lifted.insert(text);
    }
  }
  report.lifted_count = lifted.size();

  for (const CellSet& w : *large.witnesses) {
    CellSet restriction(small_dims);
    for (Cell u : w.cells()) {
      if (u.col <= m - 2) restriction.insert(u);
    }
    if (!closure_is_full(restriction)) {
      report.non_restricting_witness = w;
      break;
    }
  }
  return report;
}

}  // namespace contagrid::search
