#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace contagrid {

// Raised when an argument violates an operation's domain.
class input_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a search would enumerate more candidates than the budget allows.
class budget_error : public std::runtime_error {
public:
  budget_error(std::uint64_t candidates, std::uint64_t budget);
  std::uint64_t candidates() const noexcept { return candidates_; }
  std::uint64_t budget() const noexcept { return budget_; }

private:
  std::uint64_t candidates_;
  std::uint64_t budget_;
};

// Raised when a value fails a structural precondition (e.g. a solution that
// cannot be encoded as a permutation word).
class structure_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// 1-based grid coordinates.
struct Cell {
  int row = 0;
  int col = 0;

  friend constexpr bool operator==(const Cell&, const Cell&) = default;
  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;  // row-major order
};

// Shape of a rectangular grid. rows x cols cells, both at least 1.
struct GridDims {
  static constexpr int kMaxCells = 1024;

  int rows = 1;
  int cols = 1;

  GridDims() = default;
  GridDims(int n, int m);

  constexpr int cells() const noexcept { return rows * cols; }
  constexpr bool in_bounds(Cell u) const noexcept {
    return u.row >= 1 && u.row <= rows && u.col >= 1 && u.col <= cols;
  }
  // Row-major 0-based index of an in-bounds cell.
  constexpr int index(Cell u) const noexcept { return (u.row - 1) * cols + (u.col - 1); }
  constexpr Cell cell_at(int index) const noexcept {
    return Cell{index / cols + 1, index % cols + 1};
  }
  GridDims transposed() const { return GridDims(cols, rows); }

  friend constexpr bool operator==(const GridDims&, const GridDims&) = default;
};

std::string to_string(const GridDims& dims);

// A subset of grid cells, bit-packed row-major. Value type; all set
// operations are exact over the grid universe.
class CellSet {
public:
  static constexpr int kWords = GridDims::kMaxCells / 64;

  explicit CellSet(GridDims dims);

  static CellSet full(GridDims dims);
  // Parses the canonical text form "r,c;r,c;...". Empty string is the empty set.
  static CellSet from_text(GridDims dims, std::string_view text);
  static CellSet from_cells(GridDims dims, const std::vector<Cell>& cells);

  const GridDims& dims() const noexcept { return dims_; }
  int size() const noexcept;
  bool empty() const noexcept;
  bool contains(Cell u) const;
  bool contains_index(int index) const noexcept {
    return (bits_[index >> 6] >> (index & 63)) & 1u;
  }

  void insert(Cell u);
  void insert_index(int index) noexcept { bits_[index >> 6] |= std::uint64_t{1} << (index & 63); }
  void erase(Cell u);

  CellSet& operator|=(const CellSet& other);
  CellSet& operator&=(const CellSet& other);
  CellSet& subtract(const CellSet& other);
  CellSet complement() const;
  bool is_subset_of(const CellSet& other) const;
  bool intersects(const CellSet& other) const;

  // Cells in row-major order.
  std::vector<Cell> cells() const;
  // Canonical text form: row-major "r,c" pairs joined by ";".
  std::string text() const;

  std::uint64_t word(int i) const noexcept { return bits_[i]; }
  void set_word(int i, std::uint64_t value) noexcept { bits_[i] = value; }
  int word_count() const noexcept { return nwords_; }

  friend bool operator==(const CellSet& a, const CellSet& b);

private:
  GridDims dims_;
  int nwords_;
  std::array<std::uint64_t, kWords> bits_{};
};

// One of the eight local contamination rules. A rule fires on an empty cell u
// when both offset cells are in bounds and contaminated.
struct Rule {
  char id;                                   // 'a'..'h'
  std::array<std::pair<int, int>, 2> offsets;  // (drow, dcol) relative to u
};

// The fixed rule table in firing order a..h.
const std::array<Rule, 8>& rule_table();

// History of a synchronous closure run.
struct ClosureTrace {
  CellSet seeds;
  std::vector<CellSet> rounds;  // cells newly contaminated in each round; all non-empty
  CellSet final;
  bool full = false;
};

enum class Symmetry {
  identity,
  transpose,
  flip_rows,
  flip_cols,
  rot90,
  rot180,
  rot270,
  anti_transpose,
};

enum class Axis { rows, cols };

// Up to 8 in-bounds cells at Chebyshev distance 1 from u.
CellSet moore_neighborhood(GridDims dims, Cell u);
// Up to 4 in-bounds orthogonal neighbours of u.
CellSet von_neumann_neighborhood(GridDims dims, Cell u);

// First rule (in order a..h) whose two witness cells are in bounds and
// contaminated, or nullopt. u must be in bounds and not contaminated.
std::optional<char> contaminable(const CellSet& state, Cell u);

// All cells contaminable from `state` in one synchronous round.
CellSet step(const CellSet& state);

// Iterates `step` to the fixed point, recording each round.
ClosureTrace closure(const CellSet& seeds);
// Final state only (no trace).
CellSet closure_final(const CellSet& seeds);
// True iff the closure of `seeds` covers the whole grid.
bool closure_is_full(const CellSet& seeds);

bool is_full(const CellSet& state);

Cell symmetry_image(GridDims dims, Cell u, Symmetry sym);
std::pair<GridDims, CellSet> symmetry_image(const CellSet& set, Symmetry sym);
Symmetry symmetry_inverse(Symmetry sym);

// True iff two consecutive columns (resp. rows) contain no cell of `seeds`.
bool has_adjacent_empty_lines(const CellSet& seeds, Axis axis);
// True iff row 1, row n, column 1 and column m each contain a cell of `seeds`.
bool boundary_edges_covered(const CellSet& seeds);
// The axis-aligned block r1..r2 x c1..c2.
CellSet rect_set(GridDims dims, int r1, int r2, int c1, int c2);

// ASCII frame of the grid after `upto_rounds` rounds of the trace:
// 'S' seed, '#' contaminated in rounds 1..upto_rounds, '.' clean.
std::string render_frame(const ClosureTrace& trace, int upto_rounds);

// Reusable synchronous engine for one grid shape. Precomputes the shift
// masks so repeated closure runs stay cheap.
class Propagator {
public:
  explicit Propagator(GridDims dims);

  const GridDims& dims() const noexcept { return dims_; }
  CellSet step(const CellSet& state) const;
  CellSet closure_final(const CellSet& seeds) const;
  bool closure_is_full(const CellSet& seeds) const;
  ClosureTrace closure_trace(const CellSet& seeds) const;

private:
  CellSet shift_masked(const CellSet& state, int dr, int dc) const;

  GridDims dims_;
  CellSet universe_;
  CellSet not_first_col_;
  CellSet not_last_col_;
};

}  // namespace contagrid
