#include "contagrid/grid.hpp"

#include <algorithm>
#include <charconv>

namespace contagrid {

namespace {

int parse_int(std::string_view token, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw input_error("invalid " + std::string(what) + ": '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

budget_error::budget_error(std::uint64_t candidates, std::uint64_t budget)
    : std::runtime_error("candidate count " + std::to_string(candidates) +
                         " exceeds budget " + std::to_string(budget)),
      candidates_(candidates),
      budget_(budget) {}

GridDims::GridDims(int n, int m) : rows(n), cols(m) {
  if (n < 1 || m < 1) {
    throw input_error("grid dims must be at least 1x1, got " + std::to_string(n) + "x" +
                      std::to_string(m));
  }
  if (static_cast<long long>(n) * m > kMaxCells) {
    throw input_error("grid " + std::to_string(n) + "x" + std::to_string(m) + " exceeds the " +
                      std::to_string(kMaxCells) + "-cell capacity");
  }
}

std::string to_string(const GridDims& dims) {
  return std::to_string(dims.rows) + "x" + std::to_string(dims.cols);
}

CellSet::CellSet(GridDims dims) : dims_(dims), nwords_((dims.cells() + 63) / 64) {}

CellSet CellSet::full(GridDims dims) {
  CellSet out(dims);
  int cells = dims.cells();
  for (int w = 0; w < out.nwords_; ++w) {
    int lo = w * 64;
    int hi = std::min(cells, lo + 64);
    if (hi - lo == 64) {
      out.bits_[w] = ~std::uint64_t{0};
    } else {
      out.bits_[w] = (std::uint64_t{1} << (hi - lo)) - 1;
    }
  }
  return out;
}

CellSet CellSet::from_text(GridDims dims, std::string_view text) {
  CellSet out(dims);
  if (text.empty()) return out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find(';', pos);
    std::string_view pair = text.substr(pos, end == std::string_view::npos ? end : end - pos);
    size_t comma = pair.find(',');
    if (comma == std::string_view::npos) {
      throw input_error("malformed cell '" + std::string(pair) + "': expected \"r,c\"");
    }
    Cell u{parse_int(pair.substr(0, comma), "row"), parse_int(pair.substr(comma + 1), "col")};
    if (!dims.in_bounds(u)) {
      throw input_error("cell " + std::to_string(u.row) + "," + std::to_string(u.col) +
                        " out of bounds for " + to_string(dims));
    }
    out.insert(u);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

CellSet CellSet::from_cells(GridDims dims, const std::vector<Cell>& cells) {
  CellSet out(dims);
  for (Cell u : cells) out.insert(u);
  return out;
}

int CellSet::size() const noexcept {
  int total = 0;
  for (int w = 0; w < nwords_; ++w) total += __builtin_popcountll(bits_[w]);
  return total;
}

bool CellSet::empty() const noexcept {
  for (int w = 0; w < nwords_; ++w) {
    if (bits_[w]) return false;
  }
  return true;
}

bool CellSet::contains(Cell u) const {
  if (!dims_.in_bounds(u)) {
    throw input_error("cell " + std::to_string(u.row) + "," + std::to_string(u.col) +
                      " out of bounds for " + to_string(dims_));
  }
  return contains_index(dims_.index(u));
}

void CellSet::insert(Cell u) {
  if (!dims_.in_bounds(u)) {
    throw input_error("cell " + std::to_string(u.row) + "," + std::to_string(u.col) +
                      " out of bounds for " + to_string(dims_));
  }
  insert_index(dims_.index(u));
}

void CellSet::erase(Cell u) {
  if (!dims_.in_bounds(u)) {
    throw input_error("cell out of bounds");
  }
  int index = dims_.index(u);
  bits_[index >> 6] &= ~(std::uint64_t{1} << (index & 63));
}

CellSet& CellSet::operator|=(const CellSet& other) {
  for (int w = 0; w < nwords_; ++w) bits_[w] |= other.bits_[w];
  return *this;
}

CellSet& CellSet::operator&=(const CellSet& other) {
  for (int w = 0; w < nwords_; ++w) bits_[w] &= other.bits_[w];
  return *this;
}

CellSet& CellSet::subtract(const CellSet& other) {
  for (int w = 0; w < nwords_; ++w) bits_[w] &= ~other.bits_[w];
  return *this;
}

CellSet CellSet::complement() const {
  CellSet out = CellSet::full(dims_);
  out.subtract(*this);
  return out;
}

bool CellSet::is_subset_of(const CellSet& other) const {
  for (int w = 0; w < nwords_; ++w) {
    if (bits_[w] & ~other.bits_[w]) return false;
  }
  return true;
}

bool CellSet::intersects(const CellSet& other) const {
  for (int w = 0; w < nwords_; ++w) {
    if (bits_[w] & other.bits_[w]) return true;
  }
  return false;
}

std::vector<Cell> CellSet::cells() const {
  std::vector<Cell> out;
  out.reserve(size());
  for (int w = 0; w < nwords_; ++w) {
    std::uint64_t word = bits_[w];
    while (word) {
      int bit = __builtin_ctzll(word);
      out.push_back(dims_.cell_at(w * 64 + bit));
      word &= word - 1;
    }
  }
  return out;
}

std::string CellSet::text() const {
  std::string out;
  bool first = true;
  for (Cell u : cells()) {
    if (!first) out += ';';
    out += std::to_string(u.row);
    out += ',';
    out += std::to_string(u.col);
    first = false;
  }
  return out;
}

bool operator==(const CellSet& a, const CellSet& b) {
  if (!(a.dims_ == b.dims_)) return false;
  for (int w = 0; w < a.nwords_; ++w) {
    if (a.bits_[w] != b.bits_[w]) return false;
  }
  return true;
}

const std::array<Rule, 8>& rule_table() {
  static const std::array<Rule, 8> kRules = {{
      {'a', {{{-1, -1}, {+1, +1}}}},
      {'b', {{{+1, -1}, {-1, +1}}}},
      {'c', {{{-1, 0}, {+1, 0}}}},
      {'d', {{{0, -1}, {0, +1}}}},
      {'e', {{{0, -1}, {-1, 0}}}},
      {'f', {{{0, -1}, {+1, 0}}}},
      {'g', {{{+1, 0}, {0, +1}}}},
      {'h', {{{-1, 0}, {0, +1}}}},
  }};
  return kRules;
}

CellSet moore_neighborhood(GridDims dims, Cell u) {
  if (!dims.in_bounds(u)) {
    throw input_error("cell " + std::to_string(u.row) + "," + std::to_string(u.col) +
                      " out of bounds for " + to_string(dims));
  }
  CellSet out(dims);
  for (int dr = -1; dr <= 1; ++dr) {
    for (int dc = -1; dc <= 1; ++dc) {
      if (dr == 0 && dc == 0) continue;
      Cell v{u.row + dr, u.col + dc};
      if (dims.in_bounds(v)) out.insert(v);
    }
  }
  return out;
}

CellSet von_neumann_neighborhood(GridDims dims, Cell u) {
  if (!dims.in_bounds(u)) {
    throw input_error("cell " + std::to_string(u.row) + "," + std::to_string(u.col) +
                      " out of bounds for " + to_string(dims));
  }
  CellSet out(dims);
  constexpr std::pair<int, int> kDirs[4] = {{-1, 0}, {+1, 0}, {0, -1}, {0, +1}};
  for (auto [dr, dc] : kDirs) {
    Cell v{u.row + dr, u.col + dc};
    if (dims.in_bounds(v)) out.insert(v);
  }
  return out;
}

std::optional<char> contaminable(const CellSet& state, Cell u) {
  const GridDims& dims = state.dims();
  if (!dims.in_bounds(u)) {
    throw input_error("cell " + std::to_string(u.row) + "," + std::to_string(u.col) +
                      " out of bounds for " + to_string(dims));
  }
  if (state.contains(u)) {
    throw input_error("cell " + std::to_string(u.row) + "," + std::to_string(u.col) +
                      " is already contaminated");
  }
  for (const Rule& rule : rule_table()) {
    bool fires = true;
    for (auto [dr, dc] : rule.offsets) {
      Cell v{u.row + dr, u.col + dc};
      if (!dims.in_bounds(v) || !state.contains(v)) {
        fires = false;
        break;
      }
    }
    if (fires) return rule.id;
  }
  return std::nullopt;
}

Propagator::Propagator(GridDims dims)
    : dims_(dims),
      universe_(CellSet::full(dims)),
      not_first_col_(CellSet::full(dims)),
      not_last_col_(CellSet::full(dims)) {
  for (int r = 1; r <= dims.rows; ++r) {
    not_first_col_.erase(Cell{r, 1});
    not_last_col_.erase(Cell{r, dims.cols});
  }
}

namespace {

constexpr std::pair<int, int> kMooreDirs[8] = {{-1, -1}, {-1, 0}, {-1, +1}, {0, -1},
                                               {0, +1},  {+1, -1}, {+1, 0}, {+1, +1}};

constexpr int dir_index(int dr, int dc) {
  for (int i = 0; i < 8; ++i) {
    if (kMooreDirs[i].first == dr && kMooreDirs[i].second == dc) return i;
  }
  return -1;
}

}  // namespace

CellSet Propagator::shift_masked(const CellSet& state, int dr, int dc) const {
  CellSet src = state;
  if (dc > 0) {
    src &= not_last_col_;
  } else if (dc < 0) {
    src &= not_first_col_;
  }
  int delta = dr * dims_.cols + dc;
  CellSet out(dims_);
  int nwords = out.word_count();
  if (delta >= 0) {
    int wshift = delta >> 6;
    int bshift = delta & 63;
    for (int w = nwords - 1; w >= 0; --w) {
      std::uint64_t v = 0;
      if (w - wshift >= 0) v = src.word(w - wshift) << bshift;
      if (bshift && w - wshift - 1 >= 0) v |= src.word(w - wshift - 1) >> (64 - bshift);
      out.set_word(w, v);
    }
  } else {
    int d = -delta;
    int wshift = d >> 6;
    int bshift = d & 63;
    for (int w = 0; w < nwords; ++w) {
      std::uint64_t v = 0;
      if (w + wshift < nwords) v = src.word(w + wshift) >> bshift;
      if (bshift && w + wshift + 1 < nwords) v |= src.word(w + wshift + 1) << (64 - bshift);
      out.set_word(w, v);
    }
  }
  out &= universe_;
  return out;
}

CellSet Propagator::step(const CellSet& state) const {
  // Cells eligible under a rule with witness offsets o1,o2 are
  // shifted(state, -o1) & shifted(state, -o2).
  std::array<CellSet, 8> images = {
      shift_masked(state, -1, -1), shift_masked(state, -1, 0), shift_masked(state, -1, +1),
      shift_masked(state, 0, -1),  shift_masked(state, 0, +1), shift_masked(state, +1, -1),
      shift_masked(state, +1, 0),  shift_masked(state, +1, +1)};
  CellSet next(dims_);
  for (const Rule& rule : rule_table()) {
    CellSet eligible = images[dir_index(-rule.offsets[0].first, -rule.offsets[0].second)];
    eligible &= images[dir_index(-rule.offsets[1].first, -rule.offsets[1].second)];
    next |= eligible;
  }
  next.subtract(state);
  return next;
}

CellSet Propagator::closure_final(const CellSet& seeds) const {
  CellSet state = seeds;
  while (true) {
    CellSet added = step(state);
    if (added.empty()) return state;
    state |= added;
  }
}

bool Propagator::closure_is_full(const CellSet& seeds) const {
  CellSet state = seeds;
  while (true) {
    if (state == universe_) return true;
    CellSet added = step(state);
    if (added.empty()) return false;
    state |= added;
  }
}

ClosureTrace Propagator::closure_trace(const CellSet& seeds) const {
  ClosureTrace trace{seeds, {}, seeds, false};
  while (true) {
    CellSet added = step(trace.final);
    if (added.empty()) break;
    trace.rounds.push_back(added);
    trace.final |= added;
  }
  trace.full = trace.final == universe_;
  return trace;
}

CellSet step(const CellSet& state) { return Propagator(state.dims()).step(state); }

ClosureTrace closure(const CellSet& seeds) { return Propagator(seeds.dims()).closure_trace(seeds); }

CellSet closure_final(const CellSet& seeds) { return Propagator(seeds.dims()).closure_final(seeds); }

bool closure_is_full(const CellSet& seeds) {
  return Propagator(seeds.dims()).closure_is_full(seeds);
}

bool is_full(const CellSet& state) { return state == CellSet::full(state.dims()); }

Cell symmetry_image(GridDims dims, Cell u, Symmetry sym) {
  int n = dims.rows, m = dims.cols, r = u.row, c = u.col;
  switch (sym) {
    case Symmetry::identity: return {r, c};
    case Symmetry::transpose: return {c, r};
    case Symmetry::flip_rows: return {n + 1 - r, c};
    case Symmetry::flip_cols: return {r, m + 1 - c};
    case Symmetry::rot90: return {c, n + 1 - r};
    case Symmetry::rot180: return {n + 1 - r, m + 1 - c};
    case Symmetry::rot270: return {m + 1 - c, r};
    case Symmetry::anti_transpose: return {m + 1 - c, n + 1 - r};
  }
  throw input_error("invalid symmetry");
}

std::pair<GridDims, CellSet> symmetry_image(const CellSet& set, Symmetry sym) {
  GridDims dims = set.dims();
  bool swaps = sym == Symmetry::transpose || sym == Symmetry::rot90 || sym == Symmetry::rot270 ||
               sym == Symmetry::anti_transpose;
  GridDims out_dims = swaps ? dims.transposed() : dims;
  CellSet out(out_dims);
  for (Cell u : set.cells()) out.insert(symmetry_image(dims, u, sym));
  return {out_dims, out};
}

Symmetry symmetry_inverse(Symmetry sym) {
  switch (sym) {
    case Symmetry::rot90: return Symmetry::rot270;
    case Symmetry::rot270: return Symmetry::rot90;
    default: return sym;  // all others are involutions
  }
}

bool has_adjacent_empty_lines(const CellSet& seeds, Axis axis) {
  GridDims dims = seeds.dims();
  if (axis == Axis::cols) {
    std::vector<bool> occupied(dims.cols + 1, false);
    for (Cell u : seeds.cells()) occupied[u.col] = true;
    for (int c = 1; c + 1 <= dims.cols; ++c) {
      if (!occupied[c] && !occupied[c + 1]) return true;
    }
    return false;
  }
  std::vector<bool> occupied(dims.rows + 1, false);
  for (Cell u : seeds.cells()) occupied[u.row] = true;
  for (int r = 1; r + 1 <= dims.rows; ++r) {
    if (!occupied[r] && !occupied[r + 1]) return true;
  }
  return false;
}

bool boundary_edges_covered(const CellSet& seeds) {
  GridDims dims = seeds.dims();
  bool top = false, bottom = false, left = false, right = false;
  for (Cell u : seeds.cells()) {
    top |= u.row == 1;
    bottom |= u.row == dims.rows;
    left |= u.col == 1;
    right |= u.col == dims.cols;
  }
  return top && bottom && left && right;
}

CellSet rect_set(GridDims dims, int r1, int r2, int c1, int c2) {
  if (!(1 <= r1 && r1 <= r2 && r2 <= dims.rows && 1 <= c1 && c1 <= c2 && c2 <= dims.cols)) {
    throw input_error("rectangle " + std::to_string(r1) + ".." + std::to_string(r2) + " x " +
                      std::to_string(c1) + ".." + std::to_string(c2) + " invalid for " +
                      to_string(dims));
  }
  CellSet out(dims);
  for (int r = r1; r <= r2; ++r) {
    for (int c = c1; c <= c2; ++c) out.insert(Cell{r, c});
  }
  return out;
}

std::string render_frame(const ClosureTrace& trace, int upto_rounds) {
  GridDims dims = trace.seeds.dims();
  CellSet reached = trace.seeds;
  for (int i = 0; i < upto_rounds && i < static_cast<int>(trace.rounds.size()); ++i) {
    reached |= trace.rounds[i];
  }
  std::string out;
  out.reserve((dims.cols + 1) * dims.rows);
  for (int r = 1; r <= dims.rows; ++r) {
    for (int c = 1; c <= dims.cols; ++c) {
      Cell u{r, c};
      if (trace.seeds.contains(u)) {
        out += 'S';
      } else if (reached.contains(u)) {
        out += '#';
      } else {
        out += '.';
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace contagrid
