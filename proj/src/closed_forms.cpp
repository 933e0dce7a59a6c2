#include "contagrid/closed_forms.hpp"

namespace contagrid::closed_forms {

std::string to_string(GammaMethod method) {
  switch (method) {
    case GammaMethod::theorem: return "theorem";
    case GammaMethod::path_formula: return "path-formula";
    case GammaMethod::recurrence_col: return "recurrence-col";
    case GammaMethod::recurrence_pq: return "recurrence-pq";
    case GammaMethod::recurrence_path4: return "recurrence-path4";
  }
  return "?";
}

GammaValue gamma(GridDims dims) {
  GridDims canon = dims.rows <= dims.cols ? dims : dims.transposed();
  long long n = canon.rows, m = canon.cols;
  long long value;
  if (n == 2 && m % 2 == 1) {
    value = (m + 1) / 2 + 1;  // ceil(m/2) + 1
  } else {
    value = m / 2 + 1;  // floor(m/2) + 1
  }
  return GammaValue{dims, value, GammaMethod::theorem};
}

long long gamma_path(long long m) {
  if (m < 1) throw input_error("path length must be >= 1, got " + std::to_string(m));
  return m / 2 + 1;
}

long long gamma_rec_path4(long long m) {
  if (m < 4) throw input_error("path recurrence needs m >= 4, got " + std::to_string(m));
  long long tail = m - 4;
  long long base;
  switch (tail) {
    case 0: base = 1; break;
    case 1: base = 1; break;
    case 2: base = 2; break;
    case 3: base = 2; break;
    default: base = gamma_path(tail); break;
  }
  return base + 2;
}

long long gamma_rec_col(GridDims dims) {
  long long n = dims.rows, m = dims.cols;
  if (!(m > n && n >= 3)) {
    throw input_error("column recurrence needs m > n >= 3, got " + to_string(dims));
  }
  long long parity_term = (m % 2 == 0) ? 1 : 0;  // (1 + (-1)^m) / 2
  return gamma(GridDims(dims.rows, dims.cols - 1)).value + parity_term;
}

long long gamma_rec_pq(GridDims dims, int p, int q) {
  long long n = dims.rows, m = dims.cols;
  if (!(m >= n && n >= 3)) {
    throw input_error("block recurrence needs m >= n >= 3, got " + to_string(dims));
  }
  if (p < 0 || q < 0 || p > n - 3 || q > m - 3 || m - q < n - p) {
    throw input_error("block recurrence needs 0 <= p <= n-3, 0 <= q <= m-3, m-q >= n-p; got p=" +
                      std::to_string(p) + " q=" + std::to_string(q) + " for " + to_string(dims));
  }
  long long reduced = gamma(GridDims(dims.rows - p, dims.cols - q)).value;
  if (m % 2 == 0 && q % 2 == 1) {
    return reduced + (q + 1) / 2;  // ceil(q/2)
  }
  return reduced + q / 2;  // floor(q/2)
}

std::vector<Cell> zigzag_path(GridDims dims) {
  int n = dims.rows, m = dims.cols;
  if (n < 2) {
    throw input_error("zig-zag path needs n >= 2; 1-row grids use path_seeds");
  }
  std::vector<Cell> out;
  out.reserve(m);
  int period = 2 * (n - 1);
  for (int j = 1; j <= m; ++j) {
    int t = (j - 1) % period;
    int r = t <= n - 1 ? 1 + t : 2 * n - 1 - t;
    out.push_back(Cell{r, j});
  }
  return out;
}

CellSet zigzag_seeds(GridDims dims) {
  int n = dims.rows, m = dims.cols;
  if (n == 1) {
    throw input_error("zig-zag seeds need n >= 2; 1-row grids use path_seeds");
  }
  if (n == 2 && m % 2 == 1) {
    throw input_error("2-row grids with odd column count use tworow_odd_seeds");
  }
  if (n > 2 && !(m >= n && n >= 3)) {
    throw input_error("zig-zag seeds need m >= n >= 3 or n = 2 with m even, got " +
                      to_string(dims));
  }
  std::vector<Cell> path = zigzag_path(dims);
  CellSet out(dims);
  for (int j = 1; j <= m; j += 2) {
    if (j == m) continue;  // column-m path cell is always skipped
    out.insert(path[j - 1]);
  }
  out.insert(Cell{n, m});
  return out;
}

CellSet diagonal_seeds(int m) {
  GridDims dims(m, m);
  CellSet out(dims);
  for (int i = 1; i <= m; ++i) out.insert(Cell{i, i});
  return out;
}

CellSet tworow_odd_seeds(int m) {
  if (m < 3 || m % 2 == 0) {
    throw input_error("tworow_odd_seeds needs odd m >= 3, got " + std::to_string(m));
  }
  GridDims dims(2, m);
  CellSet out(dims);
  for (int j = 1; j <= m; j += 2) out.insert(Cell{1, j});
  out.insert(Cell{2, m});
  return out;
}

CellSet path_seeds(int m) {
  if (m < 1) throw input_error("path length must be >= 1, got " + std::to_string(m));
  GridDims dims(1, m);
  CellSet out(dims);
  for (int j = 1; j <= m; j += 2) out.insert(Cell{1, j});
  if (m % 2 == 0) out.insert(Cell{1, m});
  return out;
}

}  // namespace contagrid::closed_forms
