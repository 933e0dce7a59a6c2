#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "contagrid/grid.hpp"

namespace contagrid::closed_forms {

enum class GammaMethod {
  theorem,
  path_formula,
  recurrence_col,
  recurrence_pq,
  recurrence_path4,
};

std::string to_string(GammaMethod method);

struct GammaValue {
  GridDims dims;
  long long value;
  GammaMethod method;
};

// Exact contamination number. Accepts any n,m >= 1; a grid with n > m is
// transposed first.
GammaValue gamma(GridDims dims);

// Contamination number of the 1 x m path grid: floor(m/2) + 1.
long long gamma_path(long long m);

// Path recurrence gamma(1,m) = gamma(1,m-4) + 2 with base values
// gamma(1,0) = gamma(1,1) = 1 and gamma(1,2) = gamma(1,3) = 2.
long long gamma_rec_path4(long long m);

// Column-removal recurrence for m > n >= 3:
// gamma(n,m) = gamma(n,m-1) + (1 + (-1)^m)/2.
long long gamma_rec_col(GridDims dims);

// Block-removal recurrence for m >= n >= 3, p <= n-3, q <= m-3, m-q >= n-p:
// gamma(n,m) = gamma(n-p,m-q) + ceil(q/2) when m even and q odd,
//              gamma(n-p,m-q) + floor(q/2) otherwise.
long long gamma_rec_pq(GridDims dims, int p, int q);

// One cell per column along the reflected sawtooth of period 2(n-1):
// rows 1,2,...,n,n-1,...,2,1,2,... Starts at (1,1). Requires n >= 2.
std::vector<Cell> zigzag_path(GridDims dims);

// Alternate cells of the zig-zag path at odd columns, with the column-m path
// cell always excluded, plus the corner (n,m). Full closure of size
// floor(m/2)+1. Domain: m >= n >= 3, or n = 2 with m even.
CellSet zigzag_seeds(GridDims dims);

// Main diagonal of the m x m grid; its closure covers the grid.
CellSet diagonal_seeds(int m);

// Minimal seeds of the 2 x m grid for odd m >= 3:
// {(1,1),(1,3),...,(1,m)} plus (2,m); size ceil(m/2)+1.
CellSet tworow_odd_seeds(int m);

// Minimal seeds of the 1 x m path: odd cells, plus (1,m) when m is even;
// size floor(m/2)+1.
CellSet path_seeds(int m);

}  // namespace contagrid::closed_forms
