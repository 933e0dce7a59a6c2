#pragma once

#include <string>

#include "contagrid/search.hpp"

namespace contagrid::tables {

// Upper-triangle table of gamma (closed form) or alpha (enumeration).
// gamma rows run n = 1..max_n; alpha rows include the zero row/column with
// value 0, mirroring the reference triangle. format is "csv" ("n,m,value"
// lines) or "json".
std::string table_text(const std::string& quantity, int max_n, int max_m,
                       const std::string& format, const search::SearchBudget& budget,
                       int jobs = 1);

}  // namespace contagrid::tables
