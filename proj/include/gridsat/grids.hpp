#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gridsat/compat.hpp"

namespace gridsat {

// A choice of one surviving row per equation with every pairwise box cell
// true; grids biject with satisfying assignments over occurring variables.
struct SolutionGrid {
  std::vector<std::size_t> gamma;  // gamma[i] = row index into equation i's table
  bool operator==(const SolutionGrid&) const = default;
};

struct GridSearchStats {
  std::uint64_t backtracks = 0;
};

// Full m^2 recheck of the grid condition.
bool grid_valid(const BoxGrid& g, const SolutionGrid& grid);

// Complete backtracking search: equations ordered by ascending surviving-row
// count, candidate rows restricted to true diagonal cells, rows by ascending
// index. Returns none iff no grid exists.
std::optional<SolutionGrid> find_grid(const BoxGrid& g, GridSearchStats* stats = nullptr);

struct GridEnumeration {
  std::vector<SolutionGrid> grids;
  bool truncated = false;
};

GridEnumeration enumerate_grids(const BoxGrid& g, std::size_t cap);

// Union of the grid's rows. Well-defined when the grid condition holds;
// a contradiction means the grid is corrupt.
PartialAssignment glue(const SolutionGrid& grid, const CompatMatrix& t);

struct Witness {
  std::vector<bool> values;    // indexed 1..var_count; free variables false
  std::vector<int> free_vars;  // variables occurring in no equation
  SolutionGrid grid;
};

struct Verdict {
  enum class Kind { Unsat, Sat, ClaimViolated };
  Kind kind = Kind::Unsat;
  std::optional<Witness> witness;
  std::size_t surviving_true_cells = 0;
  bool any_true = false;
  bool diag_true = false;  // the diagonal variant of the consistency test
  std::uint64_t backtracks = 0;
};

// Three-way outcome over a depleted matrix. Unsat only when the matrix is
// all-false; surviving trues without an extending grid are reported as
// ClaimViolated, never folded into Unsat.
Verdict decide(const CompatMatrix& t);

}  // namespace gridsat
