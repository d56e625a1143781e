#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gridsat/boolmat.hpp"
#include "gridsat/formula.hpp"

namespace gridsat {

// Symmetric m-by-m grid of compatibility boxes. Only boxes with i <= j
// are stored; box(j,i) is served as the transpose, so the mirror clause
// of the symmetry is structural rather than maintained.
class BoxGrid {
 public:
  BoxGrid() = default;
  explicit BoxGrid(std::vector<std::size_t> dims);

  std::size_t size() const { return dims_.size(); }  // m
  std::size_t dim(std::size_t i) const { return dims_[i]; }

  // Copying accessor; transposes when i > j.
  BoolMatrix box(std::size_t i, std::size_t j) const;

  // Direct access to canonical storage. Requires i <= j.
  BoolMatrix& stored(std::size_t i, std::size_t j);
  const BoolMatrix& stored(std::size_t i, std::size_t j) const;

  bool cell(std::size_t i, std::size_t j, std::size_t a, std::size_t b) const;
  void set_cell(std::size_t i, std::size_t j, std::size_t a, std::size_t b, bool v);

  std::size_t true_cells() const;  // counts the full matrix, mirrors included
  bool all_false() const;

  // Full m-by-m expansion, for symmetry checks and snapshots.
  std::vector<std::vector<BoolMatrix>> materialize() const;

  bool operator==(const BoxGrid&) const = default;

 private:
  std::size_t slot(std::size_t i, std::size_t j) const;

  std::vector<std::size_t> dims_;
  std::vector<BoolMatrix> upper_;  // row-major over i <= j
};

struct BoxCoord {
  std::size_t i = 0, j = 0, alpha = 0, beta = 0;
};

// True-assignment compatibility matrix: the box grid plus the per-equation
// satisfying-row tables it indexes.
struct CompatMatrix {
  std::vector<std::vector<PartialAssignment>> row_tables;
  BoxGrid boxes;
  int var_count = 0;
  std::vector<int> occurring_vars;  // sorted union of equation variables

  std::size_t equation_count() const { return row_tables.size(); }

  // Position of `row` in equation i's table, if present.
  std::optional<std::size_t> row_index_of(std::size_t i, const PartialAssignment& row) const;
};

// True iff the rows agree on every shared variable.
bool rows_compatible(const PartialAssignment& r1, const PartialAssignment& r2);

CompatMatrix build_compat_matrix(const BooleanSystem& s, int guard = kDefaultEnumGuard);

// Both symmetry clauses: mirror boxes are transposes, diagonal boxes diagonal.
bool verify_symmetry(const BoxGrid& g);
bool verify_symmetry(const std::vector<std::vector<BoolMatrix>>& full);
inline bool verify_symmetry(const CompatMatrix& t) { return verify_symmetry(t.boxes); }

// Structured snapshot (box dims plus true-cell coordinates) for trace output.
std::string snapshot_json(const CompatMatrix& t);

}  // namespace gridsat
