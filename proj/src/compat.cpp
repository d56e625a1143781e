#include "gridsat/compat.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace gridsat {

BoxGrid::BoxGrid(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  std::size_t m = dims_.size();
  upper_.reserve(m * (m + 1) / 2);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) upper_.emplace_back(dims_[i], dims_[j]);
}

std::size_t BoxGrid::slot(std::size_t i, std::size_t j) const {
  std::size_t m = dims_.size();
  if (i >= m || j >= m) throw std::out_of_range("box index out of range");
  if (i > j) throw std::logic_error("stored() requires i <= j");
  // row-major over the upper triangle
  return i * m - i * (i + 1) / 2 + j;
}

BoolMatrix BoxGrid::box(std::size_t i, std::size_t j) const {
  if (i <= j) return upper_[slot(i, j)];
  return transpose(upper_[slot(j, i)]);
}

BoolMatrix& BoxGrid::stored(std::size_t i, std::size_t j) { return upper_[slot(i, j)]; }
const BoolMatrix& BoxGrid::stored(std::size_t i, std::size_t j) const {
  return upper_[slot(i, j)];
}

bool BoxGrid::cell(std::size_t i, std::size_t j, std::size_t a, std::size_t b) const {
  if (i <= j) return upper_[slot(i, j)].get(a, b);
  return upper_[slot(j, i)].get(b, a);
}

void BoxGrid::set_cell(std::size_t i, std::size_t j, std::size_t a, std::size_t b, bool v) {
  if (i <= j)
    upper_[slot(i, j)].set(a, b, v);
  else
    upper_[slot(j, i)].set(b, a, v);
}

std::size_t BoxGrid::true_cells() const {
  std::size_t total = 0;
  std::size_t m = dims_.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      std::size_t c = stored(i, j).count_true();
      total += (i == j) ? c : 2 * c;
    }
  return total;
}

bool BoxGrid::all_false() const {
  for (const BoolMatrix& b : upper_)
    if (!b.all_false()) return false;
  return true;
}

std::vector<std::vector<BoolMatrix>> BoxGrid::materialize() const {
  std::size_t m = dims_.size();
  std::vector<std::vector<BoolMatrix>> full(m);
  for (std::size_t i = 0; i < m; ++i) {
    full[i].reserve(m);
    for (std::size_t j = 0; j < m; ++j) full[i].push_back(box(i, j));
  }
  return full;
}

bool rows_compatible(const PartialAssignment& r1, const PartialAssignment& r2) {
  std::size_t a = 0, b = 0;
  while (a < r1.vars.size() && b < r2.vars.size()) {
    if (r1.vars[a] < r2.vars[b])
      ++a;
    else if (r1.vars[a] > r2.vars[b])
      ++b;
    else {
      if (r1.values[a] != r2.values[b]) return false;
      ++a;
      ++b;
    }
  }
  return true;
}

CompatMatrix build_compat_matrix(const BooleanSystem& s, int guard) {
  CompatMatrix t;
  t.var_count = s.var_count;
  std::size_t m = s.equations.size();
  t.row_tables.reserve(m);
  std::vector<std::size_t> dims;
  dims.reserve(m);
  std::set<int> occurring;
  for (const BooleanEquation& e : s.equations) {
    t.row_tables.push_back(satisfying_rows(e, guard));
    dims.push_back(t.row_tables.back().size());
    occurring.insert(e.vars.begin(), e.vars.end());
  }
  t.occurring_vars.assign(occurring.begin(), occurring.end());

  t.boxes = BoxGrid(std::move(dims));
  for (std::size_t i = 0; i < m; ++i) {
    t.boxes.stored(i, i) = BoolMatrix::identity(t.row_tables[i].size());
    for (std::size_t j = i + 1; j < m; ++j) {
      BoolMatrix& box = t.boxes.stored(i, j);
      for (std::size_t a = 0; a < t.row_tables[i].size(); ++a)
        for (std::size_t b = 0; b < t.row_tables[j].size(); ++b)
          if (rows_compatible(t.row_tables[i][a], t.row_tables[j][b]))
            box.set(a, b, true);
    }
  }
  return t;
}

std::optional<std::size_t> CompatMatrix::row_index_of(std::size_t i,
                                                      const PartialAssignment& row) const {
  const auto& table = row_tables[i];
  for (std::size_t a = 0; a < table.size(); ++a)
    if (table[a].vars == row.vars && table[a].values == row.values) return a;
  return std::nullopt;
}

bool verify_symmetry(const BoxGrid& g) {
  return verify_symmetry(g.materialize());
}

bool verify_symmetry(const std::vector<std::vector<BoolMatrix>>& full) {
  std::size_t m = full.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      if (full[j][i] != transpose(full[i][j])) return false;
    }
    const BoolMatrix& diag = full[i][i];
    for (std::size_t a = 0; a < diag.rows(); ++a)
      for (std::size_t b = 0; b < diag.cols(); ++b)
        if (a != b && diag.get(a, b)) return false;
  }
  return true;
}

std::string snapshot_json(const CompatMatrix& t) {
  nlohmann::json out;
  std::size_t m = t.equation_count();
  out["equations"] = m;
  out["row_counts"] = nlohmann::json::array();
  for (const auto& table : t.row_tables) out["row_counts"].push_back(table.size());
  auto cells = nlohmann::json::array();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      const BoolMatrix& box = t.boxes.stored(i, j);
      for (std::size_t a = 0; a < box.rows(); ++a)
        for (std::size_t b = 0; b < box.cols(); ++b)
          if (box.get(a, b)) cells.push_back({i, j, a, b});
    }
  out["true_cells_upper"] = std::move(cells);
  out["true_cell_total"] = t.boxes.true_cells();
  return out.dump();
}

}  // namespace gridsat
