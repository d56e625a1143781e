#include "gridsat/grids.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gridsat {

bool grid_valid(const BoxGrid& g, const SolutionGrid& grid) {
  std::size_t m = g.size();
  if (grid.gamma.size() != m) return false;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (!g.cell(i, j, grid.gamma[i], grid.gamma[j])) return false;
  return true;
}

namespace {

struct SearchOrder {
  std::vector<std::size_t> order;                    // equation visit order
  std::vector<std::vector<std::size_t>> candidates;  // rows with true diagonal, per eq
};

SearchOrder make_order(const BoxGrid& g) {
  std::size_t m = g.size();
  SearchOrder s;
  s.candidates.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const BoolMatrix& diag = g.stored(i, i);
    for (std::size_t a = 0; a < diag.rows(); ++a)
      if (diag.get(a, a)) s.candidates[i].push_back(a);
  }
  s.order.resize(m);
  std::iota(s.order.begin(), s.order.end(), std::size_t{0});
  std::stable_sort(s.order.begin(), s.order.end(), [&](std::size_t a, std::size_t b) {
    return s.candidates[a].size() < s.candidates[b].size();
  });
  return s;
}

// Depth-first over row choices; calls `emit` on every complete grid and
// stops when it returns false.
template <typename Emit>
void search(const BoxGrid& g, const SearchOrder& s, GridSearchStats* stats, Emit emit) {
  std::size_t m = g.size();
  std::vector<std::size_t> gamma(m, 0);
  std::vector<std::size_t> chosen;  // equations assigned so far, in visit order
  chosen.reserve(m);

  struct Frame {
    std::size_t next_candidate = 0;
  };
  std::vector<Frame> stack(m);

  std::size_t depth = 0;
  bool done = m == 0;
  if (m == 0) {
    emit(SolutionGrid{});
    return;
  }
  while (!done) {
    std::size_t eq = s.order[depth];
    bool advanced = false;
    for (std::size_t& c = stack[depth].next_candidate; c < s.candidates[eq].size();) {
      std::size_t row = s.candidates[eq][c++];
      bool ok = true;
      for (std::size_t prev : chosen)
        if (!g.cell(prev, eq, gamma[prev], row)) {
          ok = false;
          break;
        }
      if (ok) {
        gamma[eq] = row;
        chosen.push_back(eq);
        advanced = true;
        break;
      }
    }
    if (advanced) {
      if (depth + 1 == m) {
        if (!emit(SolutionGrid{gamma})) return;
        chosen.pop_back();  // continue with the next candidate at this depth
      } else {
        ++depth;
        stack[depth].next_candidate = 0;
      }
    } else {
      if (stats) ++stats->backtracks;
      if (depth == 0) return;
      --depth;
      chosen.pop_back();
    }
  }
}

}  // namespace

std::optional<SolutionGrid> find_grid(const BoxGrid& g, GridSearchStats* stats) {
  SearchOrder s = make_order(g);
  std::optional<SolutionGrid> found;
  search(g, s, stats, [&](SolutionGrid grid) {
    found = std::move(grid);
    return false;
  });
  return found;
}

GridEnumeration enumerate_grids(const BoxGrid& g, std::size_t cap) {
  SearchOrder s = make_order(g);
  GridEnumeration out;
  search(g, s, nullptr, [&](SolutionGrid grid) {
    if (out.grids.size() == cap) {
      out.truncated = true;
      return false;
    }
    out.grids.push_back(std::move(grid));
    return true;
  });
  return out;
}

PartialAssignment glue(const SolutionGrid& grid, const CompatMatrix& t) {
  std::size_t m = t.equation_count();
  if (grid.gamma.size() != m) throw std::logic_error("grid length does not match matrix");
  PartialAssignment glued;
  for (std::size_t i = 0; i < m; ++i) {
    const PartialAssignment& row = t.row_tables[i].at(grid.gamma[i]);
    for (std::size_t k = 0; k < row.vars.size(); ++k) {
      auto existing = glued.value_of(row.vars[k]);
      if (existing.has_value()) {
        if (*existing != row.values[k])
          throw std::logic_error("incompatible rows in alleged solution grid");
        continue;
      }
      auto it = std::lower_bound(glued.vars.begin(), glued.vars.end(), row.vars[k]);
      std::size_t pos = static_cast<std::size_t>(it - glued.vars.begin());
      glued.vars.insert(it, row.vars[k]);
      glued.values.insert(glued.values.begin() + static_cast<std::ptrdiff_t>(pos),
                          row.values[k]);
    }
  }
  return glued;
}

Verdict decide(const CompatMatrix& t) {
  Verdict v;
  const BoxGrid& g = t.boxes;
  v.surviving_true_cells = g.true_cells();
  v.any_true = !g.all_false();
  for (std::size_t i = 0; i < g.size() && !v.diag_true; ++i) {
    const BoolMatrix& diag = g.stored(i, i);
    for (std::size_t a = 0; a < diag.rows(); ++a)
      if (diag.get(a, a)) {
        v.diag_true = true;
        break;
      }
  }

  if (!v.any_true && t.equation_count() > 0) {
    v.kind = Verdict::Kind::Unsat;
    return v;
  }

  GridSearchStats stats;
  std::optional<SolutionGrid> grid = find_grid(g, &stats);
  v.backtracks = stats.backtracks;
  if (!grid) {
    v.kind = Verdict::Kind::ClaimViolated;
    return v;
  }

  Witness w;
  w.grid = *grid;
  w.values.assign(static_cast<std::size_t>(t.var_count) + 1, false);
  PartialAssignment glued = glue(*grid, t);
  for (std::size_t k = 0; k < glued.vars.size(); ++k)
    w.values[static_cast<std::size_t>(glued.vars[k])] = glued.values[k];
  for (int var = 1; var <= t.var_count; ++var)
    if (!std::binary_search(t.occurring_vars.begin(), t.occurring_vars.end(), var))
      w.free_vars.push_back(var);
  v.witness = std::move(w);
  v.kind = Verdict::Kind::Sat;
  return v;
}

}  // namespace gridsat
