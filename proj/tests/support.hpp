#pragma once

// Shared test helpers: independent oracles and corpus generators. These
// stay clear of the implementation paths they are used to check.

#include <cstdint>
#include <random>
#include <vector>

#include "gridsat/boolmat.hpp"
#include "gridsat/formula.hpp"

namespace testsupport {

// Naive triple-loop AND-OR product, the oracle for BoolMatrix::product.
inline gridsat::BoolMatrix naive_product(const gridsat::BoolMatrix& a,
                                         const gridsat::BoolMatrix& b) {
  gridsat::BoolMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      bool acc = false;
      for (std::size_t v = 0; v < a.cols() && !acc; ++v)
        acc = a.get(i, v) && b.get(v, j);
      r.set(i, j, acc);
    }
  return r;
}

inline gridsat::BoolMatrix random_matrix(std::mt19937_64& rng, std::size_t rows,
                                         std::size_t cols, int density_pct = 50) {
  gridsat::BoolMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (static_cast<int>(rng() % 100) < density_pct) m.set(i, j, true);
  return m;
}

inline gridsat::CnfFormula make_formula(int vars, std::vector<std::vector<int>> clauses) {
  gridsat::CnfFormula f;
  f.var_count = vars;
  for (const auto& c : clauses) {
    gridsat::Clause clause;
    for (int lit : c) clause.push_back({lit < 0 ? -lit : lit, lit < 0});
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

// Every normal CNF over variables {1..max_vars} with 1..max_clauses
// clauses: clauses are nonempty sign patterns, formulas are subsets.
// For (3,3) this is the full 2951-formula space.
inline std::vector<gridsat::CnfFormula> exhaustive_corpus(int max_vars, int max_clauses) {
  std::vector<gridsat::Clause> clauses;
  int patterns = 1;
  for (int v = 0; v < max_vars; ++v) patterns *= 3;  // absent / positive / negative
  for (int code = 1; code < patterns; ++code) {
    gridsat::Clause c;
    int rest = code;
    for (int v = 1; v <= max_vars; ++v) {
      int trit = rest % 3;
      rest /= 3;
      if (trit == 1) c.push_back({v, false});
      if (trit == 2) c.push_back({v, true});
    }
    clauses.push_back(std::move(c));
  }

  std::vector<gridsat::CnfFormula> corpus;
  std::vector<std::size_t> picked;
  auto emit = [&]() {
    gridsat::CnfFormula f;
    f.var_count = max_vars;
    for (std::size_t k : picked) f.clauses.push_back(clauses[k]);
    corpus.push_back(std::move(f));
  };
  auto recurse = [&](auto&& self, std::size_t from) -> void {
    if (!picked.empty()) emit();
    if (static_cast<int>(picked.size()) == max_clauses) return;
    for (std::size_t k = from; k < clauses.size(); ++k) {
      picked.push_back(k);
      self(self, k + 1);
      picked.pop_back();
    }
  };
  recurse(recurse, 0);
  return corpus;
}

}  // namespace testsupport
