#include "gridsat/pipeline.hpp"

#include <algorithm>

namespace gridsat {

ReductionMap cook_reduce(const CnfFormula& f) {
  ReductionMap map;
  map.source = f;
  map.first_aux = f.var_count + 1;
  map.reduced.var_count = f.var_count;
  int next_aux = map.first_aux;

  for (const Clause& c : f.clauses) {
    std::vector<std::size_t> indices;
    if (c.size() <= 3) {
      indices.push_back(map.reduced.clauses.size());
      map.reduced.clauses.push_back(c);
    } else {
      // (q1 v q2 v y1), (!y1 v q3 v y2), ..., (!y_{k-3} v q_{k-1} v qk)
      std::size_t k = c.size();
      int first = next_aux;
      next_aux += static_cast<int>(k - 3);
      indices.push_back(map.reduced.clauses.size());
      map.reduced.clauses.push_back({c[0], c[1], {first, false}});
      for (std::size_t t = 0; t + 4 < k; ++t) {
        indices.push_back(map.reduced.clauses.size());
        map.reduced.clauses.push_back(
            {{first + static_cast<int>(t), true}, c[t + 2],
             {first + static_cast<int>(t) + 1, false}});
      }
      indices.push_back(map.reduced.clauses.size());
      map.reduced.clauses.push_back({{next_aux - 1, true}, c[k - 2], c[k - 1]});
    }
    map.produced.push_back(std::move(indices));
  }
  map.aux_count = next_aux - map.first_aux;
  map.reduced.var_count = f.var_count + map.aux_count;
  return map;
}

Verdict solve_formula(const CnfFormula& f, int guard, Schema schema) {
  BooleanSystem system = cnf_to_system(f);
  CompatMatrix t = build_compat_matrix(system, guard);
  DepleteOptions opts;
  opts.schema = schema;
  deplete(t, opts);
  return decide(t);
}

bool resolution_function(const CnfFormula& f, int guard) {
  ReductionMap map = cook_reduce(f);
  BooleanSystem system = cnf_to_system(map.reduced);
  CompatMatrix t = build_compat_matrix(system, guard);
  deplete(t);
  for (std::size_t i = 0; i < t.boxes.size(); ++i) {
    const BoolMatrix& diag = t.boxes.stored(i, i);
    for (std::size_t a = 0; a < diag.rows(); ++a)
      if (diag.get(a, a)) return true;
  }
  return t.equation_count() == 0;
}

LexMatrix build_lex_matrix(const CnfFormula& f) {
  NormalityReport report = validate_normality(f);
  if (!report.clean())
    throw NormalityError("formula is not normal: " + report.describe());

  LexMatrix lex;
  lex.clauses = f.clauses;
  std::vector<std::size_t> dims;
  dims.reserve(f.clauses.size());
  for (const Clause& c : f.clauses) dims.push_back(c.size());
  lex.boxes = BoxGrid(std::move(dims));

  std::size_t m = f.clauses.size();
  for (std::size_t p = 0; p < m; ++p) {
    lex.boxes.stored(p, p) = BoolMatrix::identity(f.clauses[p].size());
    for (std::size_t q = p + 1; q < m; ++q) {
      BoolMatrix& box = lex.boxes.stored(p, q);
      for (std::size_t a = 0; a < f.clauses[p].size(); ++a)
        for (std::size_t b = 0; b < f.clauses[q].size(); ++b)
          if (f.clauses[p][a] != negate(f.clauses[q][b])) box.set(a, b, true);
    }
  }
  return lex;
}

std::optional<std::vector<Literal>> find_implicant(const CnfFormula& f,
                                                   GridSearchStats* stats) {
  LexMatrix lex = build_lex_matrix(f);
  std::optional<SolutionGrid> grid = find_grid(lex.boxes, stats);
  if (!grid) return std::nullopt;
  std::vector<Literal> implicant;
  implicant.reserve(lex.clauses.size());
  for (std::size_t p = 0; p < lex.clauses.size(); ++p)
    implicant.push_back(lex.clauses[p][grid->gamma[p]]);
  return implicant;
}

LexEncoding lex_xor_encode(const CnfFormula& f) {
  LexMatrix lex = build_lex_matrix(f);
  LexEncoding enc;
  enc.indicator_origin.emplace_back(0, 0);  // ids start at 1

  std::size_t m = lex.clauses.size();
  std::vector<int> offset(m + 1, 0);
  int next = 1;
  for (std::size_t p = 0; p < m; ++p) {
    offset[p] = next;
    for (std::size_t mu = 0; mu < lex.clauses[p].size(); ++mu) {
      enc.indicator_origin.emplace_back(p, mu);
      ++next;
    }
  }
  enc.system.var_count = next - 1;

  for (std::size_t p = 0; p < m; ++p) {
    BooleanEquation eq;
    for (std::size_t mu = 0; mu < lex.clauses[p].size(); ++mu)
      eq.vars.push_back(offset[p] + static_cast<int>(mu));
    eq.predicate = [](const std::vector<bool>& values) {
      int trues = 0;
      for (bool v : values) trues += v ? 1 : 0;
      return trues == 1;
    };
    enc.system.equations.push_back(std::move(eq));
  }

  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = p + 1; q < m; ++q) {
      const BoolMatrix& box = lex.boxes.stored(p, q);
      for (std::size_t a = 0; a < box.rows(); ++a)
        for (std::size_t b = 0; b < box.cols(); ++b) {
          if (box.get(a, b)) continue;
          BooleanEquation eq;
          eq.vars = {offset[p] + static_cast<int>(a), offset[q] + static_cast<int>(b)};
          std::sort(eq.vars.begin(), eq.vars.end());
          eq.predicate = [](const std::vector<bool>& values) {
            return !(values[0] && values[1]);
          };
          enc.system.equations.push_back(std::move(eq));
        }
    }
  return enc;
}

}  // namespace gridsat
