#pragma once

#include <optional>
#include <vector>

#include "gridsat/deplete.hpp"
#include "gridsat/formula.hpp"
#include "gridsat/grids.hpp"

namespace gridsat {

// SAT -> 3SAT clause-chain split. "3SAT" here means at most three literals
// per clause; short clauses pass through unpadded.
struct ReductionMap {
  CnfFormula source;
  CnfFormula reduced;
  int first_aux = 0;  // first auxiliary variable id, source.var_count + 1
  int aux_count = 0;
  std::vector<std::vector<std::size_t>> produced;  // per source clause: reduced indices
};

ReductionMap cook_reduce(const CnfFormula& f);

// Convenience: full pipeline on a CNF without the 3SAT detour.
// cnf_to_system -> build_compat_matrix -> deplete to fixpoint -> decide.
Verdict solve_formula(const CnfFormula& f, int guard = kDefaultEnumGuard,
                      Schema schema = Schema::Worklist);

// The satisfiability bit read off the diagonal of the depleted matrix of
// the 3SAT-reduced system. This is the paper-side answer; decide() stays
// authoritative.
bool resolution_function(const CnfFormula& f, int guard = kDefaultEnumGuard);

// Lexicographical compatibility matrix: one box per clause pair over
// literal positions, cells false exactly on complementary literal pairs.
struct LexMatrix {
  std::vector<Clause> clauses;
  BoxGrid boxes;
};

LexMatrix build_lex_matrix(const CnfFormula& f);

// One literal per clause, pairwise non-complementary; exists iff the
// formula is satisfiable.
std::optional<std::vector<Literal>> find_implicant(const CnfFormula& f,
                                                   GridSearchStats* stats = nullptr);

// Indicator encoding of the implicant search: exactly-one of each clause's
// indicators, plus a binary exclusion per false lexicographical cell. The
// clause-level combinator is exactly-one, not parity.
struct LexEncoding {
  BooleanSystem system;
  // indicator variable id -> (clause index, literal position); entry 0 unused
  std::vector<std::pair<std::size_t, std::size_t>> indicator_origin;
};

LexEncoding lex_xor_encode(const CnfFormula& f);

}  // namespace gridsat
