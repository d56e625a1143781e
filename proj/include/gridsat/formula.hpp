#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridsat {

inline constexpr int kDefaultEnumGuard = 24;

struct ParseError : std::runtime_error {
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NormalityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Literal {
  int var = 0;  // >= 1
  bool negated = false;
  bool operator==(const Literal&) const = default;
  auto operator<=>(const Literal&) const = default;
};

inline Literal negate(Literal l) { return {l.var, !l.negated}; }

using Clause = std::vector<Literal>;

struct CnfFormula {
  std::vector<Clause> clauses;
  int var_count = 0;  // variables are 1..var_count

  std::size_t clause_count() const { return clauses.size(); }
  int max_clause_width() const;  // K
};

bool eval_clause(const Clause& c, const std::vector<bool>& values);  // values[var]
bool eval_formula(const CnfFormula& f, const std::vector<bool>& values);

// Sorted list of variables appearing in at least one clause.
std::vector<int> occurring_variables(const CnfFormula& f);

struct ParseOptions {
  bool strict = false;  // header mismatches become errors instead of warnings
};

CnfFormula parse_dimacs(const std::string& text, const ParseOptions& opts = {},
                        std::vector<std::string>* warnings = nullptr);
std::string serialize_dimacs(const CnfFormula& f,
                             const std::vector<std::string>& comments = {});

struct NormalityReport {
  std::vector<std::pair<std::size_t, std::size_t>> duplicate_clauses;
  std::vector<std::size_t> same_variable_clauses;  // repeated or complementary literal
  bool clean() const { return duplicate_clauses.empty() && same_variable_clauses.empty(); }
  std::string describe() const;
};

NormalityReport validate_normality(const CnfFormula& f);

// Deduplicates clauses, merges repeated literals, drops tautological clauses.
CnfFormula repair_normality(const CnfFormula& f);

// A general Boolean equation: a satisfaction predicate over its local
// variables. Values passed to the predicate are parallel to `vars`.
struct BooleanEquation {
  std::vector<int> vars;  // distinct, sorted ascending
  std::function<bool(const std::vector<bool>&)> predicate;
};

struct BooleanSystem {
  std::vector<BooleanEquation> equations;
  int var_count = 0;
};

// A truth-table row: an assignment defined exactly on one equation's
// local variables.
struct PartialAssignment {
  std::vector<int> vars;  // sorted ascending
  std::vector<bool> values;

  std::optional<bool> value_of(int var) const;
};

// One equation per clause; n = K for CNF input. Rejects non-normal input.
BooleanSystem cnf_to_system(const CnfFormula& f);

// Rows where the predicate holds, in lexicographic order over the sorted
// variable list (false < true, first variable most significant).
std::vector<PartialAssignment> satisfying_rows(const BooleanEquation& e,
                                               int guard = kDefaultEnumGuard);

}  // namespace gridsat
