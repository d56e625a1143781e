#include "gridsat/formula.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gridsat {

int CnfFormula::max_clause_width() const {
  std::size_t k = 0;
  for (const Clause& c : clauses) k = std::max(k, c.size());
  return static_cast<int>(k);
}

bool eval_clause(const Clause& c, const std::vector<bool>& values) {
  for (const Literal& l : c)
    if (values[static_cast<std::size_t>(l.var)] != l.negated) return true;
  return false;
}

bool eval_formula(const CnfFormula& f, const std::vector<bool>& values) {
  for (const Clause& c : f.clauses)
    if (!eval_clause(c, values)) return false;
  return true;
}

std::vector<int> occurring_variables(const CnfFormula& f) {
  std::set<int> vars;
  for (const Clause& c : f.clauses)
    for (const Literal& l : c) vars.insert(l.var);
  return {vars.begin(), vars.end()};
}

CnfFormula parse_dimacs(const std::string& text, const ParseOptions& opts,
                        std::vector<std::string>* warnings) {
  auto warn = [&](std::size_t line, const std::string& msg) {
    if (opts.strict) throw ParseError(line, msg);
    if (warnings) warnings->push_back("line " + std::to_string(line) + ": " + msg);
  };

  CnfFormula f;
  bool seen_header = false;
  int header_vars = 0;
  long header_clauses = 0;
  Clause pending;
  std::size_t lineno = 0;
  std::size_t clause_start_line = 0;

  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c" || tok[0] == 'c') continue;
    if (tok == "p") {
      if (seen_header) throw ParseError(lineno, "duplicate header");
      std::string fmt;
      if (!(ls >> fmt >> header_vars >> header_clauses) || fmt != "cnf")
        throw ParseError(lineno, "malformed header, expected 'p cnf <vars> <clauses>'");
      if (header_vars < 0 || header_clauses < 0)
        throw ParseError(lineno, "negative counts in header");
      seen_header = true;
      f.var_count = header_vars;
      continue;
    }
    if (!seen_header) throw ParseError(lineno, "clause before 'p cnf' header");
    ls.clear();
    ls.str(line);
    long lit;
    while (ls >> lit) {
      if (lit == 0) {
        if (pending.empty())
          throw ParseError(lineno, "empty clause (bare '0')");
        f.clauses.push_back(std::move(pending));
        pending.clear();
        clause_start_line = 0;
      } else {
        int var = static_cast<int>(lit < 0 ? -lit : lit);
        if (var < 1) throw ParseError(lineno, "variable id 0 is not allowed");
        if (pending.empty()) clause_start_line = lineno;
        if (var > header_vars) {
          warn(lineno, "variable " + std::to_string(var) + " exceeds header count " +
                           std::to_string(header_vars));
          f.var_count = std::max(f.var_count, var);
        }
        pending.push_back({var, lit < 0});
      }
    }
    if (!ls.eof()) throw ParseError(lineno, "malformed token: '" + ls.str() + "'");
  }
  if (!seen_header) throw ParseError(lineno, "missing 'p cnf' header");
  if (!pending.empty()) {
    warn(clause_start_line, "unterminated clause at end of input");
    f.clauses.push_back(std::move(pending));
  }
  if (static_cast<long>(f.clauses.size()) != header_clauses) {
    warn(lineno, "clause count " + std::to_string(f.clauses.size()) +
                     " does not match header " + std::to_string(header_clauses));
  }
  return f;
}

std::string serialize_dimacs(const CnfFormula& f, const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const std::string& c : comments) out << "c " << c << "\n";
  out << "p cnf " << f.var_count << " " << f.clauses.size() << "\n";
  for (const Clause& c : f.clauses) {
    for (const Literal& l : c) out << (l.negated ? -l.var : l.var) << " ";
    out << "0\n";
  }
  return out.str();
}

namespace {
Clause canonical(const Clause& c) {
  Clause s = c;
  std::sort(s.begin(), s.end());
  return s;
}
}  // namespace

NormalityReport validate_normality(const CnfFormula& f) {
  NormalityReport report;
  std::map<Clause, std::size_t> seen;
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    Clause key = canonical(f.clauses[i]);
    auto [it, inserted] = seen.emplace(std::move(key), i);
    if (!inserted) report.duplicate_clauses.emplace_back(it->second, i);

    std::set<int> vars;
    for (const Literal& l : f.clauses[i]) {
      if (!vars.insert(l.var).second) {
        report.same_variable_clauses.push_back(i);
        break;
      }
    }
  }
  return report;
}

std::string NormalityReport::describe() const {
  std::ostringstream out;
  for (auto [a, b] : duplicate_clauses)
    out << "clauses " << a + 1 << " and " << b + 1 << " are duplicates; ";
  for (std::size_t i : same_variable_clauses)
    out << "clause " << i + 1 << " has multiple literals on one variable; ";
  return out.str();
}

CnfFormula repair_normality(const CnfFormula& f) {
  CnfFormula out;
  out.var_count = f.var_count;
  std::set<Clause> seen;
  for (const Clause& c : f.clauses) {
    Clause merged;
    bool tautology = false;
    std::map<int, bool> polarity;
    for (const Literal& l : c) {
      auto [it, inserted] = polarity.emplace(l.var, l.negated);
      if (inserted)
        merged.push_back(l);
      else if (it->second != l.negated)
        tautology = true;
    }
    if (tautology) continue;
    if (seen.insert(canonical(merged)).second) out.clauses.push_back(std::move(merged));
  }
  return out;
}

BooleanSystem cnf_to_system(const CnfFormula& f) {
  NormalityReport report = validate_normality(f);
  if (!report.clean())
    throw NormalityError("formula is not normal: " + report.describe());

  BooleanSystem system;
  system.var_count = f.var_count;
  system.equations.reserve(f.clauses.size());
  for (const Clause& c : f.clauses) {
    BooleanEquation eq;
    for (const Literal& l : c) eq.vars.push_back(l.var);
    std::sort(eq.vars.begin(), eq.vars.end());
    // precompute literal -> local index
    std::vector<std::pair<std::size_t, bool>> lits;
    for (const Literal& l : c) {
      std::size_t idx = static_cast<std::size_t>(
          std::lower_bound(eq.vars.begin(), eq.vars.end(), l.var) - eq.vars.begin());
      lits.emplace_back(idx, l.negated);
    }
    eq.predicate = [lits](const std::vector<bool>& values) {
      for (auto [idx, neg] : lits)
        if (values[idx] != neg) return true;
      return false;
    };
    system.equations.push_back(std::move(eq));
  }
  return system;
}

std::optional<bool> PartialAssignment::value_of(int var) const {
  auto it = std::lower_bound(vars.begin(), vars.end(), var);
  if (it == vars.end() || *it != var) return std::nullopt;
  return values[static_cast<std::size_t>(it - vars.begin())];
}

std::vector<PartialAssignment> satisfying_rows(const BooleanEquation& e, int guard) {
  std::size_t n = e.vars.size();
  if (static_cast<int>(n) > guard) {
    throw CapacityError("equation has " + std::to_string(n) +
                        " variables, enumeration guard is " + std::to_string(guard));
  }
  std::vector<PartialAssignment> rows;
  std::vector<bool> values(n, false);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    // first (smallest) variable is the most significant position
    for (std::size_t k = 0; k < n; ++k)
      values[k] = (bits >> (n - 1 - k)) & 1;
    if (e.predicate(values)) rows.push_back({e.vars, values});
  }
  return rows;
}

}  // namespace gridsat
