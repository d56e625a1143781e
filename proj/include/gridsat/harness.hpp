#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gridsat/formula.hpp"
#include "gridsat/grids.hpp"
#include "gridsat/pipeline.hpp"

namespace gridsat {

struct GenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FuzzMismatchError : std::runtime_error {
  FuzzMismatchError(const std::string& what, std::string dimacs)
      : std::runtime_error(what), dimacs(std::move(dimacs)) {}
  std::string dimacs;
};

struct BruteForceResult {
  bool satisfiable = false;
  std::uint64_t model_count = 0;  // over occurring variables
  std::optional<std::vector<bool>> model;  // indexed 1..var_count, free vars false
  std::vector<int> occurring;
};

// Exhaustive enumeration over occurring variables.
BruteForceResult brute_force(const CnfFormula& f, int guard = kDefaultEnumGuard);

// Uniform random normal CNF: `width` distinct variables per clause, uniform
// signs, duplicate clauses resampled. Deterministic per seed.
CnfFormula random_cnf(int vars, int clauses, int width, std::uint64_t seed);

struct FuzzConfig {
  int vars = 8;
  int max_clauses = 12;
  int width = 3;
  std::size_t instances = 1000;
  std::uint64_t seed = 1;
  int guard = kDefaultEnumGuard;
  Schema schema = Schema::Worklist;
  bool minimize = true;
};

struct ViolationRecord {
  std::uint64_t instance_index = 0;
  std::string dimacs;
  std::string minimized_dimacs;
  std::size_t surviving_true_cells = 0;
  bool oracle_satisfiable = false;
};

struct FuzzReport {
  FuzzConfig config;
  std::size_t instances = 0;
  std::size_t agreements = 0;
  std::size_t capacity_skips = 0;
  std::vector<ViolationRecord> violations;
  std::uint64_t total_backtracks = 0;

  std::string summary() const;
  std::string to_jsonl() const;  // one record line per instance class + footer
};

// Cross-validates decide() against the oracle on random instances. A
// SAT/UNSAT verdict contradicting the oracle throws FuzzMismatchError;
// ClaimViolated instances are recorded with minimized reproducers.
FuzzReport fuzz_compare(const FuzzConfig& config);

// Greedy clause deletion then literal deletion, re-verifying `violates`
// after every step. The result still violates.
CnfFormula minimize_violation(const CnfFormula& f,
                              const std::function<bool(const CnfFormula&)>& violates);

struct ScalingRecord {
  int vars = 0;
  int clauses = 0;
  int width = 0;
  std::uint64_t seed = 0;
  double seconds = 0.0;
  std::size_t sweeps = 0;
  std::uint64_t flips = 0;
  std::uint64_t steps = 0;  // triplet-steps
};

struct BenchConfig {
  std::vector<int> clause_counts = {10, 20, 40, 80};
  double ratio = 4.0;  // clauses per variable
  int width = 3;
  int repetitions = 5;
  std::uint64_t seed = 1;
  Schema schema = Schema::Worklist;
};

std::vector<ScalingRecord> bench_scaling(const BenchConfig& config);

// Least-squares slope of log(mean triplet-steps) against log(m).
double loglog_slope(const std::vector<ScalingRecord>& records);

}  // namespace gridsat
