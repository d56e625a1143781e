#include "gridsat/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

namespace gridsat {

BruteForceResult brute_force(const CnfFormula& f, int guard) {
  BruteForceResult result;
  result.occurring = occurring_variables(f);
  std::size_t n = result.occurring.size();
  if (static_cast<int>(n) > guard) {
    throw CapacityError("brute force over " + std::to_string(n) +
                        " variables exceeds guard " + std::to_string(guard));
  }
  std::vector<bool> values(static_cast<std::size_t>(f.var_count) + 1, false);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    for (std::size_t k = 0; k < n; ++k)
      values[static_cast<std::size_t>(result.occurring[k])] = (bits >> (n - 1 - k)) & 1;
    if (eval_formula(f, values)) {
      ++result.model_count;
      if (!result.model) result.model = values;
    }
  }
  result.satisfiable = result.model_count > 0;
  return result;
}

namespace {

// Bounded draw with plain modulo: bias is irrelevant here and the output
// stays identical across platforms, unlike std::uniform_int_distribution.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

Clause sorted_key(Clause c) {
  std::sort(c.begin(), c.end());
  return c;
}

double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

CnfFormula random_cnf(int vars, int clauses, int width, std::uint64_t seed) {
  if (width < 1 || width > vars)
    throw GenerationError("clause width " + std::to_string(width) +
                          " not in [1, vars=" + std::to_string(vars) + "]");
  // distinct normal clauses available: C(vars, width) * 2^width
  if (log_binomial(vars, width) + width * std::log(2.0) < std::log(clauses + 0.0))
    throw GenerationError("cannot build " + std::to_string(clauses) +
                          " distinct clauses of width " + std::to_string(width) +
                          " over " + std::to_string(vars) + " variables");

  std::mt19937_64 rng(seed);
  CnfFormula f;
  f.var_count = vars;
  std::set<Clause> seen;
  while (static_cast<int>(f.clauses.size()) < clauses) {
    // partial Fisher-Yates for `width` distinct variables
    std::vector<int> pool(static_cast<std::size_t>(vars));
    for (int v = 0; v < vars; ++v) pool[static_cast<std::size_t>(v)] = v + 1;
    Clause c;
    for (int k = 0; k < width; ++k) {
      std::size_t pick = static_cast<std::size_t>(k) +
                         static_cast<std::size_t>(draw(rng, static_cast<std::uint64_t>(vars - k)));
      std::swap(pool[static_cast<std::size_t>(k)], pool[pick]);
      c.push_back({pool[static_cast<std::size_t>(k)], draw(rng, 2) == 1});
    }
    if (seen.insert(sorted_key(c)).second) f.clauses.push_back(std::move(c));
  }
  return f;
}

CnfFormula minimize_violation(const CnfFormula& f,
                              const std::function<bool(const CnfFormula&)>& violates) {
  CnfFormula current = f;
  bool changed = true;
  while (changed) {
    changed = false;
    // clause deletion
    for (std::size_t i = 0; i < current.clauses.size();) {
      CnfFormula candidate = current;
      candidate.clauses.erase(candidate.clauses.begin() + static_cast<std::ptrdiff_t>(i));
      if (!candidate.clauses.empty() && violates(candidate)) {
        current = std::move(candidate);
        changed = true;
      } else {
        ++i;
      }
    }
    // literal deletion
    for (std::size_t i = 0; i < current.clauses.size(); ++i) {
      for (std::size_t k = 0; k < current.clauses[i].size();) {
        if (current.clauses[i].size() == 1) break;
        CnfFormula candidate = current;
        candidate.clauses[i].erase(candidate.clauses[i].begin() +
                                   static_cast<std::ptrdiff_t>(k));
        if (validate_normality(candidate).clean() && violates(candidate)) {
          current = std::move(candidate);
          changed = true;
        } else {
          ++k;
        }
      }
    }
  }
  return current;
}

FuzzReport fuzz_compare(const FuzzConfig& config) {
  FuzzReport report;
  report.config = config;
  std::mt19937_64 rng(config.seed);

  auto violates = [&](const CnfFormula& g) {
    if (!validate_normality(g).clean()) return false;
    return solve_formula(g, config.guard, config.schema).kind ==
           Verdict::Kind::ClaimViolated;
  };

  for (std::size_t idx = 0; idx < config.instances; ++idx) {
    int clauses = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(config.max_clauses)));
    int width = std::min(config.width, config.vars);
    std::uint64_t instance_seed = rng();
    CnfFormula f;
    try {
      f = random_cnf(config.vars, clauses, width, instance_seed);
    } catch (const GenerationError&) {
      ++report.capacity_skips;
      ++report.instances;
      continue;
    }

    Verdict verdict;
    BruteForceResult oracle;
    try {
      verdict = solve_formula(f, config.guard, config.schema);
      oracle = brute_force(f, config.guard);
    } catch (const CapacityError&) {
      ++report.capacity_skips;
      ++report.instances;
      continue;
    }
    ++report.instances;
    report.total_backtracks += verdict.backtracks;

    switch (verdict.kind) {
      case Verdict::Kind::Sat: {
        if (!oracle.satisfiable)
          throw FuzzMismatchError("decide() claims SAT on oracle-UNSAT instance",
                                  serialize_dimacs(f));
        if (!eval_formula(f, verdict.witness->values))
          throw FuzzMismatchError("SAT witness fails direct evaluation",
                                  serialize_dimacs(f));
        ++report.agreements;
        break;
      }
      case Verdict::Kind::Unsat: {
        if (oracle.satisfiable)
          throw FuzzMismatchError("decide() claims UNSAT on oracle-SAT instance",
                                  serialize_dimacs(f));
        ++report.agreements;
        break;
      }
      case Verdict::Kind::ClaimViolated: {
        ViolationRecord record;
        record.instance_index = idx;
        record.dimacs = serialize_dimacs(f);
        record.surviving_true_cells = verdict.surviving_true_cells;
        record.oracle_satisfiable = oracle.satisfiable;
        if (config.minimize) {
          CnfFormula minimized = minimize_violation(f, violates);
          record.minimized_dimacs = serialize_dimacs(
              minimized, {"minimized reproducer, seed " + std::to_string(instance_seed),
                          "oracle: " + std::string(brute_force(minimized, config.guard)
                                                           .satisfiable
                                                       ? "SAT"
                                                       : "UNSAT")});
        }
        report.violations.push_back(std::move(record));
        break;
      }
    }
  }
  return report;
}

std::string FuzzReport::summary() const {
  std::ostringstream out;
  out << "fuzz: " << instances << " instances, " << agreements << " oracle agreements, "
      << violations.size() << " claim violations, " << capacity_skips
      << " capacity skips (seed " << config.seed << ", vars " << config.vars << ", m<="
      << config.max_clauses << ", K=" << config.width << ")\n";
  out << "total grid-search backtracks: " << total_backtracks << "\n";
  for (const ViolationRecord& v : violations)
    out << "  violation at instance " << v.instance_index << ": "
        << v.surviving_true_cells << " surviving true cells, oracle says "
        << (v.oracle_satisfiable ? "SAT" : "UNSAT") << "\n";
  return out.str();
}

std::string FuzzReport::to_jsonl() const {
  std::ostringstream out;
  for (const ViolationRecord& v : violations) {
    nlohmann::json line = {{"type", "claim_violation"},
                           {"instance", v.instance_index},
                           {"surviving_true_cells", v.surviving_true_cells},
                           {"oracle_satisfiable", v.oracle_satisfiable},
                           {"dimacs", v.dimacs},
                           {"minimized_dimacs", v.minimized_dimacs}};
    out << line.dump() << "\n";
  }
  nlohmann::json footer = {{"type", "summary"},
                           {"instances", instances},
                           {"agreements", agreements},
                           {"violations", violations.size()},
                           {"capacity_skips", capacity_skips},
                           {"total_backtracks", total_backtracks},
                           {"seed", config.seed},
                           {"vars", config.vars},
                           {"max_clauses", config.max_clauses},
                           {"width", config.width}};
  out << footer.dump() << "\n";
  return out.str();
}

std::vector<ScalingRecord> bench_scaling(const BenchConfig& config) {
  std::vector<ScalingRecord> records;
  std::mt19937_64 rng(config.seed);
  for (int m : config.clause_counts) {
    for (int rep = 0; rep < config.repetitions; ++rep) {
      std::uint64_t seed = rng();
      int vars = std::max(config.width,
                          static_cast<int>(std::lround(m / config.ratio)));
      // grow the pool until m distinct clauses exist
      while (log_binomial(vars, config.width) + config.width * std::log(2.0) <
             std::log(static_cast<double>(m)))
        ++vars;
      CnfFormula f = random_cnf(vars, m, std::min(config.width, vars), seed);
      BooleanSystem system = cnf_to_system(f);
      CompatMatrix t = build_compat_matrix(system);
      DepleteOptions opts;
      opts.schema = config.schema;
      auto start = std::chrono::steady_clock::now();
      DepletionOutcome outcome = deplete(t, opts);
      auto stop = std::chrono::steady_clock::now();
      ScalingRecord record;
      record.vars = vars;
      record.clauses = m;
      record.width = std::min(config.width, vars);
      record.seed = seed;
      record.seconds = std::chrono::duration<double>(stop - start).count();
      record.sweeps = outcome.sweeps;
      record.flips = outcome.flips;
      record.steps = outcome.steps;
      records.push_back(record);
    }
  }
  return records;
}

double loglog_slope(const std::vector<ScalingRecord>& records) {
  // group by clause count, regress log(mean steps) on log(m)
  std::map<int, std::pair<double, int>> groups;
  for (const ScalingRecord& r : records) {
    auto& [sum, count] = groups[r.clauses];
    sum += static_cast<double>(r.steps);
    ++count;
  }
  std::vector<double> xs, ys;
  for (auto& [m, acc] : groups) {
    xs.push_back(std::log(static_cast<double>(m)));
    ys.push_back(std::log(acc.first / acc.second));
  }
  double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sx += xs[k];
    sy += ys[k];
    sxx += xs[k] * xs[k];
    sxy += xs[k] * ys[k];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace gridsat
