#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gridsat/compat.hpp"
#include "gridsat/deplete.hpp"
#include "gridsat/formula.hpp"
#include "gridsat/grids.hpp"
#include "gridsat/harness.hpp"
#include "gridsat/pipeline.hpp"

namespace {

constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;
constexpr int kExitClaimViolated = 30;
constexpr int kExitError = 1;

struct CommonOpts {
  std::string input = "-";
  bool strict_dimacs = false;
  bool repair = false;
  std::string schema = "worklist";
  std::string format = "human";
};

int enum_guard() {
  if (const char* env = std::getenv("GRIDSAT_ENUM_GUARD")) return std::atoi(env);
  return gridsat::kDefaultEnumGuard;
}

gridsat::Schema parse_schema(const std::string& name) {
  if (name == "roundrobin") return gridsat::Schema::RoundRobin;
  if (name == "roundrobin-reversed") return gridsat::Schema::RoundRobinReversed;
  return gridsat::Schema::Worklist;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

gridsat::CnfFormula load_formula(const CommonOpts& opts) {
  std::vector<std::string> warnings;
  gridsat::CnfFormula f =
      gridsat::parse_dimacs(read_input(opts.input), {opts.strict_dimacs}, &warnings);
  for (const std::string& w : warnings) std::cerr << "c warning: " << w << "\n";
  if (!gridsat::validate_normality(f).clean()) {
    if (!opts.repair)
      throw gridsat::NormalityError("input is not normal (use --repair): " +
                                    gridsat::validate_normality(f).describe());
    f = gridsat::repair_normality(f);
  }
  return f;
}

void print_witness(const gridsat::Witness& w) {
  std::cout << "v";
  for (std::size_t var = 1; var < w.values.size(); ++var)
    std::cout << " " << (w.values[var] ? static_cast<long>(var) : -static_cast<long>(var));
  std::cout << " 0\n";
}

int cmd_solve(const CommonOpts& opts, bool early_stop) {
  gridsat::CnfFormula f = load_formula(opts);
  gridsat::BooleanSystem system = gridsat::cnf_to_system(f);
  gridsat::CompatMatrix t = gridsat::build_compat_matrix(system, enum_guard());
  gridsat::DepleteOptions dopts;
  dopts.schema = parse_schema(opts.schema);
  dopts.early_stop = early_stop;
  gridsat::DepletionOutcome outcome = gridsat::deplete(t, dopts);
  bool structured = opts.format == "structured";

  if (outcome.early_stop && early_stop) {
    if (structured) {
      nlohmann::json line = {{"result", "UNSAT"},
                             {"early_stop_box", {outcome.early_stop->first,
                                                 outcome.early_stop->second}}};
      std::cout << line.dump() << "\n";
    } else {
      std::cout << "s UNSATISFIABLE\n";
    }
    return kExitUnsat;
  }

  gridsat::Verdict verdict = gridsat::decide(t);
  switch (verdict.kind) {
    case gridsat::Verdict::Kind::Sat: {
      if (structured) {
        std::vector<long> model;
        for (std::size_t var = 1; var < verdict.witness->values.size(); ++var)
          model.push_back(verdict.witness->values[var] ? static_cast<long>(var)
                                                       : -static_cast<long>(var));
        nlohmann::json line = {{"result", "SAT"},
                               {"model", model},
                               {"free_vars", verdict.witness->free_vars},
                               {"backtracks", verdict.backtracks}};
        std::cout << line.dump() << "\n";
      } else {
        std::cout << "s SATISFIABLE\n";
        print_witness(*verdict.witness);
      }
      return kExitSat;
    }
    case gridsat::Verdict::Kind::Unsat:
      if (structured)
        std::cout << nlohmann::json{{"result", "UNSAT"}}.dump() << "\n";
      else
        std::cout << "s UNSATISFIABLE\n";
      return kExitUnsat;
    case gridsat::Verdict::Kind::ClaimViolated:
      if (structured) {
        nlohmann::json line = {{"result", "CLAIM-VIOLATED"},
                               {"surviving_true_cells", verdict.surviving_true_cells}};
        std::cout << line.dump() << "\n";
      } else {
        std::cout << "s UNKNOWN (CLAIM-VIOLATED)\n"
                  << "c depleted matrix keeps " << verdict.surviving_true_cells
                  << " true cells but no solution grid extends them\n";
      }
      return kExitClaimViolated;
  }
  return kExitError;
}

int cmd_deplete(const CommonOpts& opts, const std::string& trace_path) {
  gridsat::CnfFormula f = load_formula(opts);
  gridsat::BooleanSystem system = gridsat::cnf_to_system(f);
  gridsat::CompatMatrix t = gridsat::build_compat_matrix(system, enum_guard());
  gridsat::DepleteOptions dopts;
  dopts.schema = parse_schema(opts.schema);
  dopts.record_trace = !trace_path.empty();
  gridsat::DepletionOutcome outcome = gridsat::deplete(t, dopts);

  if (!trace_path.empty()) {
    std::ofstream trace(trace_path);
    if (!trace) throw std::runtime_error("cannot open trace file: " + trace_path);
    for (const gridsat::TraceRecord& r : outcome.trace) {
      nlohmann::json line = {{"i", r.triplet.i},
                             {"mu", r.triplet.mu},
                             {"j", r.triplet.j},
                             {"flips", r.flips},
                             {"true_cells", r.true_cells}};
      trace << line.dump() << "\n";
    }
  }
  if (opts.format == "structured") {
    nlohmann::json line = {{"sweeps", outcome.sweeps},
                           {"flips", outcome.flips},
                           {"steps", outcome.steps},
                           {"snapshot", nlohmann::json::parse(gridsat::snapshot_json(t))}};
    std::cout << line.dump() << "\n";
  } else {
    std::cout << "depletion fixpoint: " << outcome.sweeps << " sweeps, " << outcome.flips
              << " flips, " << outcome.steps << " triplet-steps, "
              << t.boxes.true_cells() << " surviving true cells\n";
  }
  return 0;
}

int cmd_count(const CommonOpts& opts, std::size_t cap) {
  gridsat::CnfFormula f = load_formula(opts);
  gridsat::BooleanSystem system = gridsat::cnf_to_system(f);
  gridsat::CompatMatrix t = gridsat::build_compat_matrix(system, enum_guard());
  gridsat::deplete(t, {parse_schema(opts.schema)});
  gridsat::GridEnumeration grids = gridsat::enumerate_grids(t.boxes, cap);
  if (opts.format == "structured") {
    nlohmann::json line = {{"grids", grids.grids.size()}, {"truncated", grids.truncated}};
    std::cout << line.dump() << "\n";
  } else if (grids.truncated) {
    std::cout << "at least " << grids.grids.size() << " solution grids (truncated at cap "
              << cap << ")\n";
  } else {
    std::cout << grids.grids.size() << " solution grids\n";
  }
  return 0;
}

int cmd_reduce(const CommonOpts& opts, const std::string& out_path) {
  gridsat::CnfFormula f = load_formula(opts);
  gridsat::ReductionMap map = gridsat::cook_reduce(f);
  std::vector<std::string> comments;
  comments.push_back("3SAT reduction of a " + std::to_string(f.clauses.size()) +
                     "-clause source formula");
  comments.push_back("auxiliary variables: " + std::to_string(map.first_aux) + ".." +
                     std::to_string(map.first_aux + map.aux_count - 1));
  for (std::size_t i = 0; i < map.produced.size(); ++i) {
    std::ostringstream line;
    line << "source clause " << i + 1 << " ->";
    for (std::size_t k : map.produced[i]) line << " " << k + 1;
    comments.push_back(line.str());
  }
  std::string text = gridsat::serialize_dimacs(map.reduced, comments);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
  }
  return 0;
}

int cmd_lex(const CommonOpts& opts) {
  gridsat::CnfFormula f = load_formula(opts);
  gridsat::GridSearchStats stats;
  auto implicant = gridsat::find_implicant(f, &stats);

  // informational: how much of the lexicographical matrix depletion removes
  gridsat::LexMatrix lex = gridsat::build_lex_matrix(f);
  std::size_t before = lex.boxes.true_cells();
  gridsat::deplete(lex.boxes, {parse_schema(opts.schema)});
  std::size_t after = lex.boxes.true_cells();

  if (opts.format == "structured") {
    nlohmann::json line = {{"implicant_found", implicant.has_value()},
                           {"backtracks", stats.backtracks},
                           {"lex_true_cells_before", before},
                           {"lex_true_cells_after", after}};
    if (implicant) {
      std::vector<long> lits;
      for (const gridsat::Literal& l : *implicant)
        lits.push_back(l.negated ? -l.var : l.var);
      line["implicant"] = lits;
    }
    std::cout << line.dump() << "\n";
  } else {
    if (implicant) {
      std::cout << "s SATISFIABLE\nc implicant:";
      for (const gridsat::Literal& l : *implicant)
        std::cout << " " << (l.negated ? -l.var : l.var);
      std::cout << "\n";
    } else {
      std::cout << "s UNSATISFIABLE\n";
    }
    std::cout << "c lex depletion survival: " << after << "/" << before
              << " true cells\n";
  }
  return implicant ? kExitSat : kExitUnsat;
}

int cmd_fuzz(const gridsat::FuzzConfig& config, const CommonOpts& opts,
             const std::string& out_dir) {
  gridsat::FuzzReport report = gridsat::fuzz_compare(config);
  if (!out_dir.empty()) {
    std::ofstream jsonl(out_dir + "/fuzz_report.jsonl");
    jsonl << report.to_jsonl();
    for (const gridsat::ViolationRecord& v : report.violations) {
      std::ofstream repro(out_dir + "/violation_" + std::to_string(v.instance_index) +
                          ".cnf");
      repro << (v.minimized_dimacs.empty() ? v.dimacs : v.minimized_dimacs);
    }
  }
  if (opts.format == "structured")
    std::cout << report.to_jsonl();
  else
    std::cout << report.summary();
  return 0;
}

int cmd_bench(const gridsat::BenchConfig& config, const CommonOpts& opts) {
  std::vector<gridsat::ScalingRecord> records = gridsat::bench_scaling(config);
  if (opts.format == "structured") {
    for (const gridsat::ScalingRecord& r : records) {
      nlohmann::json line = {{"vars", r.vars},     {"clauses", r.clauses},
                             {"width", r.width},   {"seed", r.seed},
                             {"seconds", r.seconds}, {"sweeps", r.sweeps},
                             {"flips", r.flips},   {"steps", r.steps}};
      std::cout << line.dump() << "\n";
    }
    std::cout << nlohmann::json{{"loglog_slope", gridsat::loglog_slope(records)}}.dump()
              << "\n";
  } else {
    for (const gridsat::ScalingRecord& r : records)
      std::cout << "m=" << r.clauses << " vars=" << r.vars << " sweeps=" << r.sweeps
                << " flips=" << r.flips << " steps=" << r.steps << " time=" << r.seconds
                << "s\n";
    std::cout << "log-log slope of triplet-steps vs m: " << gridsat::loglog_slope(records)
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compatibility-matrix depletion SAT tool"};
  app.require_subcommand(1);

  CommonOpts common;
  auto add_common = [&common](CLI::App* cmd, bool takes_input = true) {
    if (takes_input)
      cmd->add_option("input", common.input, "DIMACS CNF file, or '-' for stdin");
    cmd->add_flag("--strict-dimacs", common.strict_dimacs,
                  "treat header mismatches as errors");
    cmd->add_flag("--repair", common.repair,
                  "repair non-normal input (dedupe clauses, merge literals)");
    cmd->add_option("--schema", common.schema, "iteration schema")
        ->check(CLI::IsMember({"roundrobin", "roundrobin-reversed", "worklist"}));
    cmd->add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"human", "structured"}));
  };

  auto* solve = app.add_subcommand("solve", "decide satisfiability, print s/v lines");
  bool no_early_stop = false;
  add_common(solve);
  solve->add_flag("--no-early-stop", no_early_stop,
                  "run depletion to the full fixpoint before deciding");

  auto* dep = app.add_subcommand("deplete", "run depletion to fixpoint, report stats");
  std::string trace_path;
  add_common(dep);
  dep->add_option("--trace", trace_path, "write per-step trace records (JSONL)");

  auto* count = app.add_subcommand("count", "count solution grids");
  std::size_t cap = 1'000'000;
  add_common(count);
  count->add_option("--cap", cap, "enumeration cap");

  auto* reduce = app.add_subcommand("reduce", "emit the 3SAT reduction as DIMACS");
  std::string out_path;
  add_common(reduce);
  reduce->add_option("-o,--output", out_path, "output path (default stdout)");

  auto* lex = app.add_subcommand("lex", "lexicographical implicant search");
  add_common(lex);

  auto* fuzz = app.add_subcommand("fuzz", "cross-validate against the brute-force oracle");
  gridsat::FuzzConfig fuzz_config;
  std::string fuzz_out;
  add_common(fuzz, false);
  fuzz->add_option("--instances", fuzz_config.instances, "number of random instances");
  fuzz->add_option("--vars", fuzz_config.vars, "variables per instance");
  fuzz->add_option("--clauses", fuzz_config.max_clauses, "max clauses per instance");
  fuzz->add_option("--width", fuzz_config.width, "clause width K");
  fuzz->add_option("--seed", fuzz_config.seed, "random seed");
  fuzz->add_option("--out", fuzz_out, "directory for reports and reproducers");

  auto* bench = app.add_subcommand("bench", "depletion scaling measurements");
  gridsat::BenchConfig bench_config;
  add_common(bench, false);
  bench->add_option("--m-list", bench_config.clause_counts, "clause counts to measure");
  bench->add_option("--ratio", bench_config.ratio, "clause/variable ratio");
  bench->add_option("--reps", bench_config.repetitions, "repetitions per size");
  bench->add_option("--seed", bench_config.seed, "random seed");

  CLI11_PARSE(app, argc, argv);

  try {
    fuzz_config.schema = parse_schema(common.schema);
    bench_config.schema = parse_schema(common.schema);
    if (solve->parsed()) return cmd_solve(common, !no_early_stop);
    if (dep->parsed()) return cmd_deplete(common, trace_path);
    if (count->parsed()) return cmd_count(common, cap);
    if (reduce->parsed()) return cmd_reduce(common, out_path);
    if (lex->parsed()) return cmd_lex(common);
    if (fuzz->parsed()) return cmd_fuzz(fuzz_config, common, fuzz_out);
    if (bench->parsed()) return cmd_bench(bench_config, common);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
