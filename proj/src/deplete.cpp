#include "gridsat/deplete.hpp"

#include <deque>

namespace gridsat {

std::size_t deplete_step(BoxGrid& g, Triplet t) {
  BoolMatrix p = product(g.box(t.i, t.mu), g.box(t.mu, t.j));
  if (t.i <= t.j) return g.stored(t.i, t.j).conjoin_in_place(p);
  return g.stored(t.j, t.i).conjoin_in_place(transpose(p));
}

namespace {

struct Engine {
  BoxGrid& g;
  const DepleteOptions& opts;
  DepletionOutcome out;
  std::size_t true_cells;

  explicit Engine(BoxGrid& grid, const DepleteOptions& options)
      : g(grid), opts(options), true_cells(grid.true_cells()) {}

  // Returns true when the run should stop early.
  bool step(Triplet t) {
    std::size_t flips = deplete_step(g, t);
    ++out.steps;
    out.flips += flips;
    if (flips > 0) {
      true_cells -= 2 * flips;  // the mirror cell flips with each canonical cell
      if (t.i == t.j) true_cells += flips;
      if (opts.record_trace) out.trace.push_back({t, flips, true_cells});
      std::size_t a = std::min(t.i, t.j), b = std::max(t.i, t.j);
      if (!out.early_stop && g.stored(a, b).all_false()) {
        out.early_stop = {a, b};
        if (opts.early_stop) return true;
      }
      return false;
    }
    if (opts.record_trace) out.trace.push_back({t, 0, true_cells});
    return false;
  }
};

DepletionOutcome run_round_robin(BoxGrid& g, const DepleteOptions& opts, bool reversed) {
  Engine engine(g, opts);
  std::size_t m = g.size();
  std::vector<Triplet> tour;
  tour.reserve(m * m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t mu = 0; mu < m; ++mu)
      for (std::size_t j = 0; j < m; ++j) tour.push_back({i, mu, j});
  if (reversed) std::reverse(tour.begin(), tour.end());

  for (;;) {
    std::uint64_t before = engine.out.flips;
    ++engine.out.sweeps;
    for (Triplet t : tour)
      if (engine.step(t)) return std::move(engine.out);
    if (opts.on_sweep) opts.on_sweep(g, engine.out.sweeps);
    if (engine.out.flips == before) break;
  }
  return std::move(engine.out);
}

DepletionOutcome run_worklist(BoxGrid& g, const DepleteOptions& opts) {
  Engine engine(g, opts);
  std::size_t m = g.size();
  std::vector<char> queued(m * m * m, 0);
  std::deque<Triplet> work;
  auto key = [m](Triplet t) { return (t.i * m + t.mu) * m + t.j; };
  auto push = [&](Triplet t) {
    if (!queued[key(t)]) {
      queued[key(t)] = 1;
      work.push_back(t);
    }
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t mu = 0; mu < m; ++mu)
      for (std::size_t j = 0; j < m; ++j) push({i, mu, j});

  while (!work.empty()) {
    std::size_t epoch_size = work.size();
    ++engine.out.sweeps;
    for (std::size_t n = 0; n < epoch_size; ++n) {
      Triplet t = work.front();
      work.pop_front();
      queued[key(t)] = 0;
      std::uint64_t before = engine.out.flips;
      if (engine.step(t)) return std::move(engine.out);
      if (engine.out.flips != before) {
        // box (i,j) shrank: revisit every triplet using it (or its mirror)
        // as a factor
        for (std::size_t x = 0; x < m; ++x) {
          push({t.i, t.j, x});
          push({x, t.i, t.j});
          push({t.j, t.i, x});
          push({x, t.j, t.i});
        }
      }
    }
    if (opts.on_sweep) opts.on_sweep(g, engine.out.sweeps);
  }
  return std::move(engine.out);
}

}  // namespace

DepletionOutcome deplete(BoxGrid& g, const DepleteOptions& opts) {
  if (opts.early_stop) {
    if (auto pair = detect_unsat_pattern(g)) {
      DepletionOutcome out;
      out.early_stop = pair;
      return out;
    }
  }
  switch (opts.schema) {
    case Schema::RoundRobin:
      return run_round_robin(g, opts, false);
    case Schema::RoundRobinReversed:
      return run_round_robin(g, opts, true);
    case Schema::Worklist:
      return run_worklist(g, opts);
  }
  return {};
}

std::optional<std::pair<std::size_t, std::size_t>> detect_unsat_pattern(const BoxGrid& g) {
  std::size_t m = g.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::size_t a = std::min(i, j), b = std::max(i, j);
      if (g.dim(i) == 0 || g.dim(j) == 0 || g.stored(a, b).all_false()) return {{i, j}};
    }
  return std::nullopt;
}

}  // namespace gridsat
