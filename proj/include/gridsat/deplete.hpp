#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "gridsat/compat.hpp"

namespace gridsat {

// Fair tours over all index triplets (i, mu, j). All variants reach the
// same fixpoint; the choice is a performance knob.
enum class Schema {
  RoundRobin,
  RoundRobinReversed,
  Worklist,
};

struct Triplet {
  std::size_t i = 0, mu = 0, j = 0;
  bool operator==(const Triplet&) const = default;
};

struct TraceRecord {
  Triplet triplet;
  std::size_t flips = 0;
  std::size_t true_cells = 0;  // cumulative, after the step
};

struct DepleteOptions {
  Schema schema = Schema::Worklist;
  bool early_stop = false;  // return as soon as some box becomes all-false
  bool record_trace = false;
  // Called after each sweep (round-robin tour or worklist epoch).
  std::function<void(const BoxGrid&, std::size_t sweep)> on_sweep;
};

struct DepletionOutcome {
  std::size_t sweeps = 0;
  std::uint64_t flips = 0;
  std::uint64_t steps = 0;  // deplete_step invocations
  std::optional<std::pair<std::size_t, std::size_t>> early_stop;
  std::vector<TraceRecord> trace;
};

// One application of box(i,j) &= box(i,mu) * box(mu,j), mirror kept
// consistent by the triangular storage. Returns cells inverted.
std::size_t deplete_step(BoxGrid& g, Triplet t);

// Iterate to the fixpoint (or until early stop). Depletes in place.
DepletionOutcome deplete(BoxGrid& g, const DepleteOptions& opts = {});

inline DepletionOutcome deplete(CompatMatrix& t, const DepleteOptions& opts = {}) {
  return deplete(t.boxes, opts);
}

// First (i,j) in row-major order whose box is all-false (zero-dimension
// boxes count), if any.
std::optional<std::pair<std::size_t, std::size_t>> detect_unsat_pattern(const BoxGrid& g);

}  // namespace gridsat
