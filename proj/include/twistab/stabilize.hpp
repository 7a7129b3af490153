#pragma once

#include <cstdint>
#include <optional>

#include "twistab/stability.hpp"

namespace twistab {

struct TraceStep {
  enum class Kind { Tail, Bridge } kind;
  VertexId vertex;

  bool operator==(const TraceStep&) const = default;
};

struct StableMapRecord {
  CurveGraph graph;
  WeightVector weights;
  MonodromyAssignment mono;
  std::vector<TraceStep> trace;
};

struct UnstableComponents {
  std::vector<VertexId> tails;    // sorted by natural id
  std::vector<VertexId> bridges;  // sorted by natural id
};

// Tails: extremal branches with an abelian contraction whose marking weights
// sum to <= 1. Bridges: interior branches with no markings.
UnstableComponents unstable_components(const CurveGraph& g,
                                       const WeightVector& a,
                                       const MonodromyAssignment& mono);

struct StabilizeOptions {
  // When set, the per-round processing order is shuffled (test hook for the
  // order-independence contract); default is ascending natural vertex id.
  std::optional<uint64_t> shuffle_seed;
};

// Rounds of tail contraction to a fixpoint, then bridge contraction to a
// fixpoint. Output satisfies is_stable; throws NothingLeft when the input
// admits no stable model, InvalidInput on malformed input.
StableMapRecord stabilize(const CurveGraph& g, const WeightVector& a,
                          const MonodromyAssignment& mono,
                          const StabilizeOptions& opts = {});

// a-stabilization of a record stable for b, for a <= b coordinatewise.
// Throws NotDominated.
StableMapRecord reduce_weights(const StableMapRecord& rec,
                               const WeightVector& a);

}  // namespace twistab
