#pragma once

#include "twistab/stabilize.hpp"

namespace twistab {

// Label-preserving graph isomorphism: genus, degree, cluster contents
// (marking sets are global labels and must match exactly), root orders and
// node orders. Brute-force with signature pruning; intended for desk-scale
// graphs.
bool graphs_isomorphic(const CurveGraph& a, const CurveGraph& b);

// Graph isomorphism that also transports the monodromy: matched special
// points must carry equal loops and image subgroups. Weights are not
// compared.
bool records_equivalent(const CurveGraph& ga, const MonodromyAssignment& ma,
                        const CurveGraph& gb, const MonodromyAssignment& mb);

inline bool records_equivalent(const StableMapRecord& a,
                               const StableMapRecord& b) {
  return records_equivalent(a.graph, a.mono, b.graph, b.mono);
}

}  // namespace twistab
