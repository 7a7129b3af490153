#pragma once

#include "twistab/curve_graph.hpp"

namespace twistab {

struct StabilityReport {
  bool prestable = false;
  bool representable = false;
  bool finite_autos = false;
  bool weighted_ok = false;
  std::vector<Violation> offending;

  bool stable() const {
    return prestable && representable && finite_autos && weighted_ok;
  }
};

// Every cluster's weight sum is <= 1. Throws LengthMismatch.
bool is_prestable(const CurveGraph& g, const WeightVector& a,
                  std::vector<Violation>* reasons = nullptr);

// The component maps to a point (degree 0) and the subgroup of G generated
// by all special-point image subgroups of v is abelian.
bool has_abelian_contraction(const CurveGraph& g,
                             const MonodromyAssignment& mono,
                             const VertexId& v);

StabilityReport is_stable(const CurveGraph& g, const WeightVector& a,
                          const MonodromyAssignment& mono);

enum class BranchKind { InteriorBranch, ExtremalBranch, NotABranch };

// Genus-0, degree-0 vertices with exactly one (extremal) or two (interior)
// incident half-edges; a self-loop contributes both of its half-edges.
BranchKind classify_branch(const CurveGraph& g, const VertexId& v);

}  // namespace twistab
