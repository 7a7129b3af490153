#pragma once

#include <optional>

#include "twistab/curve_graph.hpp"
#include "twistab/groups.hpp"

namespace twistab {
namespace oracles {

// Brute-force weighted stabilizer for trivial monodromy: repeatedly contract
// any genus-0 degree-0 vertex with #half-edges + sum of its marking weights
// <= 2, greedily in natural id order. Independent of the contraction code in
// the main library.
CurveGraph hassett_stabilize(CurveGraph g, const WeightVector& a);

// Runs the contraction system over every admissible order (desk scale) and
// returns the common fixpoint, or nullopt when two orders disagree.
std::optional<CurveGraph> hassett_all_orders(const CurveGraph& g,
                                             const WeightVector& a);

// Coarse Deligne-Mumford stability: every genus-0 degree-0 vertex has >= 3
// special points and every genus-1 degree-0 vertex has >= 1.
bool dm_stable(const CurveGraph& g);

// Classical weighted stability on the coarse graph: every degree-0 vertex
// has positive genus or #half-edges + sum of marking weights > 2.
bool classical_weighted_stable(const CurveGraph& g, const WeightVector& a);

// Number of tuples (g_1..g_k, h) with g_i^{r_i} = e, h^m = e, the ordered
// product g_1...g_k h = e and abelian joint image, up to simultaneous
// conjugation. Direct enumeration.
long long torsor_brute_count(const std::vector<long long>& root_orders,
                             long long m, const FiniteGroup& g);

// Independent enumeration of X = N^gp/Z^n as a subgroup of (Z/D)^n generated
// by the generator classes, plus the order of the m-torsion-character part.
struct XmBrute {
  long long x_order = 1;
  long long xm_order = 1;
  std::vector<long long> x_invariants;  // abstract type of X
};
XmBrute xm_brute(int n, const std::vector<QVec>& generators, long long m);

}  // namespace oracles
}  // namespace twistab
