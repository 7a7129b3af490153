#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twistab/groups.hpp"
#include "twistab/rational.hpp"

namespace twistab {

using VertexId = std::string;
using EdgeId = std::string;

// (length, lexicographic) order, so "v2" < "v10". Used wherever a
// deterministic vertex/edge order is needed.
bool natural_less(const std::string& a, const std::string& b);

// Weights a_i with 0 < a_i <= 1, one per marking.
struct WeightVector {
  QVec entries;

  WeightVector() = default;
  explicit WeightVector(QVec w);
  int size() const { return static_cast<int>(entries.size()); }
  const Rat& operator[](int i) const { return entries[i]; }  // 0-based
};

// A maximal set of coincident markings together with the stabilizer data the
// ambient curve sees at that point. Untwisted clusters carry root_order 1
// and the trivial local group.
struct MarkingCluster {
  std::vector<int> markings;  // sorted, 1-based, nonempty
  long long root_order = 1;
  FiniteAbelianGroup local_group;

  bool operator==(const MarkingCluster&) const = default;
};

struct Vertex {
  VertexId id;
  int genus = 0;
  long long degree = 0;  // degree of the coarse map on this component
  std::vector<MarkingCluster> clusters;
};

// ends[k] = (vertex, slot). Slots distinguish the two ends of a self-loop;
// for an ordinary edge they are arbitrary small integers.
struct Edge {
  EdgeId id;
  std::array<std::pair<VertexId, int>, 2> ends;
  long long node_order = 1;
};

struct CurveGraph {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  int n_markings = 0;
  int declared_genus = 0;

  const Vertex* find_vertex(const VertexId& v) const;
  Vertex* find_vertex(const VertexId& v);
  int vertex_index(const VertexId& v) const;  // -1 when absent

  // First Betti number; the graph is expected to be connected.
  int betti() const;
  bool connected() const;
  long long total_degree() const;
};

// A special point of a vertex: one end of an incident edge, or a cluster.
struct SpecialPointRef {
  enum class Kind { HalfEdge, Cluster } kind = Kind::HalfEdge;
  EdgeId edge;       // HalfEdge
  int end = 0;       // HalfEdge: which end of the edge (0/1)
  int cluster = 0;   // Cluster: index into the vertex's cluster list

  bool operator==(const SpecialPointRef&) const = default;
  std::string to_string() const;
};

// Incident half-edges (edge order, then end order) followed by clusters.
std::vector<SpecialPointRef> special_points(const CurveGraph& g,
                                            const VertexId& v);

// Monodromy datum at one special point: the loop around it and the image of
// the local stabilizer in G (for half-edges, the cyclic group of the loop).
struct PointDatum {
  SpecialPointRef point;
  int loop = 0;
  std::vector<int> image_subgroup;  // sorted element indices

  bool operator==(const PointDatum&) const = default;
};

struct MonodromyAssignment {
  GroupPtr group;
  std::map<VertexId, std::vector<PointDatum>> at;  // ordered list per vertex
};

struct Violation {
  std::string where;
  std::string message;
};

// Aggregates every structural invariant: graph shape, genus formula, marking
// partition, weight bounds, and (when given) the monodromy product relations,
// edge pairing and representability. Empty result means valid.
std::vector<Violation> validate(const CurveGraph& g,
                                const WeightVector* weights = nullptr,
                                const MonodromyAssignment* mono = nullptr);

// Removes a rational tail, pushing its markings onto the neighbor as a fresh
// cluster carrying the descended abelian subgroup. Throws NotATail /
// NonAbelianDescent.
std::pair<CurveGraph, MonodromyAssignment> contract_tail(
    const CurveGraph& g, const MonodromyAssignment& mono, const VertexId& v);

// Removes an unmarked rational bridge, merging its two edges. Throws
// NotABridge.
std::pair<CurveGraph, MonodromyAssignment> contract_bridge(
    const CurveGraph& g, const MonodromyAssignment& mono, const VertexId& v);

}  // namespace twistab
