#include "twistab/stabilize.hpp"

#include <algorithm>
#include <random>

namespace twistab {

namespace {

bool is_unstable_tail(const CurveGraph& g, const WeightVector& a,
                      const MonodromyAssignment& mono, const VertexId& v) {
  if (classify_branch(g, v) != BranchKind::ExtremalBranch) return false;
  if (!has_abelian_contraction(g, mono, v)) return false;
  const Vertex* vx = g.find_vertex(v);
  Rat wsum = 0;
  for (const auto& c : vx->clusters)
    for (int mk : c.markings) wsum += a[mk - 1];
  return wsum <= 1;
}

bool is_unstable_bridge(const CurveGraph& g, const MonodromyAssignment& mono,
                        const VertexId& v) {
  (void)mono;  // abelian contraction is automatic for unmarked bridges
  if (classify_branch(g, v) != BranchKind::InteriorBranch) return false;
  return g.find_vertex(v)->clusters.empty();
}

// A two-half-edge vertex whose edges are a single self-loop is the whole
// curve; merging is undefined there.
bool bridge_contractible(const CurveGraph& g, const VertexId& v) {
  std::vector<EdgeId> ids;
  for (const auto& e : g.edges)
    for (int k = 0; k < 2; ++k)
      if (e.ends[k].first == v) ids.push_back(e.id);
  return ids.size() == 2 && ids[0] != ids[1];
}

}  // namespace

UnstableComponents unstable_components(const CurveGraph& g,
                                       const WeightVector& a,
                                       const MonodromyAssignment& mono) {
  UnstableComponents out;
  for (const auto& v : g.vertices) {
    if (is_unstable_tail(g, a, mono, v.id))
      out.tails.push_back(v.id);
    else if (is_unstable_bridge(g, mono, v.id))
      out.bridges.push_back(v.id);
  }
  std::sort(out.tails.begin(), out.tails.end(), natural_less);
  std::sort(out.bridges.begin(), out.bridges.end(), natural_less);
  return out;
}

StableMapRecord stabilize(const CurveGraph& g, const WeightVector& a,
                          const MonodromyAssignment& mono,
                          const StabilizeOptions& opts) {
  auto violations = validate(g, &a, &mono);
  if (!violations.empty())
    fail(Errc::InvalidInput,
         violations[0].message + " (" + violations[0].where + ")");
  if (!is_prestable(g, a))
    fail(Errc::InvalidInput, "input is not prestable");

  Rat wsum = 0;
  for (const auto& w : a.entries) wsum += w;
  bool viable = g.declared_genus >= 1 || g.total_degree() > 0 ||
                Rat(2 * g.declared_genus - 2) + wsum > 0;
  if (!viable)
    fail(Errc::NothingLeft, "the whole curve would be contracted");

  std::mt19937_64 rng(opts.shuffle_seed.value_or(0));
  auto arrange = [&](std::vector<VertexId>& ids) {
    if (opts.shuffle_seed) std::shuffle(ids.begin(), ids.end(), rng);
  };

  StableMapRecord rec{g, a, mono, {}};

  size_t round_cap = g.vertices.size() + 1;
  for (size_t round = 0; round < round_cap; ++round) {
    auto tails = unstable_components(rec.graph, rec.weights, rec.mono).tails;
    if (tails.empty()) break;
    arrange(tails);
    for (const auto& v : tails) {
      // Earlier contractions in this round may have absorbed v's neighbor;
      // re-check before acting.
      if (!is_unstable_tail(rec.graph, rec.weights, rec.mono, v)) continue;
      auto [ng, nm] = contract_tail(rec.graph, rec.mono, v);
      rec.graph = std::move(ng);
      rec.mono = std::move(nm);
      rec.trace.push_back({TraceStep::Kind::Tail, v});
    }
  }

  for (size_t round = 0; round < round_cap; ++round) {
    auto all = unstable_components(rec.graph, rec.weights, rec.mono).bridges;
    std::vector<VertexId> bridges;
    for (const auto& v : all)
      if (bridge_contractible(rec.graph, v)) bridges.push_back(v);
    if (bridges.empty()) break;
    arrange(bridges);
    for (const auto& v : bridges) {
      if (!is_unstable_bridge(rec.graph, rec.mono, v) ||
          !bridge_contractible(rec.graph, v))
        continue;
      auto [ng, nm] = contract_bridge(rec.graph, rec.mono, v);
      rec.graph = std::move(ng);
      rec.mono = std::move(nm);
      rec.trace.push_back({TraceStep::Kind::Bridge, v});
    }
  }

  if (!is_stable(rec.graph, rec.weights, rec.mono).stable())
    fail(Errc::NothingLeft, "input admits no stable model");
  return rec;
}

StableMapRecord reduce_weights(const StableMapRecord& rec,
                               const WeightVector& a) {
  if (a.size() != rec.weights.size())
    fail(Errc::LengthMismatch, "weight vectors differ in length");
  for (int i = 0; i < a.size(); ++i)
    if (a[i] > rec.weights[i])
      fail(Errc::NotDominated,
           "weight " + std::to_string(i + 1) + " increases");
  if (!is_stable(rec.graph, rec.weights, rec.mono).stable())
    fail(Errc::InvalidInput, "record is not stable for its weights");
  return stabilize(rec.graph, a, rec.mono);
}

}  // namespace twistab
