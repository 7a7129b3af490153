#include "twistab/stability.hpp"

namespace twistab {

bool is_prestable(const CurveGraph& g, const WeightVector& a,
                  std::vector<Violation>* reasons) {
  if (a.size() != g.n_markings)
    fail(Errc::LengthMismatch, "weights length != number of markings");
  bool ok = true;
  for (const auto& v : g.vertices)
    for (const auto& c : v.clusters) {
      Rat sum = 0;
      for (int mk : c.markings) sum += a[mk - 1];
      if (sum > 1) {
        ok = false;
        if (reasons)
          reasons->push_back({"vertex " + v.id,
                              "cluster weight sum " + rat_to_string(sum) +
                                  " exceeds 1"});
      }
    }
  return ok;
}

bool has_abelian_contraction(const CurveGraph& g,
                             const MonodromyAssignment& mono,
                             const VertexId& v) {
  const Vertex* vx = g.find_vertex(v);
  if (!vx || vx->degree != 0) return false;
  const FiniteGroup& grp = *mono.group;
  std::vector<int> gens;
  auto it = mono.at.find(v);
  if (it != mono.at.end())
    for (const auto& d : it->second)
      gens.insert(gens.end(), d.image_subgroup.begin(),
                  d.image_subgroup.end());
  return is_abelian(grp, generated_subgroup(grp, gens));
}

BranchKind classify_branch(const CurveGraph& g, const VertexId& v) {
  const Vertex* vx = g.find_vertex(v);
  if (!vx || vx->genus != 0 || vx->degree != 0) return BranchKind::NotABranch;
  int half_edges = 0;
  for (const auto& e : g.edges)
    for (int k = 0; k < 2; ++k)
      if (e.ends[k].first == v) ++half_edges;
  if (half_edges == 1) return BranchKind::ExtremalBranch;
  if (half_edges == 2) return BranchKind::InteriorBranch;
  return BranchKind::NotABranch;
}

StabilityReport is_stable(const CurveGraph& g, const WeightVector& a,
                          const MonodromyAssignment& mono) {
  StabilityReport rep;
  rep.prestable = is_prestable(g, a, &rep.offending);
  if (!rep.prestable) return rep;

  rep.representable = validate(g, &a, &mono).empty();
  if (!rep.representable) {
    rep.offending.push_back({"monodromy", "input fails validation"});
  }

  rep.finite_autos = true;
  rep.weighted_ok = true;
  for (const auto& v : g.vertices) {
    int pts = static_cast<int>(special_points(g, v.id).size());
    if (v.degree == 0 && v.genus == 0 && pts < 3) {
      rep.finite_autos = false;
      rep.offending.push_back(
          {"vertex " + v.id, "genus-0 component with " + std::to_string(pts) +
                                 " special points (needs 3)"});
    }
    if (v.degree == 0 && v.genus == 1 && pts < 1) {
      rep.finite_autos = false;
      rep.offending.push_back(
          {"vertex " + v.id, "genus-1 component with no special points"});
    }

    if (v.genus == 0 && has_abelian_contraction(g, mono, v.id)) {
      int half_edges = 0;
      for (const auto& e : g.edges)
        for (int k = 0; k < 2; ++k)
          if (e.ends[k].first == v.id) ++half_edges;
      Rat wsum = 0;
      for (const auto& c : v.clusters)
        for (int mk : c.markings) wsum += a[mk - 1];
      if (Rat(half_edges) + wsum <= 2) {
        rep.weighted_ok = false;
        rep.offending.push_back(
            {"vertex " + v.id,
             "abelian contraction with " + std::to_string(half_edges) + " + " +
                 rat_to_string(wsum) + " <= 2"});
      }
    }
  }
  return rep;
}

}  // namespace twistab
