#include "twistab/curve_graph.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace twistab {

bool natural_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

WeightVector::WeightVector(QVec w) : entries(std::move(w)) {
  for (const auto& a : entries)
    if (a <= 0 || a > 1)
      fail(Errc::InvalidInput, "weights must lie in (0, 1]");
}

const Vertex* CurveGraph::find_vertex(const VertexId& v) const {
  for (const auto& vx : vertices)
    if (vx.id == v) return &vx;
  return nullptr;
}

Vertex* CurveGraph::find_vertex(const VertexId& v) {
  for (auto& vx : vertices)
    if (vx.id == v) return &vx;
  return nullptr;
}

int CurveGraph::vertex_index(const VertexId& v) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].id == v) return static_cast<int>(i);
  return -1;
}

int CurveGraph::betti() const {
  return static_cast<int>(edges.size()) - static_cast<int>(vertices.size()) + 1;
}

bool CurveGraph::connected() const {
  if (vertices.empty()) return false;
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const auto& e : edges) {
    adj[e.ends[0].first].push_back(e.ends[1].first);
    adj[e.ends[1].first].push_back(e.ends[0].first);
  }
  std::set<VertexId> seen{vertices[0].id};
  std::vector<VertexId> frontier{vertices[0].id};
  while (!frontier.empty()) {
    VertexId v = frontier.back();
    frontier.pop_back();
    for (const auto& w : adj[v])
      if (seen.insert(w).second) frontier.push_back(w);
  }
  return seen.size() == vertices.size();
}

long long CurveGraph::total_degree() const {
  long long d = 0;
  for (const auto& v : vertices) d += v.degree;
  return d;
}

std::string SpecialPointRef::to_string() const {
  if (kind == Kind::HalfEdge)
    return "edge:" + edge + ":" + std::to_string(end);
  return "cluster:" + std::to_string(cluster);
}

std::vector<SpecialPointRef> special_points(const CurveGraph& g,
                                            const VertexId& v) {
  std::vector<SpecialPointRef> out;
  for (const auto& e : g.edges)
    for (int k = 0; k < 2; ++k)
      if (e.ends[k].first == v)
        out.push_back({SpecialPointRef::Kind::HalfEdge, e.id, k, 0});
  const Vertex* vx = g.find_vertex(v);
  if (vx)
    for (int c = 0; c < static_cast<int>(vx->clusters.size()); ++c)
      out.push_back({SpecialPointRef::Kind::Cluster, "", 0, c});
  return out;
}

namespace {

std::vector<int> subgroup_union_closure(const FiniteGroup& g,
                                        const std::vector<PointDatum>& data,
                                        bool skip_half_edges) {
  std::vector<int> gens;
  for (const auto& d : data) {
    if (skip_half_edges && d.point.kind == SpecialPointRef::Kind::HalfEdge)
      continue;
    for (int x : d.image_subgroup) gens.push_back(x);
  }
  return generated_subgroup(g, gens);
}

const PointDatum* find_datum(const MonodromyAssignment& mono,
                             const VertexId& v, const SpecialPointRef& ref) {
  auto it = mono.at.find(v);
  if (it == mono.at.end()) return nullptr;
  for (const auto& d : it->second)
    if (d.point == ref) return &d;
  return nullptr;
}

}  // namespace

std::vector<Violation> validate(const CurveGraph& g,
                                const WeightVector* weights,
                                const MonodromyAssignment* mono) {
  std::vector<Violation> out;
  auto bad = [&](const std::string& where, const std::string& msg) {
    out.push_back({where, msg});
  };

  if (g.vertices.empty()) {
    bad("graph", "curve must be connected and nonempty");
    return out;
  }

  std::set<VertexId> vids;
  for (const auto& v : g.vertices) {
    if (!vids.insert(v.id).second) bad("vertex " + v.id, "duplicate vertex id");
    if (v.genus < 0) bad("vertex " + v.id, "genus must be >= 0");
    if (v.degree < 0) bad("vertex " + v.id, "degree must be >= 0");
  }

  std::set<EdgeId> eids;
  for (const auto& e : g.edges) {
    if (!eids.insert(e.id).second) bad("edge " + e.id, "duplicate edge id");
    if (e.node_order < 1) bad("edge " + e.id, "node order must be >= 1");
    for (int k = 0; k < 2; ++k)
      if (!vids.count(e.ends[k].first))
        bad("edge " + e.id, "endpoint references missing vertex");
    if (e.ends[0].first == e.ends[1].first &&
        e.ends[0].second == e.ends[1].second)
      bad("edge " + e.id, "self-loop ends must use distinct slots");
  }
  if (!out.empty()) return out;  // structure is unusable past this point

  if (!g.connected()) bad("graph", "curve must be connected and nonempty");

  int genus_sum = 0;
  for (const auto& v : g.vertices) genus_sum += v.genus;
  int expect = genus_sum + g.betti();
  if (g.declared_genus != expect)
    bad("graph", "genus formula: " + std::to_string(g.declared_genus) +
                     " != " + std::to_string(genus_sum) + "+" +
                     std::to_string(g.betti()));

  std::map<int, int> marking_count;
  for (const auto& v : g.vertices)
    for (const auto& c : v.clusters) {
      if (c.markings.empty())
        bad("vertex " + v.id, "cluster has no markings");
      if (c.root_order < 1)
        bad("vertex " + v.id, "cluster root order must be >= 1");
      for (int mk : c.markings) {
        if (mk < 1 || mk > g.n_markings)
          bad("vertex " + v.id, "marking " + std::to_string(mk) +
                                    " out of range [1, " +
                                    std::to_string(g.n_markings) + "]");
        else
          ++marking_count[mk];
      }
    }
  for (int mk = 1; mk <= g.n_markings; ++mk) {
    int c = marking_count.count(mk) ? marking_count[mk] : 0;
    if (c != 1)
      bad("graph", "marking " + std::to_string(mk) + " appears " +
                       std::to_string(c) + " times (expected once)");
  }

  if (weights) {
    if (weights->size() != g.n_markings)
      bad("weights", "length mismatch: " + std::to_string(weights->size()) +
                         " weights for " + std::to_string(g.n_markings) +
                         " markings");
    else
      for (const auto& a : weights->entries)
        if (a <= 0 || a > 1) bad("weights", "weights must lie in (0, 1]");
  }

  if (!mono) return out;

  if (!mono->group) {
    bad("monodromy", "missing group");
    return out;
  }
  const FiniteGroup& grp = *mono->group;

  for (const auto& [vid, data] : mono->at)
    if (!vids.count(vid))
      bad("monodromy", "assignment references missing vertex " + vid);

  for (const auto& v : g.vertices) {
    auto pts = special_points(g, v.id);
    auto it = mono->at.find(v.id);
    std::vector<PointDatum> empty;
    const auto& data = it == mono->at.end() ? empty : it->second;

    std::vector<SpecialPointRef> listed;
    for (const auto& d : data) listed.push_back(d.point);
    bool cover = listed.size() == pts.size();
    if (cover) {
      for (const auto& p : pts)
        if (std::count(listed.begin(), listed.end(), p) != 1) cover = false;
    }
    if (!cover) {
      bad("vertex " + v.id,
          "monodromy must list each special point exactly once");
      continue;
    }

    for (const auto& d : data) {
      if (d.loop < 0 || d.loop >= grp.order()) {
        bad("vertex " + v.id, "loop index out of range");
        continue;
      }
      if (d.point.kind == SpecialPointRef::Kind::Cluster) {
        const auto& cl = v.clusters[d.point.cluster];
        auto closure = generated_subgroup(grp, d.image_subgroup);
        if (closure != d.image_subgroup)
          bad("vertex " + v.id, "cluster image subgroup is not closed");
        if (!is_abelian(grp, d.image_subgroup))
          bad("vertex " + v.id, "cluster image subgroup is not abelian");
        if (!std::binary_search(d.image_subgroup.begin(),
                                d.image_subgroup.end(), d.loop))
          bad("vertex " + v.id, "cluster loop is not in its image subgroup");
        if (static_cast<long long>(d.image_subgroup.size()) !=
            cl.local_group.order())
          bad("vertex " + v.id,
              "representability: image subgroup size " +
                  std::to_string(d.image_subgroup.size()) +
                  " != local group order " +
                  std::to_string(cl.local_group.order()));
        if (grp.element_order(d.loop) != cl.root_order)
          bad("vertex " + v.id,
              "cluster root_order != order of its loop");
      } else {
        auto cyc = generated_subgroup(grp, std::vector<int>{d.loop});
        if (cyc != d.image_subgroup)
          bad("vertex " + v.id,
              "half-edge image subgroup must be the cyclic group of its loop");
      }
    }

    // Product relation, for components mapping to a point.
    if (v.degree == 0) {
      int prod = grp.identity();
      for (const auto& d : data) prod = grp.mul(prod, d.loop);
      if (v.genus == 0) {
        if (prod != grp.identity())
          bad("vertex " + v.id, "product-one fails");
      } else {
        std::vector<int> comms;
        for (int a = 0; a < grp.order(); ++a)
          for (int b = 0; b < grp.order(); ++b)
            comms.push_back(grp.mul(grp.mul(a, b),
                                    grp.mul(grp.inverse(a), grp.inverse(b))));
        auto derived = generated_subgroup(grp, comms);
        if (!std::binary_search(derived.begin(), derived.end(), prod))
          bad("vertex " + v.id,
              "loop product must lie in the commutator subgroup");
      }
    }
  }

  // Edge pairing and representability.
  for (const auto& e : g.edges) {
    const PointDatum* d0 = find_datum(
        *mono, e.ends[0].first, {SpecialPointRef::Kind::HalfEdge, e.id, 0, 0});
    const PointDatum* d1 = find_datum(
        *mono, e.ends[1].first, {SpecialPointRef::Kind::HalfEdge, e.id, 1, 0});
    if (!d0 || !d1) continue;  // coverage violation already reported
    if (grp.inverse(d0->loop) != d1->loop)
      bad("edge " + e.id, "half-edge loops must be mutual inverses");
    if (grp.element_order(d0->loop) != e.node_order)
      bad("edge " + e.id,
          "representability: loop order " +
              std::to_string(grp.element_order(d0->loop)) +
              " != node order " + std::to_string(e.node_order));
  }

  return out;
}

namespace {

struct IncidentHalfEdge {
  int edge_index;
  int end;
};

std::vector<IncidentHalfEdge> incident_half_edges(const CurveGraph& g,
                                                  const VertexId& v) {
  std::vector<IncidentHalfEdge> out;
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i)
    for (int k = 0; k < 2; ++k)
      if (g.edges[i].ends[k].first == v) out.push_back({i, k});
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    const EdgeId& ea = g.edges[a.edge_index].id;
    const EdgeId& eb = g.edges[b.edge_index].id;
    if (ea != eb) return natural_less(ea, eb);
    return a.end < b.end;
  });
  return out;
}

}  // namespace

std::pair<CurveGraph, MonodromyAssignment> contract_tail(
    const CurveGraph& g, const MonodromyAssignment& mono, const VertexId& v) {
  const Vertex* vx = g.find_vertex(v);
  if (!vx) fail(Errc::InvalidInput, "no such vertex: " + v);
  if (vx->genus != 0 || vx->degree != 0)
    fail(Errc::NotATail, v + " has positive genus or degree");
  auto inc = incident_half_edges(g, v);
  if (inc.size() != 1)
    fail(Errc::NotATail, v + " must have exactly one node");

  const Edge& e = g.edges[inc[0].edge_index];
  int v_end = inc[0].end;
  int w_end = 1 - v_end;
  VertexId w = e.ends[w_end].first;
  assert(w != v);

  const FiniteGroup& grp = *mono.group;
  auto vit = mono.at.find(v);
  if (vit == mono.at.end())
    fail(Errc::InvalidInput, "no monodromy for vertex " + v);

  std::vector<int> hull =
      subgroup_union_closure(grp, vit->second, /*skip_half_edges=*/true);
  if (!is_abelian(grp, hull))
    fail(Errc::NonAbelianDescent,
         "descended subgroup at " + v + " is not abelian");

  const PointDatum* wd = find_datum(
      mono, w, {SpecialPointRef::Kind::HalfEdge, e.id, w_end, 0});
  if (!wd) fail(Errc::InvalidInput, "missing half-edge datum at " + w);
  int loop = wd->loop;
  if (!std::binary_search(hull.begin(), hull.end(), loop))
    fail(Errc::InvalidInput,
         "node loop does not descend (input violates product relation)");

  std::vector<int> markings;
  for (const auto& c : vx->clusters)
    markings.insert(markings.end(), c.markings.begin(), c.markings.end());
  std::sort(markings.begin(), markings.end());

  CurveGraph out;
  out.n_markings = g.n_markings;
  out.declared_genus = g.declared_genus;
  for (const auto& vert : g.vertices)
    if (vert.id != v) out.vertices.push_back(vert);
  for (const auto& ed : g.edges)
    if (ed.id != e.id) out.edges.push_back(ed);

  MonodromyAssignment mout;
  mout.group = mono.group;
  for (const auto& [vid, data] : mono.at)
    if (vid != v) mout.at[vid] = data;

  int new_cluster = -1;
  if (!markings.empty()) {
    Vertex* wx = out.find_vertex(w);
    new_cluster = static_cast<int>(wx->clusters.size());
    MarkingCluster cl;
    cl.markings = std::move(markings);
    cl.root_order = grp.element_order(loop);
    cl.local_group = subgroup_abelian_type(grp, hull);
    wx->clusters.push_back(std::move(cl));
  }

  auto& wlist = mout.at[w];
  SpecialPointRef node_ref{SpecialPointRef::Kind::HalfEdge, e.id, w_end, 0};
  for (size_t i = 0; i < wlist.size(); ++i) {
    if (!(wlist[i].point == node_ref)) continue;
    if (new_cluster >= 0) {
      wlist[i].point = {SpecialPointRef::Kind::Cluster, "", 0, new_cluster};
      wlist[i].image_subgroup = hull;
      // loop stays as w carried it at the removed node
    } else {
      wlist.erase(wlist.begin() + i);
    }
    break;
  }
  return {std::move(out), std::move(mout)};
}

std::pair<CurveGraph, MonodromyAssignment> contract_bridge(
    const CurveGraph& g, const MonodromyAssignment& mono, const VertexId& v) {
  const Vertex* vx = g.find_vertex(v);
  if (!vx) fail(Errc::InvalidInput, "no such vertex: " + v);
  if (vx->genus != 0 || vx->degree != 0)
    fail(Errc::NotABridge, v + " has positive genus or degree");
  if (!vx->clusters.empty())
    fail(Errc::NotABridge, v + " carries markings");
  auto inc = incident_half_edges(g, v);
  if (inc.size() != 2)
    fail(Errc::NotABridge, v + " must have exactly two nodes");
  if (inc[0].edge_index == inc[1].edge_index)
    fail(Errc::NotABridge, v + " is a self-node component (nothing to merge)");

  const FiniteGroup& grp = *mono.group;
  const Edge& e0 = g.edges[inc[0].edge_index];
  const Edge& e1 = g.edges[inc[1].edge_index];
  const PointDatum* dv0 = find_datum(
      mono, v, {SpecialPointRef::Kind::HalfEdge, e0.id, inc[0].end, 0});
  const PointDatum* dv1 = find_datum(
      mono, v, {SpecialPointRef::Kind::HalfEdge, e1.id, inc[1].end, 0});
  if (!dv0 || !dv1) fail(Errc::InvalidInput, "missing half-edge datum at " + v);
  if (grp.inverse(dv0->loop) != dv1->loop)
    fail(Errc::NotABridge, "bridge loops are not mutual inverses");

  int w0_end = 1 - inc[0].end;
  int w1_end = 1 - inc[1].end;
  VertexId w0 = e0.ends[w0_end].first;
  VertexId w1 = e1.ends[w1_end].first;
  int slot0 = e0.ends[w0_end].second;
  int slot1 = e1.ends[w1_end].second;
  if (w0 == w1 && slot0 == slot1) {
    // pick the next free slot at that vertex
    int mx = slot0;
    for (const auto& ed : g.edges)
      for (int k = 0; k < 2; ++k)
        if (ed.ends[k].first == w1) mx = std::max(mx, ed.ends[k].second);
    slot1 = mx + 1;
  }

  Edge merged;
  merged.id = e0.id;
  merged.ends[0] = {w0, slot0};
  merged.ends[1] = {w1, slot1};
  merged.node_order = grp.element_order(dv0->loop);

  CurveGraph out;
  out.n_markings = g.n_markings;
  out.declared_genus = g.declared_genus;
  for (const auto& vert : g.vertices)
    if (vert.id != v) out.vertices.push_back(vert);
  for (const auto& ed : g.edges) {
    if (ed.id == e1.id) continue;
    if (ed.id == e0.id)
      out.edges.push_back(merged);
    else
      out.edges.push_back(ed);
  }

  MonodromyAssignment mout;
  mout.group = mono.group;
  for (const auto& [vid, data] : mono.at)
    if (vid != v) mout.at[vid] = data;

  SpecialPointRef old0{SpecialPointRef::Kind::HalfEdge, e0.id, w0_end, 0};
  SpecialPointRef old1{SpecialPointRef::Kind::HalfEdge, e1.id, w1_end, 0};
  for (auto& d : mout.at[w0])
    if (d.point == old0) d.point = {SpecialPointRef::Kind::HalfEdge, merged.id, 0, 0};
  for (auto& d : mout.at[w1])
    if (d.point == old1) d.point = {SpecialPointRef::Kind::HalfEdge, merged.id, 1, 0};

  return {std::move(out), std::move(mout)};
}

}  // namespace twistab
