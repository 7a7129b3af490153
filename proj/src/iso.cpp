#include "twistab/iso.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace twistab {

namespace {

using ClusterKey = std::tuple<std::vector<int>, long long, std::vector<long long>>;

std::vector<ClusterKey> cluster_keys(const Vertex& v) {
  std::vector<ClusterKey> keys;
  for (const auto& c : v.clusters)
    keys.emplace_back(c.markings, c.root_order, c.local_group.invariant_factors);
  std::sort(keys.begin(), keys.end());
  return keys;
}

struct IsoSearch {
  const CurveGraph& a;
  const CurveGraph& b;
  const MonodromyAssignment* ma = nullptr;
  const MonodromyAssignment* mb = nullptr;

  std::vector<int> vmap;       // a-vertex index -> b-vertex index
  std::vector<bool> used_b;
  std::vector<int> emap;       // a-edge index -> b-edge index
  std::vector<int> eflip;      // 0/1: end correspondence
  std::vector<bool> used_be;

  const PointDatum* datum(const MonodromyAssignment& m, const VertexId& v,
                          const SpecialPointRef& ref) const {
    auto it = m.at.find(v);
    if (it == m.at.end()) return nullptr;
    for (const auto& d : it->second)
      if (d.point == ref) return &d;
    return nullptr;
  }

  bool vertex_compatible(const Vertex& va, const Vertex& vb) const {
    if (va.genus != vb.genus || va.degree != vb.degree) return false;
    if (cluster_keys(va) != cluster_keys(vb)) return false;
    if (!ma) return true;
    // Cluster contents are globally unique, so matching is forced; compare
    // the attached monodromy data pairwise.
    for (int ca = 0; ca < static_cast<int>(va.clusters.size()); ++ca) {
      int cb = -1;
      for (int j = 0; j < static_cast<int>(vb.clusters.size()); ++j)
        if (vb.clusters[j] == va.clusters[ca]) { cb = j; break; }
      if (cb < 0) return false;
      const PointDatum* da =
          datum(*ma, va.id, {SpecialPointRef::Kind::Cluster, "", 0, ca});
      const PointDatum* db =
          datum(*mb, vb.id, {SpecialPointRef::Kind::Cluster, "", 0, cb});
      if (!da || !db) return da == db;
      if (da->loop != db->loop || da->image_subgroup != db->image_subgroup)
        return false;
    }
    return true;
  }

  bool edge_compatible(const Edge& ea, const Edge& eb, int flip) const {
    if (ea.node_order != eb.node_order) return false;
    for (int k = 0; k < 2; ++k) {
      int ia = a.vertex_index(ea.ends[k].first);
      int ib = b.vertex_index(eb.ends[k ^ flip].first);
      if (vmap[ia] != ib) return false;
    }
    if (!ma) return true;
    for (int k = 0; k < 2; ++k) {
      const PointDatum* da = datum(
          *ma, ea.ends[k].first, {SpecialPointRef::Kind::HalfEdge, ea.id, k, 0});
      const PointDatum* db =
          datum(*mb, eb.ends[k ^ flip].first,
                {SpecialPointRef::Kind::HalfEdge, eb.id, k ^ flip, 0});
      if (!da || !db) return da == db;
      if (da->loop != db->loop || da->image_subgroup != db->image_subgroup)
        return false;
    }
    return true;
  }

  bool match_edges(size_t pos) {
    if (pos == a.edges.size()) return true;
    for (size_t j = 0; j < b.edges.size(); ++j) {
      if (used_be[j]) continue;
      for (int flip = 0; flip < 2; ++flip) {
        if (!edge_compatible(a.edges[pos], b.edges[j], flip)) continue;
        used_be[j] = true;
        emap[pos] = static_cast<int>(j);
        eflip[pos] = flip;
        if (match_edges(pos + 1)) return true;
        used_be[j] = false;
      }
    }
    return false;
  }

  bool match_vertices(size_t pos) {
    if (pos == a.vertices.size()) {
      used_be.assign(b.edges.size(), false);
      return match_edges(0);
    }
    for (size_t j = 0; j < b.vertices.size(); ++j) {
      if (used_b[j]) continue;
      if (!vertex_compatible(a.vertices[pos], b.vertices[j])) continue;
      used_b[j] = true;
      vmap[pos] = static_cast<int>(j);
      if (match_vertices(pos + 1)) return true;
      used_b[j] = false;
    }
    return false;
  }

  bool run() {
    if (a.vertices.size() != b.vertices.size()) return false;
    if (a.edges.size() != b.edges.size()) return false;
    if (a.n_markings != b.n_markings) return false;
    if (a.declared_genus != b.declared_genus) return false;
    vmap.assign(a.vertices.size(), -1);
    used_b.assign(b.vertices.size(), false);
    emap.assign(a.edges.size(), -1);
    eflip.assign(a.edges.size(), 0);
    return match_vertices(0);
  }
};

}  // namespace

bool graphs_isomorphic(const CurveGraph& a, const CurveGraph& b) {
  IsoSearch s{a, b};
  return s.run();
}

bool records_equivalent(const CurveGraph& ga, const MonodromyAssignment& ma,
                        const CurveGraph& gb, const MonodromyAssignment& mb) {
  if (!ma.group || !mb.group) return false;
  if (ma.group != mb.group) {
    if (ma.group->order() != mb.group->order()) return false;
    for (int x = 0; x < ma.group->order(); ++x)
      for (int y = 0; y < ma.group->order(); ++y)
        if (ma.group->mul(x, y) != mb.group->mul(x, y)) return false;
  }
  IsoSearch s{ga, gb, &ma, &mb};
  return s.run();
}

}  // namespace twistab
