#include "twistab/oracles.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>

#include "twistab/iso.hpp"

namespace twistab {
namespace oracles {

namespace {

int half_edge_count(const CurveGraph& g, const VertexId& v) {
  int n = 0;
  for (const auto& e : g.edges)
    for (int k = 0; k < 2; ++k)
      if (e.ends[k].first == v) ++n;
  return n;
}

Rat vertex_weight(const CurveGraph& g, const Vertex& v, const WeightVector& a) {
  Rat sum = 0;
  for (const auto& c : v.clusters)
    for (int mk : c.markings) sum += a[mk - 1];
  (void)g;
  return sum;
}

// Vertices that the coarse rule allows to contract right now.
std::vector<VertexId> contractible(const CurveGraph& g, const WeightVector& a) {
  std::vector<VertexId> out;
  if (g.vertices.size() <= 1) return out;
  for (const auto& v : g.vertices) {
    if (v.genus != 0 || v.degree != 0) continue;
    int he = half_edge_count(g, v.id);
    if (Rat(he) + vertex_weight(g, v, a) > 2) continue;
    if (he == 1) {
      out.push_back(v.id);
    } else if (he == 2) {
      if (!v.clusters.empty()) continue;
      std::vector<EdgeId> ids;
      for (const auto& e : g.edges)
        for (int k = 0; k < 2; ++k)
          if (e.ends[k].first == v.id) ids.push_back(e.id);
      if (ids[0] != ids[1]) out.push_back(v.id);  // self-node: nothing to merge
    }
  }
  std::sort(out.begin(), out.end(), natural_less);
  return out;
}

CurveGraph contract_once(const CurveGraph& g, const VertexId& v) {
  const Vertex* vx = g.find_vertex(v);
  assert(vx);
  struct End {
    EdgeId edge;
    VertexId vertex;
    int slot;
    int end;
  };
  std::vector<End> other_ends;
  std::set<EdgeId> dead;
  for (const auto& e : g.edges)
    for (int k = 0; k < 2; ++k)
      if (e.ends[k].first == v) {
        dead.insert(e.id);
        other_ends.push_back(
            {e.id, e.ends[1 - k].first, e.ends[1 - k].second, 1 - k});
      }

  CurveGraph out;
  out.n_markings = g.n_markings;
  out.declared_genus = g.declared_genus;
  for (const auto& vert : g.vertices)
    if (vert.id != v) out.vertices.push_back(vert);
  for (const auto& e : g.edges)
    if (!dead.count(e.id)) out.edges.push_back(e);

  if (other_ends.size() == 1) {
    // tail: markings pile up at the attachment point
    std::vector<int> markings;
    for (const auto& c : vx->clusters)
      markings.insert(markings.end(), c.markings.begin(), c.markings.end());
    if (!markings.empty()) {
      std::sort(markings.begin(), markings.end());
      MarkingCluster cl;
      cl.markings = std::move(markings);
      out.find_vertex(other_ends[0].vertex)->clusters.push_back(cl);
    }
  } else {
    // bridge: the two loose ends join into one edge
    assert(other_ends.size() == 2);
    std::sort(other_ends.begin(), other_ends.end(),
              [](const End& a, const End& b) {
                return natural_less(a.edge, b.edge);
              });
    Edge merged;
    merged.id = other_ends[0].edge;
    int slot1 = other_ends[1].slot;
    if (other_ends[0].vertex == other_ends[1].vertex &&
        other_ends[0].slot == slot1) {
      int mx = slot1;
      for (const auto& e : g.edges)
        for (int k = 0; k < 2; ++k)
          if (e.ends[k].first == other_ends[1].vertex)
            mx = std::max(mx, e.ends[k].second);
      slot1 = mx + 1;
    }
    merged.ends[0] = {other_ends[0].vertex, other_ends[0].slot};
    merged.ends[1] = {other_ends[1].vertex, slot1};
    merged.node_order = 1;
    out.edges.push_back(merged);
  }
  return out;
}

}  // namespace

CurveGraph hassett_stabilize(CurveGraph g, const WeightVector& a) {
  while (true) {
    auto cand = contractible(g, a);
    if (cand.empty()) return g;
    g = contract_once(g, cand.front());
  }
}

std::optional<CurveGraph> hassett_all_orders(const CurveGraph& g,
                                             const WeightVector& a) {
  std::vector<CurveGraph> finals;
  std::vector<CurveGraph> frontier{g};
  std::vector<CurveGraph> seen;
  auto known = [&](const CurveGraph& x) {
    for (const auto& s : seen)
      if (graphs_isomorphic(s, x)) return true;
    return false;
  };
  while (!frontier.empty()) {
    CurveGraph cur = std::move(frontier.back());
    frontier.pop_back();
    if (known(cur)) continue;
    seen.push_back(cur);
    auto cand = contractible(cur, a);
    if (cand.empty()) {
      finals.push_back(cur);
      continue;
    }
    for (const auto& v : cand) frontier.push_back(contract_once(cur, v));
  }
  if (finals.empty()) return std::nullopt;
  for (size_t i = 1; i < finals.size(); ++i)
    if (!graphs_isomorphic(finals[0], finals[i])) return std::nullopt;
  return finals[0];
}

bool dm_stable(const CurveGraph& g) {
  for (const auto& v : g.vertices) {
    if (v.degree != 0) continue;
    int pts = half_edge_count(g, v.id) + static_cast<int>(v.clusters.size());
    if (v.genus == 0 && pts < 3) return false;
    if (v.genus == 1 && pts < 1) return false;
  }
  return true;
}

bool classical_weighted_stable(const CurveGraph& g, const WeightVector& a) {
  for (const auto& v : g.vertices) {
    if (v.degree != 0 || v.genus > 0) continue;
    if (Rat(half_edge_count(g, v.id)) + vertex_weight(g, v, a) <= 2)
      return false;
  }
  return true;
}

long long torsor_brute_count(const std::vector<long long>& root_orders,
                             long long m, const FiniteGroup& g) {
  int k = static_cast<int>(root_orders.size());
  std::vector<std::vector<int>> cand(k + 1);
  for (int i = 0; i < k; ++i)
    for (int x = 0; x < g.order(); ++x)
      if (root_orders[i] % g.element_order(x) == 0) cand[i].push_back(x);
  for (int x = 0; x < g.order(); ++x)
    if (m % g.element_order(x) == 0) cand[k].push_back(x);

  std::set<std::vector<int>> canonical;
  std::vector<int> cur(k + 1);
  auto rec = [&](auto&& self, int pos, int prod) -> void {
    if (pos == k + 1) {
      if (prod != g.identity()) return;
      std::vector<int> all(cur.begin(), cur.end());
      if (!is_abelian(g, generated_subgroup(g, all))) return;
      std::vector<int> best;
      for (int c = 0; c < g.order(); ++c) {
        std::vector<int> conj(k + 1);
        for (int i = 0; i <= k; ++i)
          conj[i] = g.mul(g.mul(g.inverse(c), cur[i]), c);
        if (best.empty() || conj < best) best = std::move(conj);
      }
      canonical.insert(best);
      return;
    }
    for (int x : cand[pos]) {
      cur[pos] = x;
      self(self, pos + 1, g.mul(prod, x));
    }
  };
  rec(rec, 0, g.identity());
  return static_cast<long long>(canonical.size());
}

XmBrute xm_brute(int n, const std::vector<QVec>& generators, long long m) {
  long long d = 1;
  for (const auto& g : generators)
    for (const auto& c : g) d = std::lcm(d, to_ll(rat_den(c)));

  // Closure of the generator classes inside (Z/D)^n.
  std::set<std::vector<long long>> elems;
  std::vector<std::vector<long long>> gens;
  for (const auto& g : generators) {
    std::vector<long long> v(n);
    for (int i = 0; i < n; ++i) {
      Rat scaled = g[i] * Rat(d);
      assert(rat_den(scaled) == 1);
      v[i] = to_ll(rat_num(scaled)) % d;
    }
    gens.push_back(std::move(v));
  }
  std::vector<std::vector<long long>> frontier{std::vector<long long>(n, 0)};
  elems.insert(frontier[0]);
  while (!frontier.empty()) {
    auto x = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& g : gens) {
      std::vector<long long> y(n);
      for (int i = 0; i < n; ++i) y[i] = (x[i] + g[i]) % d;
      if (elems.insert(y).second) frontier.push_back(y);
    }
  }

  XmBrute out;
  out.x_order = static_cast<long long>(elems.size());
  out.xm_order = 0;
  for (const auto& x : elems) {
    long long sum = 0;
    for (long long c : x) sum = (sum + c) % d;
    // chi = sum/d mod 1; m*chi integral iff d | m*sum
    if ((m * sum) % d == 0) ++out.xm_order;
  }

  // Abstract type from order counts: additive order of x is d/gcd(...).
  auto elem_order = [&](const std::vector<long long>& x) {
    long long o = 1;
    for (long long c : x) o = std::lcm(o, d / std::gcd(d, c == 0 ? d : c));
    return o;
  };
  std::map<long long, std::vector<int>> parts;
  long long rem = out.x_order;
  for (long long p = 2; p * p <= rem; ++p)
    while (rem % p == 0) { parts[p]; rem /= p; }
  if (rem > 1) parts[rem];
  for (auto& [p, lambda] : parts) {
    std::vector<int> logcount{0};
    for (int j = 1;; ++j) {
      long long pj = 1;
      for (int t = 0; t < j; ++t) pj *= p;
      int cnt = 0;
      for (const auto& x : elems)
        if (pj % elem_order(x) == 0) ++cnt;
      int lg = 0;
      long long c = cnt;
      while (c > 1) { c /= p; ++lg; }
      logcount.push_back(lg);
      if (logcount[j] == logcount[j - 1]) break;
    }
    for (size_t j = 1; j < logcount.size(); ++j) {
      int ge_j = logcount[j] - logcount[j - 1];
      while (static_cast<int>(lambda.size()) < ge_j) lambda.push_back(0);
      for (int i = 0; i < ge_j; ++i) lambda[i] = static_cast<int>(j);
    }
  }
  size_t width = 0;
  for (auto& [p, lambda] : parts) width = std::max(width, lambda.size());
  std::vector<long long> factors(width, 1);
  for (auto& [p, lambda] : parts)
    for (size_t i = 0; i < lambda.size(); ++i) {
      long long pe = 1;
      for (int t = 0; t < lambda[i]; ++t) pe *= p;
      factors[width - 1 - i] *= pe;
    }
  for (long long f : factors)
    if (f > 1) out.x_invariants.push_back(f);
  return out;
}

}  // namespace oracles
}  // namespace twistab
