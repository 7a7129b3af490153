#include "twistab/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace twistab {

namespace {

[[noreturn]] void bad_input(const std::string& msg,
                            const std::string& where = {}) {
  fail(Errc::InvalidInput, msg, where);
}

int require_int(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_number_integer())
    bad_input(std::string("missing integer field \"") + key + "\"", where);
  return j[key].get<int>();
}

std::string require_string(const Json& j, const char* key,
                           const std::string& where) {
  if (!j.contains(key) || !j[key].is_string())
    bad_input(std::string("missing string field \"") + key + "\"", where);
  return j[key].get<std::string>();
}

}  // namespace

GroupPtr parse_group_spec(const Json& j) {
  if (j.is_string()) return parse_group_string(j.get<std::string>());
  if (!j.is_object()) bad_input("group spec must be an object or string");
  std::string kind = require_string(j, "kind", "group");
  if (kind == "symmetric") return make_symmetric_group(require_int(j, "degree", "group"));
  if (kind == "cyclic") return make_cyclic_group(require_int(j, "n", "group"));
  if (kind == "dihedral") return make_dihedral_group(require_int(j, "n", "group"));
  if (kind == "product") {
    if (!j.contains("factors") || !j["factors"].is_array() ||
        j["factors"].empty())
      bad_input("product group needs a nonempty factors array", "group");
    GroupPtr g = parse_group_spec(j["factors"][0]);
    for (size_t i = 1; i < j["factors"].size(); ++i)
      g = make_product_group(g, parse_group_spec(j["factors"][i]));
    return g;
  }
  if (kind == "table") {
    int order = require_int(j, "order", "group");
    if (!j.contains("mul") || !j["mul"].is_array())
      bad_input("table group needs a mul array", "group");
    std::vector<std::vector<int>> mul;
    for (const auto& row : j["mul"]) mul.push_back(row.get<std::vector<int>>());
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    return FiniteGroup::from_table(order, mul, labels,
                                   "table" + std::to_string(order));
  }
  bad_input("unknown group kind: " + kind, "group");
}

GroupPtr parse_group_string(const std::string& s) {
  if (s.empty()) bad_input("empty group spec");
  if (s == "trivial" || s == "1") return make_trivial_group();
  if (s.front() == '{') return parse_group_spec(Json::parse(s));
  if (auto x = s.find('x'); x != std::string::npos) {
    GroupPtr a = parse_group_string(s.substr(0, x));
    GroupPtr b = parse_group_string(s.substr(x + 1));
    return make_product_group(a, b);
  }
  auto num = [&](size_t from) -> int {
    int v = 0;
    if (from >= s.size()) bad_input("bad group spec: " + s);
    for (size_t i = from; i < s.size(); ++i) {
      if (!isdigit(static_cast<unsigned char>(s[i])))
        bad_input("bad group spec: " + s);
      v = v * 10 + (s[i] - '0');
    }
    return v;
  };
  switch (s[0]) {
    case 'S': return make_symmetric_group(num(1));
    case 'C':
    case 'Z': return make_cyclic_group(num(1));
    case 'D': return make_dihedral_group(num(1));
    default: break;
  }
  bad_input("bad group spec: " + s);
}

std::string element_to_string(const FiniteGroup& g, int index) {
  return g.label(index);
}

int element_from_string(const FiniteGroup& g, const std::string& s) {
  if (auto idx = g.element_by_label(s)) return *idx;
  // Fall back to a numeric index for table-style groups.
  bool numeric = !s.empty();
  for (char c : s)
    if (!isdigit(static_cast<unsigned char>(c))) numeric = false;
  if (numeric) {
    int v = std::stoi(s);
    if (v >= 0 && v < g.order()) return v;
  }
  bad_input("unknown group element: " + s);
}

CurveGraph curve_from_json(const Json& j) {
  if (!j.is_object()) bad_input("curve must be a JSON object", "curve");
  CurveGraph g;
  g.n_markings = require_int(j, "n", "curve");
  g.declared_genus = require_int(j, "genus", "curve");
  if (!j.contains("vertices") || !j["vertices"].is_array())
    bad_input("curve needs a vertices array", "curve");
  for (const auto& vj : j["vertices"]) {
    Vertex v;
    v.id = require_string(vj, "id", "curve.vertices");
    v.genus = require_int(vj, "genus", "vertex " + v.id);
    v.degree = vj.contains("degree") ? vj["degree"].get<long long>() : 0;
    if (vj.contains("clusters")) {
      for (const auto& cj : vj["clusters"]) {
        MarkingCluster c;
        if (!cj.contains("markings") || !cj["markings"].is_array())
          bad_input("cluster needs a markings array", "vertex " + v.id);
        c.markings = cj["markings"].get<std::vector<int>>();
        std::sort(c.markings.begin(), c.markings.end());
        c.root_order = cj.contains("root_order")
                           ? cj["root_order"].get<long long>()
                           : 1;
        if (cj.contains("local_group"))
          c.local_group = FiniteAbelianGroup(
              cj["local_group"].get<std::vector<long long>>());
        v.clusters.push_back(std::move(c));
      }
    }
    g.vertices.push_back(std::move(v));
  }
  if (j.contains("edges")) {
    for (const auto& ej : j["edges"]) {
      Edge e;
      e.id = require_string(ej, "id", "curve.edges");
      if (!ej.contains("ends") || !ej["ends"].is_array() ||
          ej["ends"].size() != 2)
        bad_input("edge needs an ends array of length 2", "edge " + e.id);
      for (int k = 0; k < 2; ++k) {
        const auto& endj = ej["ends"][k];
        if (!endj.is_array() || endj.size() != 2)
          bad_input("edge end must be [vertex, slot]", "edge " + e.id);
        e.ends[k] = {endj[0].get<std::string>(), endj[1].get<int>()};
      }
      e.node_order = ej.contains("order") ? ej["order"].get<long long>() : 1;
      g.edges.push_back(std::move(e));
    }
  }
  return g;
}

Json curve_to_json(const CurveGraph& g) {
  Json j;
  j["n"] = g.n_markings;
  j["genus"] = g.declared_genus;
  j["vertices"] = Json::array();
  for (const auto& v : g.vertices) {
    Json vj;
    vj["id"] = v.id;
    vj["genus"] = v.genus;
    vj["degree"] = v.degree;
    vj["clusters"] = Json::array();
    for (const auto& c : v.clusters) {
      Json cj;
      cj["markings"] = c.markings;
      cj["root_order"] = c.root_order;
      if (!c.local_group.trivial())
        cj["local_group"] = c.local_group.invariant_factors;
      vj["clusters"].push_back(std::move(cj));
    }
    j["vertices"].push_back(std::move(vj));
  }
  j["edges"] = Json::array();
  for (const auto& e : g.edges) {
    Json ej;
    ej["id"] = e.id;
    ej["ends"] = Json::array({Json::array({e.ends[0].first, e.ends[0].second}),
                              Json::array({e.ends[1].first, e.ends[1].second})});
    ej["order"] = e.node_order;
    j["edges"].push_back(std::move(ej));
  }
  return j;
}

WeightVector weights_from_string(const std::string& s) {
  QVec w;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    try {
      w.push_back(rat_from_string(part));
    } catch (const std::invalid_argument& e) {
      bad_input(e.what(), "weights");
    }
  }
  return WeightVector(std::move(w));
}

WeightVector weights_from_json(const Json& j) {
  if (j.is_string()) return weights_from_string(j.get<std::string>());
  if (!j.is_array()) bad_input("weights must be an array", "weights");
  QVec w;
  for (const auto& e : j) {
    try {
      if (e.is_string())
        w.push_back(rat_from_string(e.get<std::string>()));
      else if (e.is_number_integer())
        w.push_back(Rat(e.get<long long>()));
      else
        bad_input("weights must be fraction strings", "weights");
    } catch (const std::invalid_argument& ex) {
      bad_input(ex.what(), "weights");
    }
  }
  return WeightVector(std::move(w));
}

Json weights_to_json(const WeightVector& w) {
  Json j = Json::array();
  for (const auto& a : w.entries) j.push_back(rat_to_string(a));
  return j;
}

namespace {

SpecialPointRef point_from_string(const std::string& s, const CurveGraph& g,
                                  const VertexId& vertex) {
  if (s.rfind("cluster:", 0) == 0) {
    SpecialPointRef ref;
    ref.kind = SpecialPointRef::Kind::Cluster;
    ref.cluster = std::stoi(s.substr(8));
    const Vertex* v = g.find_vertex(vertex);
    if (!v || ref.cluster < 0 ||
        ref.cluster >= static_cast<int>(v->clusters.size()))
      bad_input("cluster index out of range: " + s, "vertex " + vertex);
    return ref;
  }
  if (s.rfind("edge:", 0) == 0) {
    auto rest = s.substr(5);
    auto colon = rest.rfind(':');
    if (colon == std::string::npos)
      bad_input("bad point reference: " + s, "vertex " + vertex);
    std::string eid = rest.substr(0, colon);
    int slot = std::stoi(rest.substr(colon + 1));
    for (const auto& e : g.edges) {
      if (e.id != eid) continue;
      for (int k = 0; k < 2; ++k)
        if (e.ends[k].first == vertex && e.ends[k].second == slot)
          return {SpecialPointRef::Kind::HalfEdge, eid, k, 0};
      // lenient: unique end at this vertex
      int hit = -1, hits = 0;
      for (int k = 0; k < 2; ++k)
        if (e.ends[k].first == vertex) { hit = k; ++hits; }
      if (hits == 1) return {SpecialPointRef::Kind::HalfEdge, eid, hit, 0};
      bad_input("ambiguous or wrong half-edge reference: " + s,
                "vertex " + vertex);
    }
    bad_input("unknown edge in point reference: " + s, "vertex " + vertex);
  }
  bad_input("bad point reference: " + s, "vertex " + vertex);
}

std::string point_to_string(const SpecialPointRef& ref, const CurveGraph& g) {
  if (ref.kind == SpecialPointRef::Kind::Cluster)
    return "cluster:" + std::to_string(ref.cluster);
  for (const auto& e : g.edges)
    if (e.id == ref.edge)
      return "edge:" + e.id + ":" + std::to_string(e.ends[ref.end].second);
  return "edge:" + ref.edge + ":?";
}

}  // namespace

MonodromyAssignment monodromy_from_json(const Json& j, const CurveGraph& g,
                                        GroupPtr group) {
  MonodromyAssignment mono;
  if (j.contains("group") && !group) group = parse_group_spec(j["group"]);
  if (!group) bad_input("no group given for monodromy", "monodromy");
  mono.group = group;
  const Json& arr = j.contains("assignments") ? j["assignments"] : j;
  if (!arr.is_array())
    bad_input("monodromy needs an assignments array", "monodromy");
  for (const auto& vj : arr) {
    VertexId vid = require_string(vj, "vertex", "monodromy");
    std::vector<PointDatum> data;
    if (!vj.contains("points") || !vj["points"].is_array())
      bad_input("assignment needs a points array", "vertex " + vid);
    for (const auto& pj : vj["points"]) {
      PointDatum d;
      d.point = point_from_string(require_string(pj, "point", "vertex " + vid),
                                  g, vid);
      d.loop = element_from_string(*group,
                                   require_string(pj, "loop", "vertex " + vid));
      if (pj.contains("image_subgroup")) {
        for (const auto& x : pj["image_subgroup"])
          d.image_subgroup.push_back(
              element_from_string(*group, x.get<std::string>()));
        std::sort(d.image_subgroup.begin(), d.image_subgroup.end());
        d.image_subgroup.erase(
            std::unique(d.image_subgroup.begin(), d.image_subgroup.end()),
            d.image_subgroup.end());
      } else {
        d.image_subgroup = generated_subgroup(*group, std::vector<int>{d.loop});
      }
      data.push_back(std::move(d));
    }
    mono.at[vid] = std::move(data);
  }
  return mono;
}

Json monodromy_to_json(const MonodromyAssignment& mono, const CurveGraph& g) {
  Json j;
  j["group"] = mono.group ? mono.group->name() : "";
  j["assignments"] = Json::array();
  std::vector<VertexId> ids;
  for (const auto& [vid, data] : mono.at) ids.push_back(vid);
  std::sort(ids.begin(), ids.end(), natural_less);
  for (const auto& vid : ids) {
    Json vj;
    vj["vertex"] = vid;
    vj["points"] = Json::array();
    for (const auto& d : mono.at.at(vid)) {
      Json pj;
      pj["point"] = point_to_string(d.point, g);
      pj["loop"] = element_to_string(*mono.group, d.loop);
      Json img = Json::array();
      for (int x : d.image_subgroup)
        img.push_back(element_to_string(*mono.group, x));
      pj["image_subgroup"] = std::move(img);
      vj["points"].push_back(std::move(pj));
    }
    j["assignments"].push_back(std::move(vj));
  }
  return j;
}

Json violations_to_json(const std::vector<Violation>& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back({{"where", x.where}, {"reason", x.message}});
  return j;
}

Json report_to_json(const StabilityReport& r) {
  Json j;
  j["stable"] = r.stable();
  j["prestable"] = r.prestable;
  j["representable"] = r.representable;
  j["finite_autos"] = r.finite_autos;
  j["weighted_ok"] = r.weighted_ok;
  j["offending"] = violations_to_json(r.offending);
  return j;
}

Json record_to_json(const StableMapRecord& rec) {
  Json j;
  j["curve"] = curve_to_json(rec.graph);
  j["weights"] = weights_to_json(rec.weights);
  j["monodromy"] = monodromy_to_json(rec.mono, rec.graph);
  j["trace"] = Json::array();
  for (const auto& step : rec.trace)
    j["trace"].push_back(
        {{"op", step.kind == TraceStep::Kind::Tail ? "tail" : "bridge"},
         {"vertex", step.vertex}});
  return j;
}

Json chamber_to_json(const Chamber& c) {
  Json j;
  j["family"] = c.family;
  Json w = Json::array();
  for (const auto& x : c.witness) w.push_back(rat_to_string(x));
  j["witness"] = std::move(w);
  return j;
}

AdmissibleMonoid monoid_from_json(const Json& j) {
  if (!j.is_array()) bad_input("monoid must be an array of generators", "monoid");
  std::vector<QVec> gens;
  int n = -1;
  for (const auto& gj : j) {
    if (!gj.is_array()) bad_input("monoid generator must be an array", "monoid");
    QVec v;
    for (const auto& c : gj) {
      try {
        v.push_back(c.is_string() ? rat_from_string(c.get<std::string>())
                                  : Rat(c.get<long long>()));
      } catch (const std::invalid_argument& e) {
        bad_input(e.what(), "monoid");
      }
    }
    if (n < 0) n = static_cast<int>(v.size());
    if (static_cast<int>(v.size()) != n)
      bad_input("monoid generators must share a dimension", "monoid");
    gens.push_back(std::move(v));
  }
  if (n < 0) bad_input("monoid needs at least one generator row", "monoid");
  return AdmissibleMonoid(n, std::move(gens));
}

}  // namespace twistab
