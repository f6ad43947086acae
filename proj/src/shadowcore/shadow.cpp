#include "shadowq/shadow.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "shadowq/error.hpp"

namespace shadowq {

using nlohmann::json;

const char* to_string(CellKind k) { return k == CellKind::Arc ? "arc" : "circle"; }

int Shadow::region_index(const std::string& id) const {
  for (std::size_t k = 0; k < regions.size(); ++k) {
    if (regions[k].id == id) return static_cast<int>(k);
  }
  return -1;
}

int Shadow::max_fixed_color() const {
  int m = 0;
  for (const auto& r : regions) {
    if (r.color) m = std::max(m, *r.color);
  }
  for (const auto& e : boundary_edges) m = std::max(m, e.color);
  return m;
}

namespace {

using Triple = std::array<std::string, 3>;

Triple sorted(Triple t) {
  std::sort(t.begin(), t.end());
  return t;
}

template <class Items>
void check_unique_ids(const Items& items, const char* what, std::vector<std::string>& out) {
  std::set<std::string> seen;
  for (const auto& it : items) {
    if (it.id.empty()) out.push_back(std::string(what) + " with empty id");
    if (!seen.insert(it.id).second) out.push_back(std::string("duplicate ") + what + " id '" + it.id + "'");
  }
}

}  // namespace

ValidationReport validate_shadow(const Shadow& s) {
  ValidationReport rep;
  auto& v = rep.violations;
  check_unique_ids(s.regions, "region", v);
  check_unique_ids(s.interior_edges, "interior edge", v);
  check_unique_ids(s.interior_vertices, "interior vertex", v);
  check_unique_ids(s.boundary_vertices, "boundary vertex", v);
  check_unique_ids(s.boundary_edges, "boundary edge", v);

  std::map<std::string, const Region*> by_id;
  for (const auto& r : s.regions) {
    by_id.emplace(r.id, &r);
    if (r.color && *r.color < 0) v.push_back("region '" + r.id + "' has a negative color");
  }
  auto known = [&](const std::string& rid, const std::string& owner) {
    if (by_id.count(rid)) return true;
    v.push_back(owner + " references missing region '" + rid + "'");
    return false;
  };

  std::set<Triple> edge_triples;
  for (const auto& e : s.interior_edges) {
    bool all = true;
    for (const auto& rid : e.regions) all = known(rid, "interior edge '" + e.id + "'") && all;
    if (all) edge_triples.insert(sorted(e.regions));
  }

  static constexpr int kGerms[4][3] = {{0, 1, 2}, {0, 4, 5}, {3, 1, 5}, {3, 4, 2}};
  static constexpr const char* kGermNames[4] = {"(a,b,c)", "(a,e,f)", "(d,b,f)", "(d,e,c)"};
  for (const auto& iv : s.interior_vertices) {
    bool all = true;
    for (const auto& rid : iv.slots) all = known(rid, "interior vertex '" + iv.id + "'") && all;
    if (!all) continue;
    for (int g = 0; g < 4; ++g) {
      const Triple t{iv.slots[kGerms[g][0]], iv.slots[kGerms[g][1]], iv.slots[kGerms[g][2]]};
      if (!edge_triples.count(sorted(t))) {
        v.push_back("interior vertex '" + iv.id + "' germ " + kGermNames[g] + " matches no interior edge triple");
      }
    }
  }

  std::set<std::string> touches_boundary;
  for (const auto& e : s.boundary_edges) {
    if (e.color < 0) v.push_back("boundary edge '" + e.id + "' has a negative color");
    if (known(e.region, "boundary edge '" + e.id + "'")) touches_boundary.insert(e.region);
  }
  for (const auto& bv : s.boundary_vertices) {
    bool all = true;
    for (const auto& rid : bv.regions) all = known(rid, "boundary vertex '" + bv.id + "'") && all;
    if (!all) continue;
    if (!edge_triples.count(sorted(bv.regions))) {
      v.push_back("boundary vertex '" + bv.id + "' triple matches no interior edge triple");
    }
    for (const auto& rid : bv.regions) {
      if (!touches_boundary.count(rid)) {
        v.push_back("boundary vertex '" + bv.id + "' lies on region '" + rid + "' which has no boundary edge");
      }
    }
  }

  for (const auto& r : s.regions) {
    const bool on_boundary = touches_boundary.count(r.id) > 0;
    if (on_boundary && !r.color) {
      v.push_back("region '" + r.id + "' meets the boundary but has no fixed color");
    } else if (!on_boundary && r.color) {
      v.push_back("region '" + r.id + "' has a fixed color but no boundary edge");
    }
  }
  return rep;
}

// ---- JSON ----

std::string json_id(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw Error(ErrorKind::Parse, where + ": id must be a string or an integer");
}

namespace {

void only_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) throw Error(ErrorKind::Parse, where + ": expected an object");
  for (const auto& [k, _] : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; })) {
      throw Error(ErrorKind::Parse, where + ": unknown key '" + k + "'");
    }
  }
}

const json& need(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw Error(ErrorKind::Parse, where + ": missing key '" + key + "'");
  return *it;
}

long long need_int(const json& obj, const char* key, const std::string& where) {
  const json& v = need(obj, key, where);
  if (!v.is_number_integer()) throw Error(ErrorKind::Parse, where + ": '" + key + "' must be an integer");
  return v.get<long long>();
}

int need_color(const json& obj, const char* key, const std::string& where) {
  const long long c = need_int(obj, key, where);
  if (c < 0 || c > 1'000'000) throw Error(ErrorKind::Parse, where + ": color out of range");
  return static_cast<int>(c);
}

CellKind need_kind(const json& obj, const std::string& where) {
  const json& v = need(obj, "kind", where);
  if (v == "arc") return CellKind::Arc;
  if (v == "circle") return CellKind::Circle;
  throw Error(ErrorKind::Parse, where + ": kind must be \"arc\" or \"circle\"");
}

template <std::size_t N>
std::array<std::string, N> id_array(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != N) {
    throw Error(ErrorKind::Parse, where + ": expected an array of " + std::to_string(N) + " region ids");
  }
  std::array<std::string, N> out;
  for (std::size_t k = 0; k < N; ++k) out[k] = json_id(v[k], where);
  return out;
}

const json& list(const json& root, const char* key) {
  static const json empty = json::array();
  auto it = root.find(key);
  if (it == root.end()) return empty;
  if (!it->is_array()) throw Error(ErrorKind::Parse, std::string(key) + ": expected an array");
  return *it;
}

}  // namespace

Shadow shadow_from_json(const json& j) {
  only_keys(j, {"regions", "interior_edges", "interior_vertices", "boundary_vertices", "boundary_edges"}, "shadow");
  Shadow s;
  std::size_t k = 0;
  for (const auto& r : list(j, "regions")) {
    const std::string where = "regions[" + std::to_string(k++) + "]";
    only_keys(r, {"id", "chi", "gleam2", "color"}, where);
    Region reg;
    reg.id = json_id(need(r, "id", where), where);
    reg.chi = need_int(r, "chi", where);
    reg.gleam2 = need_int(r, "gleam2", where);
    if (r.contains("color")) reg.color = need_color(r, "color", where);
    s.regions.push_back(std::move(reg));
  }
  k = 0;
  for (const auto& e : list(j, "interior_edges")) {
    const std::string where = "interior_edges[" + std::to_string(k++) + "]";
    only_keys(e, {"id", "kind", "regions"}, where);
    s.interior_edges.push_back(
        {json_id(need(e, "id", where), where), need_kind(e, where), id_array<3>(need(e, "regions", where), where)});
  }
  k = 0;
  for (const auto& v : list(j, "interior_vertices")) {
    const std::string where = "interior_vertices[" + std::to_string(k++) + "]";
    only_keys(v, {"id", "slots"}, where);
    const json& slots = need(v, "slots", where);
    only_keys(slots, {"a", "b", "c", "d", "e", "f"}, where + ".slots");
    InteriorVertex iv;
    iv.id = json_id(need(v, "id", where), where);
    static constexpr const char* kNames[6] = {"a", "b", "c", "d", "e", "f"};
    for (int i = 0; i < 6; ++i) iv.slots[i] = json_id(need(slots, kNames[i], where + ".slots"), where);
    s.interior_vertices.push_back(std::move(iv));
  }
  k = 0;
  for (const auto& v : list(j, "boundary_vertices")) {
    const std::string where = "boundary_vertices[" + std::to_string(k++) + "]";
    only_keys(v, {"id", "regions"}, where);
    s.boundary_vertices.push_back({json_id(need(v, "id", where), where), id_array<3>(need(v, "regions", where), where)});
  }
  k = 0;
  for (const auto& e : list(j, "boundary_edges")) {
    const std::string where = "boundary_edges[" + std::to_string(k++) + "]";
    only_keys(e, {"id", "kind", "region", "color"}, where);
    s.boundary_edges.push_back({json_id(need(e, "id", where), where), need_kind(e, where),
                                json_id(need(e, "region", where), where), need_color(e, "color", where)});
  }
  return s;
}

json shadow_to_json(const Shadow& s) {
  json j;
  j["regions"] = json::array();
  for (const auto& r : s.regions) {
    json o = {{"id", r.id}, {"chi", r.chi}, {"gleam2", r.gleam2}};
    if (r.color) o["color"] = *r.color;
    j["regions"].push_back(std::move(o));
  }
  j["interior_edges"] = json::array();
  for (const auto& e : s.interior_edges) {
    j["interior_edges"].push_back({{"id", e.id}, {"kind", to_string(e.kind)}, {"regions", e.regions}});
  }
  j["interior_vertices"] = json::array();
  for (const auto& v : s.interior_vertices) {
    json slots;
    static constexpr const char* kNames[6] = {"a", "b", "c", "d", "e", "f"};
    for (int i = 0; i < 6; ++i) slots[kNames[i]] = v.slots[i];
    j["interior_vertices"].push_back({{"id", v.id}, {"slots", std::move(slots)}});
  }
  j["boundary_vertices"] = json::array();
  for (const auto& v : s.boundary_vertices) j["boundary_vertices"].push_back({{"id", v.id}, {"regions", v.regions}});
  j["boundary_edges"] = json::array();
  for (const auto& e : s.boundary_edges) {
    j["boundary_edges"].push_back(
        {{"id", e.id}, {"kind", to_string(e.kind)}, {"region", e.region}, {"color", e.color}});
  }
  return j;
}

}  // namespace shadowq
