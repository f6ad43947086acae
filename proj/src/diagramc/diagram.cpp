#include "shadowq/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "diagram_internal.hpp"
#include "shadowq/error.hpp"

namespace shadowq {

using nlohmann::json;

namespace detail {

int UnionFind::find(int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

bool UnionFind::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (b < a) std::swap(a, b);
  parent[b] = a;
  return true;
}

UnionFind::UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }

Incidence::Incidence(const Diagram& d) {
  for (std::size_t k = 0; k < d.arcs.size(); ++k) arc_index[d.arcs[k]] = static_cast<int>(k);
  at.assign(2 * d.arcs.size(), Slot{});
  auto place = [&](const ArcEnd& e, int junction, int pos, const std::string& where) {
    auto it = arc_index.find(e.arc);
    if (it == arc_index.end()) throw Error(ErrorKind::Parse, where + ": unknown arc '" + e.arc + "'");
    if (e.which_end != 0 && e.which_end != 1) throw Error(ErrorKind::Parse, where + ": which_end must be 0 or 1");
    Slot& s = at[2 * it->second + e.which_end];
    if (s.junction >= 0) {
      throw Error(ErrorKind::Parse, where + ": repeated end " + std::string(e.which_end ? "head" : "tail") +
                                        " of arc '" + e.arc + "'");
    }
    s = {junction, pos};
  };
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    junctions.push_back({static_cast<int>(c), true});
    for (int p = 0; p < 4; ++p) {
      place(d.crossings[c].ends[p], static_cast<int>(junctions.size()) - 1, p,
            "crossings[" + std::to_string(c) + "].ends[" + std::to_string(p) + "]");
    }
  }
  for (std::size_t v = 0; v < d.vertices.size(); ++v) {
    junctions.push_back({static_cast<int>(v), false});
    for (int p = 0; p < 3; ++p) {
      place(d.vertices[v].ends[p], static_cast<int>(junctions.size()) - 1, p,
            "vertices[" + std::to_string(v) + "].ends[" + std::to_string(p) + "]");
    }
  }
  for (std::size_t k = 0; k < d.arcs.size(); ++k) {
    const bool t = at[2 * k].junction >= 0, h = at[2 * k + 1].junction >= 0;
    if (t != h) {
      throw Error(ErrorKind::Parse, "dangling arc-end: arc '" + d.arcs[k] + "' has its " +
                                        std::string(t ? "head" : "tail") + " attached to nothing");
    }
  }
  diagram = &d;
}

bool Incidence::free_loop(int arc) const { return at[2 * arc].junction < 0; }

int Incidence::degree(int junction) const { return junctions[junction].crossing ? 4 : 3; }

const ArcEnd& Incidence::end_at(int junction, int pos) const {
  const auto& j = junctions[junction];
  return j.crossing ? diagram->crossings[j.index].ends[pos] : diagram->vertices[j.index].ends[pos];
}

int Incidence::end_code(const ArcEnd& e) const { return 2 * arc_index.at(e.arc) + e.which_end; }

std::string Incidence::junction_id(int junction) const {
  const auto& j = junctions[junction];
  return j.crossing ? diagram->crossings[j.index].id : diagram->vertices[j.index].id;
}

Dart Incidence::leave(int end) {
  // Leaving through a tail runs along the left side, through a head along the right.
  return {end / 2, end % 2 == 0 ? Side::Left : Side::Right};
}

Dart Incidence::next(const Dart& d) const {
  const int arrive = 2 * d.arc + (d.side == Side::Left ? 1 : 0);
  if (free_loop(d.arc)) return d;
  const Slot& s = at[arrive];
  const int deg = degree(s.junction);
  return leave(end_code(end_at(s.junction, (s.pos + deg - 1) % deg)));
}

int Incidence::dart_code(const Dart& d) { return 2 * d.arc + (d.side == Side::Left ? 0 : 1); }

std::vector<std::vector<Dart>> Incidence::face_darts(int* pieces) const {
  const int n = static_cast<int>(at.size());
  std::vector<int> face(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Dart>> out;
  for (int code = 0; code < n; ++code) {
    if (face[code] >= 0) continue;
    std::vector<Dart> cyc;
    Dart d{code / 2, code % 2 == 0 ? Side::Left : Side::Right};
    for (int guard = 0;; ++guard) {
      if (guard > n) throw Error(ErrorKind::Parse, "malformed rotation system: face traversal does not close");
      const int c = dart_code(d);
      if (face[c] >= 0) {
        if (face[c] != static_cast<int>(out.size()) || c != code) {
          throw Error(ErrorKind::Parse, "malformed rotation system: face traversal does not close");
        }
        break;
      }
      face[c] = static_cast<int>(out.size());
      cyc.push_back(d);
      d = next(d);
    }
    out.push_back(std::move(cyc));
  }
  if (pieces) {
    UnionFind uf(static_cast<int>(diagram->arcs.size()));
    std::vector<int> first(junctions.size(), -1);
    for (int e = 0; e < n; ++e) {
      const int j = at[e].junction;
      if (j < 0) continue;
      if (first[j] < 0) first[j] = e / 2;
      uf.unite(first[j], e / 2);
    }
    std::set<int> roots;
    for (int a = 0; a < static_cast<int>(diagram->arcs.size()); ++a) roots.insert(uf.find(a));
    *pieces = static_cast<int>(roots.size());
  }
  return out;
}

}  // namespace detail

int FaceSet::lookup(const FaceKey& k) const {
  auto it = face_of.find(k);
  if (it == face_of.end()) throw Error(ErrorKind::Parse, "face key references unknown arc '" + k.arc + "'");
  return it->second;
}

FaceSet compute_faces(const Diagram& d) {
  const detail::Incidence inc(d);
  FaceSet fs;
  const auto cycles = inc.face_darts(&fs.pieces);
  for (std::size_t f = 0; f < cycles.size(); ++f) {
    std::vector<FaceKey> keys;
    for (const auto& dart : cycles[f]) {
      FaceKey k{d.arcs[dart.arc], dart.side};
      fs.face_of[k] = static_cast<int>(f);
      keys.push_back(std::move(k));
    }
    fs.faces.push_back(std::move(keys));
  }
  std::size_t loops = 0;
  for (std::size_t a = 0; a < d.arcs.size(); ++a) loops += inc.free_loop(static_cast<int>(a)) ? 1 : 0;
  const long v = static_cast<long>(d.crossings.size() + d.vertices.size() + loops);
  const long e = static_cast<long>(d.arcs.size());
  const long f = static_cast<long>(fs.faces.size());
  if (v - e + f != 2L * fs.pieces) {
    throw Error(ErrorKind::Parse, "nonplanar rotation system: V - E + F = " + std::to_string(v - e + f) +
                                      " over " + std::to_string(fs.pieces) + " connected piece(s)");
  }
  return fs;
}

std::vector<GEdge> g_edges(const Diagram& d) {
  const detail::Incidence inc(d);
  const int n = static_cast<int>(d.arcs.size());
  detail::UnionFind uf(n);
  for (const auto& c : d.crossings) {
    for (int p = 0; p < 2; ++p) uf.unite(inc.arc_index.at(c.ends[p].arc), inc.arc_index.at(c.ends[p + 2].arc));
  }
  std::map<int, int> group_of_root;
  std::vector<GEdge> out;
  std::vector<int> group(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    const int r = uf.find(a);
    auto [it, fresh] = group_of_root.emplace(r, static_cast<int>(out.size()));
    if (fresh) out.push_back(GEdge{{}, true, 1});
    group[a] = it->second;
    out[it->second].arcs.push_back(d.arcs[a]);
  }
  for (int e = 0; e < 2 * n; ++e) {
    const int j = inc.at[e].junction;
    if (j >= 0 && !inc.junctions[j].crossing) out[group[e / 2]].closed = false;
  }
  std::map<int, std::string> colored_by;
  for (const auto& [arc, color] : d.colors) {
    auto it = inc.arc_index.find(arc);
    if (it == inc.arc_index.end()) throw Error(ErrorKind::Parse, "colors: unknown arc '" + arc + "'");
    if (color < 0) throw Error(ErrorKind::Parse, "colors: negative color on arc '" + arc + "'");
    const int g = group[it->second];
    auto [prev, fresh] = colored_by.emplace(g, arc);
    if (!fresh && out[g].color != color) {
      throw Error(ErrorKind::Parse, "colors: arcs '" + prev->second + "' and '" + arc +
                                        "' lie on the same G-edge but have different colors");
    }
    out[g].color = color;
  }
  return out;
}

// ---- JSON ----

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

ArcEnd arc_end(const json& v, const std::string& where) {
  only_keys(v, {"arc", "which_end"}, where);
  const json& w = need(v, "which_end", where);
  if (!w.is_number_integer()) throw Error(ErrorKind::Parse, where + ": which_end must be 0 or 1");
  return {json_id(need(v, "arc", where), where), w.get<int>()};
}

template <std::size_t N>
std::array<ArcEnd, N> ends(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != N) {
    throw Error(ErrorKind::Parse, where + ": expected " + std::to_string(N) + " arc ends");
  }
  std::array<ArcEnd, N> out;
  for (std::size_t k = 0; k < N; ++k) out[k] = arc_end(v[k], where + "[" + std::to_string(k) + "]");
  return out;
}

FaceKey face_key(const json& v, const std::string& where) {
  only_keys(v, {"arc", "side"}, where);
  const json& s = need(v, "side", where);
  if (s != "left" && s != "right") throw Error(ErrorKind::Parse, where + ": side must be \"left\" or \"right\"");
  return {json_id(need(v, "arc", where), where), s == "left" ? Side::Left : Side::Right};
}

json face_key_json(const FaceKey& k) { return {{"arc", k.arc}, {"side", k.side == Side::Left ? "left" : "right"}}; }

json ends_json(const auto& es) {
  json a = json::array();
  for (const auto& e : es) a.push_back({{"arc", e.arc}, {"which_end", e.which_end}});
  return a;
}

const json& list(const json& root, const char* key) {
  static const json empty = json::array();
  auto it = root.find(key);
  if (it == root.end()) return empty;
  if (!it->is_array()) throw Error(ErrorKind::Parse, std::string(key) + ": expected an array");
  return *it;
}

}  // namespace

Diagram diagram_from_json(const json& j) {
  only_keys(j, {"arcs", "crossings", "vertices", "outer_face", "holes", "colors"}, "diagram");
  Diagram d;
  std::set<std::string> seen;
  std::size_t k = 0;
  for (const auto& a : list(j, "arcs")) {
    const std::string where = "arcs[" + std::to_string(k++) + "]";
    std::string id = json_id(a, where);
    if (!seen.insert(id).second) throw Error(ErrorKind::Parse, where + ": duplicate arc '" + id + "'");
    d.arcs.push_back(std::move(id));
  }
  std::set<std::string> junction_ids;
  k = 0;
  for (const auto& c : list(j, "crossings")) {
    const std::string where = "crossings[" + std::to_string(k++) + "]";
    only_keys(c, {"id", "ends", "over"}, where);
    Crossing x;
    x.id = json_id(need(c, "id", where), where);
    x.ends = ends<4>(need(c, "ends", where), where + ".ends");
    const json& o = need(c, "over", where);
    if (o != 0 && o != 1) throw Error(ErrorKind::Parse, where + ": over must be 0 or 1");
    x.over = o.get<int>();
    if (!junction_ids.insert(x.id).second) throw Error(ErrorKind::Parse, where + ": duplicate junction id");
    d.crossings.push_back(std::move(x));
  }
  k = 0;
  for (const auto& v : list(j, "vertices")) {
    const std::string where = "vertices[" + std::to_string(k++) + "]";
    only_keys(v, {"id", "ends"}, where);
    GraphVertex g{json_id(need(v, "id", where), where), ends<3>(need(v, "ends", where), where + ".ends")};
    if (!junction_ids.insert(g.id).second) throw Error(ErrorKind::Parse, where + ": duplicate junction id");
    d.vertices.push_back(std::move(g));
  }
  if (j.contains("outer_face")) d.outer_face = face_key(j["outer_face"], "outer_face");
  k = 0;
  for (const auto& h : list(j, "holes")) d.holes.push_back(face_key(h, "holes[" + std::to_string(k++) + "]"));
  if (j.contains("colors")) {
    const json& cs = j["colors"];
    if (!cs.is_object()) throw Error(ErrorKind::Parse, "colors: expected an object");
    for (const auto& [arc, c] : cs.items()) {
      if (!c.is_number_integer()) throw Error(ErrorKind::Parse, "colors['" + arc + "']: expected an integer");
      d.colors[arc] = c.get<int>();
    }
  }

  // Structural checks and the Euler count.
  const FaceSet fs = compute_faces(d);
  std::set<int> named;
  if (d.outer_face) named.insert(fs.lookup(*d.outer_face));
  for (std::size_t h = 0; h < d.holes.size(); ++h) {
    if (!named.insert(fs.lookup(d.holes[h])).second) {
      throw Error(ErrorKind::Parse, "holes[" + std::to_string(h) + "]: face coincides with the outer face or another hole");
    }
  }
  g_edges(d);
  return d;
}

Diagram parse_diagram(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("diagram JSON: ") + e.what());
  }
  return diagram_from_json(j);
}

json diagram_to_json(const Diagram& d) {
  json j;
  j["arcs"] = d.arcs;
  j["crossings"] = json::array();
  for (const auto& c : d.crossings) j["crossings"].push_back({{"id", c.id}, {"ends", ends_json(c.ends)}, {"over", c.over}});
  j["vertices"] = json::array();
  for (const auto& v : d.vertices) j["vertices"].push_back({{"id", v.id}, {"ends", ends_json(v.ends)}});
  if (d.outer_face) j["outer_face"] = face_key_json(*d.outer_face);
  j["holes"] = json::array();
  for (const auto& h : d.holes) j["holes"].push_back(face_key_json(h));
  j["colors"] = json::object();
  for (const auto& [a, c] : d.colors) j["colors"][a] = c;
  return j;
}

}  // namespace shadowq
