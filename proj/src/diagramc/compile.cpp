#include <algorithm>
#include <set>

#include "diagram_internal.hpp"
#include "shadowq/error.hpp"
#include "shadowq/graphvals.hpp"

namespace shadowq {

using nlohmann::json;

json CompileReport::to_json() const {
  return {{"merges", merges},
          {"gleam_ledger", gleam_ledger},
          {"fused_junctions", fused_junctions},
          {"errors", errors},
          {"crossing_gleam2_sum", crossing_gleam2_sum}};
}

namespace {

struct Sheet {
  std::string name;
  std::int64_t chi = 1;
  std::int64_t gleam2 = 0;
  std::optional<int> color;
  bool deleted = false;
};

struct PendingVertex {
  std::string id;
  std::array<int, 6> sheets;
};

struct PendingBoundary {
  std::string id;
  std::array<int, 3> sheets;
};

}  // namespace

Compiled compile(const Diagram& d) {
  using detail::Dart;
  using detail::Incidence;
  using detail::UnionFind;

  compute_faces(d);
  const Incidence inc(d);
  int pieces = 0;
  const auto cycles = inc.face_darts(&pieces);
  if (pieces != 1) {
    throw Error(ErrorKind::Compile, "diagram has " + std::to_string(pieces) +
                                        " disjoint pieces; draw it connected (e.g. overlap split components)");
  }
  if (!d.outer_face) throw Error(ErrorKind::Compile, "no outer_face designated");

  const int n_arcs = static_cast<int>(d.arcs.size());
  const int n_faces = static_cast<int>(cycles.size());
  std::vector<int> face_of_dart(static_cast<std::size_t>(2 * n_arcs));
  for (int f = 0; f < n_faces; ++f) {
    for (const Dart& dt : cycles[f]) face_of_dart[Incidence::dart_code(dt)] = f;
  }
  auto face_key_index = [&](const FaceKey& k) {
    auto it = inc.arc_index.find(k.arc);
    if (it == inc.arc_index.end()) throw Error(ErrorKind::Compile, "face key references unknown arc '" + k.arc + "'");
    return face_of_dart[Incidence::dart_code({it->second, k.side})];
  };
  // Face between the end at `pos` and the next end counterclockwise.
  auto corner = [&](int junction, int pos) {
    return face_of_dart[Incidence::dart_code(Incidence::leave(inc.end_code(inc.end_at(junction, pos))))];
  };

  const auto gedges = g_edges(d);
  std::map<std::string, int> gedge_of;
  for (std::size_t g = 0; g < gedges.size(); ++g) {
    for (const auto& a : gedges[g].arcs) gedge_of[a] = static_cast<int>(g);
  }

  Compiled out;
  CompileReport& rep = out.report;

  std::vector<Sheet> sheets;
  for (int f = 0; f < n_faces; ++f) sheets.push_back({"F" + std::to_string(f), 1, 0, std::nullopt, false});
  for (std::size_t g = 0; g < gedges.size(); ++g) {
    sheets.push_back({"B" + std::to_string(g), gedges[g].closed ? 0 : 1, 0, gedges[g].color, false});
  }
  sheets[face_key_index(*d.outer_face)].deleted = true;
  for (const auto& h : d.holes) sheets[face_key_index(h)].deleted = true;
  auto band = [&](int arc) { return n_faces + gedge_of.at(d.arcs[arc]); };

  // Corner gleams: +1/2 on the corner counterclockwise after each over end.
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const Crossing& x = d.crossings[c];
    int total = 0;
    for (int p = 0; p < 4; ++p) {
      const int g2 = (p % 2 == x.over) ? 1 : -1;
      total += g2;
      const int f = corner(static_cast<int>(c), p);
      if (sheets[f].deleted) continue;
      sheets[f].gleam2 += g2;
      rep.gleam_ledger[sheets[f].name].push_back(x.id + (g2 > 0 ? ":+1/2" : ":-1/2"));
    }
    rep.crossing_gleam2_sum[x.id] = total;
  }

  // Sheets along each arc.
  UnionFind regions(static_cast<int>(sheets.size()));
  std::vector<std::int64_t> chi_adjust(sheets.size(), 0);
  std::vector<bool> three_sheet(static_cast<std::size_t>(n_arcs), false);
  for (int a = 0; a < n_arcs; ++a) {
    const int b = band(a);
    const int l = face_of_dart[Incidence::dart_code({a, Side::Left})];
    const int r = face_of_dart[Incidence::dart_code({a, Side::Right})];
    std::vector<int> alive{b};
    if (!sheets[l].deleted) alive.push_back(l);
    if (!sheets[r].deleted) alive.push_back(r);
    if (alive.size() == 3) {
      three_sheet[a] = true;
    } else if (alive.size() == 2) {
      regions.unite(alive[0], alive[1]);
      // An absorbed open arc lowers chi by one; an absorbed circle changes nothing.
      if (!inc.free_loop(a)) chi_adjust[alive[0]] -= 1;
      rep.merges.push_back("arc '" + d.arcs[a] + "': " + sheets[alive[0]].name + " + " + sheets[alive[1]].name);
    } else {
      throw Error(ErrorKind::Compile, "arc '" + d.arcs[a] + "' has deleted faces on both sides");
    }
  }

  // Edge cells: arcs 0..n_arcs-1, then one vertical edge per graph vertex.
  const int n_elems = n_arcs + static_cast<int>(d.vertices.size());
  UnionFind edges(n_elems);
  std::vector<bool> is_edge(static_cast<std::size_t>(n_elems), false);
  std::vector<bool> has_endpoint(static_cast<std::size_t>(n_elems), false);
  for (int a = 0; a < n_arcs; ++a) is_edge[a] = three_sheet[a];
  std::vector<PendingVertex> ivs;
  std::vector<PendingBoundary> bvs;
  std::vector<std::array<int, 3>> t_triples(d.vertices.size());

  for (int j = 0; j < static_cast<int>(inc.junctions.size()); ++j) {
    const int deg = inc.degree(j);
    std::vector<int> cf(static_cast<std::size_t>(deg));
    int n_deleted = 0, deleted_at = -1;
    for (int p = 0; p < deg; ++p) {
      cf[p] = corner(j, p);
      if (sheets[cf[p]].deleted) {
        ++n_deleted;
        deleted_at = p;
      }
    }
    const std::string id = inc.junction_id(j);
    const bool crossing = inc.junctions[j].crossing;
    if (n_deleted >= 2) {
      throw Error(ErrorKind::Compile, std::string(crossing ? "crossing" : "vertex") + " '" + id + "' meets deleted faces at " +
                                          std::to_string(n_deleted) +
                                          " corners; isotope the diagram (a Reidemeister II move pushing a strand "
                                          "across the outer face usually helps) so each junction meets at most one");
    }
    auto arc_at = [&](int p) { return inc.arc_index.at(inc.end_at(j, p % deg).arc); };

    if (crossing) {
      const Crossing& x = d.crossings[inc.junctions[j].index];
      if (n_deleted == 0) {
        const int s = x.over == 0 ? 1 : 0;  // first under end
        const int under = band(arc_at(s)), over = band(arc_at(s + 1));
        ivs.push_back({"x:" + id, {under, cf[(s + 3) % 4], cf[s], over, cf[(s + 1) % 4], cf[(s + 2) % 4]}});
        for (int p = 0; p < 4; ++p) has_endpoint[arc_at(p)] = true;
      } else {
        edges.unite(arc_at(deleted_at + 2), arc_at(deleted_at + 3));
        rep.fused_junctions.push_back("crossing '" + id + "'");
      }
    } else {
      const int v = inc.junctions[j].index;
      const int t = n_arcs + v;
      const std::array<int, 3> bands{band(arc_at(0)), band(arc_at(1)), band(arc_at(2))};
      is_edge[t] = true;
      has_endpoint[t] = true;
      t_triples[v] = bands;
      bvs.push_back({"bv:" + id, bands});
      if (n_deleted == 0) {
        ivs.push_back({"v:" + id, {bands[0], bands[1], bands[2], cf[1], cf[2], cf[0]}});
        for (int p = 0; p < 3; ++p) has_endpoint[arc_at(p)] = true;
      } else {
        edges.unite(arc_at(deleted_at + 2), t);
        rep.fused_junctions.push_back("vertex '" + id + "'");
      }
    }
  }

  // Regions.
  Shadow& s = out.shadow;
  std::map<int, int> region_pos;
  for (int k = 0; k < static_cast<int>(sheets.size()); ++k) {
    if (sheets[k].deleted) continue;
    const int root = regions.find(k);
    auto [it, fresh] = region_pos.emplace(root, static_cast<int>(s.regions.size()));
    if (fresh) {
      s.regions.push_back({sheets[k].name, 0, 0, std::nullopt});
    } else {
      s.regions[it->second].id += "+" + sheets[k].name;
    }
    Region& r = s.regions[it->second];
    r.chi += sheets[k].chi + chi_adjust[k];
    r.gleam2 += sheets[k].gleam2;
    if (!r.color && sheets[k].color) r.color = sheets[k].color;
  }
  auto rid = [&](int sheet) { return s.regions[region_pos.at(regions.find(sheet))].id; };

  for (std::size_t g = 0; g < gedges.size(); ++g) {
    const int b = n_faces + static_cast<int>(g);
    s.boundary_edges.push_back(
        {"g:" + sheets[b].name, gedges[g].closed ? CellKind::Circle : CellKind::Arc, rid(b), gedges[g].color});
  }

  auto triple_of = [&](int elem) {
    std::array<std::string, 3> t;
    if (elem < n_arcs) {
      t = {rid(band(elem)), rid(face_of_dart[Incidence::dart_code({elem, Side::Left})]),
           rid(face_of_dart[Incidence::dart_code({elem, Side::Right})])};
    } else {
      const auto& b = t_triples[elem - n_arcs];
      t = {rid(b[0]), rid(b[1]), rid(b[2])};
    }
    return t;
  };
  std::map<int, int> edge_pos;
  for (int e = 0; e < n_elems; ++e) {
    if (!is_edge[e]) continue;
    const int root = edges.find(e);
    auto [it, fresh] = edge_pos.emplace(root, static_cast<int>(s.interior_edges.size()));
    const auto t = triple_of(e);
    if (fresh) {
      const std::string id = e < n_arcs ? "e:" + d.arcs[e] : "t:" + d.vertices[e - n_arcs].id;
      s.interior_edges.push_back({id, CellKind::Circle, t});
    } else {
      auto a = t, b = s.interior_edges[it->second].regions;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) throw std::logic_error("compile: fused edge pieces carry different region triples");
    }
    if (has_endpoint[e]) s.interior_edges[it->second].kind = CellKind::Arc;
  }
  for (const auto& v : ivs) {
    InteriorVertex iv;
    iv.id = v.id;
    for (int k = 0; k < 6; ++k) iv.slots[k] = rid(v.sheets[k]);
    s.interior_vertices.push_back(std::move(iv));
  }
  for (const auto& b : bvs) s.boundary_vertices.push_back({b.id, {rid(b.sheets[0]), rid(b.sheets[1]), rid(b.sheets[2])}});

  for (int f = 0; f < n_faces; ++f) {
    auto it = rep.gleam_ledger.find(sheets[f].name);
    if (it != rep.gleam_ledger.end()) it->second.push_back("total " + HalfInt{sheets[f].gleam2}.str());
  }

  const auto vr = validate_shadow(s);
  for (const auto& v : vr.violations) rep.errors.push_back(v);
  if (!vr.ok()) throw Error(ErrorKind::Compile, "compiled shadow fails validation: " + vr.violations.front());
  return out;
}

}  // namespace shadowq
