#include "shadowq/builders.hpp"

#include <string>

#include "shadowq/error.hpp"

namespace shadowq {

namespace {

void add_disc(Shadow& s, const std::string& id, int color) {
  s.regions.push_back({id, 1, 0, color});
  s.boundary_edges.push_back({"g" + id, CellKind::Arc, id, color});
}

}  // namespace

Shadow atomic_cone(PlanarGraph kind, std::span<const int> colors) {
  Shadow s;
  switch (kind) {
    case PlanarGraph::Circle: {
      if (colors.size() != 1) throw Error(ErrorKind::Domain, "circle cone takes 1 color");
      if (colors[0] < 0) throw Error(ErrorKind::Domain, "negative color");
      s.regions.push_back({"a", 1, 0, colors[0]});
      s.boundary_edges.push_back({"ga", CellKind::Circle, "a", colors[0]});
      return s;
    }
    case PlanarGraph::Theta: {
      if (colors.size() != 3) throw Error(ErrorKind::Domain, "theta cone takes 3 colors");
      if (!is_admissible({colors[0], colors[1], colors[2]})) {
        throw Error(ErrorKind::Inadmissible, "theta cone colors are not admissible");
      }
      const std::array<std::string, 3> ids{"a", "b", "c"};
      for (int k = 0; k < 3; ++k) add_disc(s, ids[k], colors[k]);
      s.interior_edges.push_back({"axis", CellKind::Arc, ids});
      s.boundary_vertices.push_back({"top", ids});
      s.boundary_vertices.push_back({"bottom", ids});
      return s;
    }
    case PlanarGraph::Tet: {
      if (colors.size() != 6) throw Error(ErrorKind::Domain, "tetrahedron cone takes 6 colors");
      const TetFrame fr{colors[0], colors[1], colors[2], colors[3], colors[4], colors[5]};
      if (!fr.admissible()) throw Error(ErrorKind::Inadmissible, "tetrahedron cone colors are not admissible");
      const std::array<std::string, 6> ids{"a", "b", "c", "d", "e", "f"};
      for (int k = 0; k < 6; ++k) add_disc(s, ids[k], colors[k]);
      const std::array<std::array<std::string, 3>, 4> germs{
          {{"a", "b", "c"}, {"a", "e", "f"}, {"d", "b", "f"}, {"d", "e", "c"}}};
      for (int k = 0; k < 4; ++k) {
        const std::string name = germs[k][0] + germs[k][1] + germs[k][2];
        s.interior_edges.push_back({"e" + name, CellKind::Arc, germs[k]});
        s.boundary_vertices.push_back({"v" + name, germs[k]});
      }
      s.interior_vertices.push_back({"apex", ids});
      return s;
    }
  }
  throw Error(ErrorKind::Domain, "unknown planar graph");
}

Shadow genus_knot_shadow(int g, int boundary_color) {
  if (g < 1) throw Error(ErrorKind::Domain, "genus_knot_shadow needs g >= 1");
  if (boundary_color < 0) throw Error(ErrorKind::Domain, "negative color");
  Shadow s;
  s.regions.push_back({"R", 1 - 2 * static_cast<std::int64_t>(g), 2 * static_cast<std::int64_t>(g), boundary_color});
  for (int k = 1; k <= g; ++k) {
    const std::string d = "D" + std::to_string(k);
    s.regions.push_back({d, 1, -2, std::nullopt});
    s.interior_edges.push_back({"c" + std::to_string(k), CellKind::Circle, {d, "R", "R"}});
  }
  s.boundary_edges.push_back({"K", CellKind::Circle, "R", boundary_color});
  return s;
}

Shadow surface_link_shadow(std::int64_t chi, const std::vector<int>& colors) {
  if (chi > 1) throw Error(ErrorKind::Domain, "surface_link_shadow needs chi <= 1");
  if (colors.empty()) throw Error(ErrorKind::Domain, "surface_link_shadow needs at least one boundary circle");
  Shadow s;
  s.regions.push_back({"S", chi, 0, colors.front()});
  for (std::size_t k = 0; k < colors.size(); ++k) {
    if (colors[k] < 0) throw Error(ErrorKind::Domain, "negative color");
    s.boundary_edges.push_back({"L" + std::to_string(k + 1), CellKind::Circle, "S", colors[k]});
  }
  return s;
}

}  // namespace shadowq
