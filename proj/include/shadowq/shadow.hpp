#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

namespace shadowq {

/// Open arcs have Euler characteristic 1, circles 0.
enum class CellKind { Arc, Circle };

inline int cell_chi(CellKind k) { return k == CellKind::Arc ? 1 : 0; }
const char* to_string(CellKind k);

struct Region {
  std::string id;
  std::int64_t chi = 1;
  std::int64_t gleam2 = 0;  // twice the gleam
  std::optional<int> color;
};

struct InteriorEdge {
  std::string id;
  CellKind kind = CellKind::Arc;
  std::array<std::string, 3> regions;
};

/// Slots a..f; the four germ triples are (a,b,c), (a,e,f), (d,b,f), (d,e,c).
struct InteriorVertex {
  std::string id;
  std::array<std::string, 6> slots;
};

struct BoundaryVertex {
  std::string id;
  std::array<std::string, 3> regions;
};

struct BoundaryEdge {
  std::string id;
  CellKind kind = CellKind::Circle;
  std::string region;
  int color = 0;
};

struct Shadow {
  std::vector<Region> regions;
  std::vector<InteriorEdge> interior_edges;
  std::vector<InteriorVertex> interior_vertices;
  std::vector<BoundaryVertex> boundary_vertices;
  std::vector<BoundaryEdge> boundary_edges;

  /// Position of a region id, or -1.
  int region_index(const std::string& id) const;
  int max_fixed_color() const;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Lists every structural problem; an empty report means the shadow is usable.
///
/// A region carrying boundary edges of several different colors is accepted
/// here; such a region simply admits no coloring.
ValidationReport validate_shadow(const Shadow& s);

/// Throws Parse on malformed input or unknown keys.
Shadow shadow_from_json(const nlohmann::json& j);
nlohmann::json shadow_to_json(const Shadow& s);

/// Ids in input files may be strings or integers.
std::string json_id(const nlohmann::json& v, const std::string& where);

}  // namespace shadowq
