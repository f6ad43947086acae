#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "shadowq/shadow.hpp"

namespace shadowq {

/// One end of an arc: which_end 0 is the tail, 1 the head.
struct ArcEnd {
  std::string arc;
  int which_end = 0;

  friend auto operator<=>(const ArcEnd&, const ArcEnd&) = default;
};

/// Ends listed counterclockwise. over = 0 puts ends 0 and 2 on the over
/// strand, over = 1 puts ends 1 and 3 there.
struct Crossing {
  std::string id;
  std::array<ArcEnd, 4> ends;
  int over = 0;
};

struct GraphVertex {
  std::string id;
  std::array<ArcEnd, 3> ends;  // counterclockwise
};

enum class Side { Left, Right };

/// An arc traversed in a given direction has the face on its left or right.
struct FaceKey {
  std::string arc;
  Side side = Side::Left;

  friend auto operator<=>(const FaceKey&, const FaceKey&) = default;
};

struct Diagram {
  std::vector<std::string> arcs;
  std::vector<Crossing> crossings;
  std::vector<GraphVertex> vertices;
  std::optional<FaceKey> outer_face;
  std::vector<FaceKey> holes;
  std::map<std::string, int> colors;  // keyed by any arc of a G-edge
};

/// Faces as cyclic sequences of arc sides, from the rotation system.
struct FaceSet {
  std::vector<std::vector<FaceKey>> faces;
  std::map<FaceKey, int> face_of;
  int pieces = 0;  // connected pieces of the diagram

  int lookup(const FaceKey& k) const;
};

/// Arcs grouped into G-edges: strands continue straight through crossings
/// and stop at graph vertices. A closed G-edge is a link component.
struct GEdge {
  std::vector<std::string> arcs;
  bool closed = false;
  int color = 1;
};

/// Structural checks plus the Euler count. Throws Parse with the offending
/// position on failure.
Diagram parse_diagram(const std::string& text);
Diagram diagram_from_json(const nlohmann::json& j);
nlohmann::json diagram_to_json(const Diagram& d);

/// Throws Parse when traversal does not close or V - E + F != 2 per piece.
FaceSet compute_faces(const Diagram& d);
/// Throws Parse on conflicting or unknown color keys.
std::vector<GEdge> g_edges(const Diagram& d);

struct CompileReport {
  std::vector<std::string> merges;
  /// Per face id: contributions "crossing:+1/2" and the total.
  std::map<std::string, std::vector<std::string>> gleam_ledger;
  std::vector<std::string> fused_junctions;
  std::vector<std::string> errors;
  /// Per crossing, the sum of its four corner contributions (always 0).
  std::map<std::string, int> crossing_gleam2_sum;

  nlohmann::json to_json() const;
};

struct Compiled {
  Shadow shadow;
  CompileReport report;
};

/// Builds the shadow of the diagram in the disc obtained by deleting the
/// outer face and the hole faces. Throws Compile naming the offending cell.
Compiled compile(const Diagram& d);

}  // namespace shadowq
