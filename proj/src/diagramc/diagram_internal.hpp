#pragma once

#include <map>
#include <string>
#include <vector>

#include "shadowq/diagram.hpp"

namespace shadowq::detail {

struct UnionFind {
  explicit UnionFind(int n);
  int find(int x);
  bool unite(int a, int b);
  std::vector<int> parent;
};

struct Dart {
  int arc = 0;
  Side side = Side::Left;
};

/// Where each arc end sits. End codes are 2*arc + which_end.
struct Incidence {
  struct Slot {
    int junction = -1;
    int pos = -1;
  };
  struct Junction {
    int index = 0;
    bool crossing = true;
  };

  explicit Incidence(const Diagram& d);

  bool free_loop(int arc) const;
  int degree(int junction) const;
  const ArcEnd& end_at(int junction, int pos) const;
  int end_code(const ArcEnd& e) const;
  std::string junction_id(int junction) const;

  static Dart leave(int end);
  static int dart_code(const Dart& d);
  /// The dart following d around its face.
  Dart next(const Dart& d) const;
  std::vector<std::vector<Dart>> face_darts(int* pieces) const;

  const Diagram* diagram = nullptr;
  std::map<std::string, int> arc_index;
  std::vector<Slot> at;
  std::vector<Junction> junctions;  // crossings first, then vertices
};

}  // namespace shadowq::detail
