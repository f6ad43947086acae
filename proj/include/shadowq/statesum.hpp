#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shadowq/graphvals.hpp"
#include "shadowq/qrat.hpp"
#include "shadowq/shadow.hpp"

namespace shadowq {

/// Colors indexed like Shadow::regions.
struct Coloring {
  std::vector<int> colors;

  friend auto operator<=>(const Coloring&, const Coloring&) = default;
};

struct Enumeration {
  std::vector<Coloring> colorings;  // sorted
  /// Heuristic: no coloring reaches cap-1 or cap, and every region is tied
  /// to a fixed color. Not a proof of completeness.
  bool complete = false;
  int cap = 0;
};

/// All admissible colorings with colors <= cap.
/// Throws Validation for malformed shadows, Domain when cap is below a fixed
/// color, Unbounded when some region is not tied to any fixed color.
Enumeration enumerate_colorings(const Shadow& s, int cap);

/// Throws Inadmissible if some interior edge triple fails.
QRat state_value(const Shadow& s, const Coloring& c);

struct BracketResult {
  QRat value;
  OrderVal ord_i;
  std::size_t states_evaluated = 0;
  bool complete = false;
  int cap_used = 0;
};

/// Sum of the state values. States may be evaluated on `threads` workers;
/// the sum is always taken in sorted coloring order.
BracketResult bracket(const Shadow& s, int cap, unsigned threads = 1);
/// Same, over an enumeration that was already computed. When `values` is
/// given it receives the individual state values in enumeration order.
BracketResult bracket(const Shadow& s, const Enumeration& e, unsigned threads = 1,
                      std::vector<QRat>* values = nullptr);

/// The cells of the odd surface S_sigma, by id.
struct OddSurface {
  std::vector<std::string> regions;
  std::vector<std::string> interior_edges;
  std::vector<std::string> boundary_edges;
  std::vector<std::string> interior_vertices;
  std::vector<std::string> boundary_vertices;
  std::int64_t euler_char = 0;
};

OddSurface odd_surface(const Shadow& s, const Coloring& c);

struct StateBound {
  OrderVal ord;
  std::int64_t chi = 0;
  int red_boundary = 0;
  HalfInt bound;  // chi - red/2
  bool holds = false;
};

StateBound verify_state_bound(const Shadow& s, const Coloring& c);
/// Reuses a precomputed state value.
StateBound verify_state_bound(const Shadow& s, const Coloring& c, const QRat& value);

struct RibbonTarget {
  int components = 1;
  bool is_knot() const { return components == 1; }
};

struct RibbonBoundReport {
  OrderVal ord;
  int components = 1;
  bool informative = false;
  bool not_ribbon = false;
  /// Knots only: lower bound on the ribbon genus.
  std::optional<std::int64_t> genus_lower_bound;
  std::vector<std::string> lines;
};

/// Throws Incomplete when the bracket's enumeration certificate failed.
RibbonBoundReport ribbon_report(const BracketResult& b, RibbonTarget target);

}  // namespace shadowq
