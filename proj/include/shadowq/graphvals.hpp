#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "shadowq/qcombinat.hpp"
#include "shadowq/qrat.hpp"

namespace shadowq {

/// A half-integer stored as twice its value.
struct HalfInt {
  std::int64_t twice = 0;

  static HalfInt from_int(std::int64_t v) { return {2 * v}; }
  friend auto operator<=>(const HalfInt&, const HalfInt&) = default;
  std::string str() const;
};

/// True when ord >= bound; +inf dominates every bound.
bool order_at_least(const OrderVal& ord, HalfInt bound);

struct ColorTriple {
  int a = 0;
  int b = 0;
  int c = 0;
};

/// Triangle inequalities and even sum.
bool is_admissible(const ColorTriple& t);
/// At least two of (a+b-c)/2, (b+c-a)/2, (c+a-b)/2 odd. Throws Inadmissible.
bool is_red(const ColorTriple& t);

/// Colors of the tetrahedral graph. Opposite edge pairs are (a,d), (b,e), (c,f);
/// the vertex triples are (a,b,c), (a,e,f), (d,b,f), (d,e,c).
struct TetFrame {
  int a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;

  std::array<ColorTriple, 4> vertex_triples() const {
    return {ColorTriple{a, b, c}, ColorTriple{a, e, f}, ColorTriple{d, b, f}, ColorTriple{d, e, c}};
  }
  std::array<int, 4> triangles() const {
    return {(a + b + c) / 2, (a + e + f) / 2, (d + b + f) / 2, (d + e + c) / 2};
  }
  std::array<int, 3> squares() const {
    return {(a + b + d + e) / 2, (a + c + d + f) / 2, (b + c + e + f) / 2};
  }
  bool admissible() const;
};

/// Unknot colored a: (-1)^a [a+1].
QRat circle_eval(int a);
/// Theta graph colored (a,b,c). Throws Inadmissible.
QRat theta_eval(const ColorTriple& t);
QIntProduct theta_product(const ColorTriple& t);
/// Tetrahedral graph. Throws Inadmissible if any vertex triple fails.
QRat tet_eval(const TetFrame& fr);

enum class PlanarGraph { Circle, Theta, Tet };

struct OrderBoundCheck {
  OrderVal ord;
  HalfInt bound;  // |L| - r/2
  bool equality_expected = false;
  bool holds = false;
};

/// Compares the order at q = i of a planar graph evaluation with |L| - r/2.
/// `colors` has 1, 3 or 6 entries according to `kind`.
OrderBoundCheck order_bound_check(PlanarGraph kind, std::span<const int> colors);

}  // namespace shadowq
