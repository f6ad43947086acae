#include "shadowq/graphvals.hpp"

#include <algorithm>
#include <sstream>

#include "shadowq/error.hpp"

namespace shadowq {

namespace {

std::string triple_str(const ColorTriple& t) {
  std::ostringstream os;
  os << '(' << t.a << ',' << t.b << ',' << t.c << ')';
  return os.str();
}

void require_admissible(const ColorTriple& t) {
  if (!is_admissible(t)) throw Error(ErrorKind::Inadmissible, "inadmissible triple " + triple_str(t));
}

}  // namespace

std::string HalfInt::str() const {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

bool order_at_least(const OrderVal& ord, HalfInt bound) {
  return ord.is_infinite() || 2 * ord.value() >= bound.twice;
}

bool is_admissible(const ColorTriple& t) {
  const auto [a, b, c] = t;
  if (a < 0 || b < 0 || c < 0) return false;
  if ((a + b + c) % 2 != 0) return false;
  return std::abs(a - b) <= c && c <= a + b;
}

bool is_red(const ColorTriple& t) {
  require_admissible(t);
  const int halves[3] = {(t.a + t.b - t.c) / 2, (t.b + t.c - t.a) / 2, (t.c + t.a - t.b) / 2};
  return std::count_if(std::begin(halves), std::end(halves), [](int h) { return h % 2 != 0; }) >= 2;
}

bool TetFrame::admissible() const {
  const auto triples = vertex_triples();
  return std::all_of(triples.begin(), triples.end(), [](const ColorTriple& t) { return is_admissible(t); });
}

QRat circle_eval(int a) {
  if (a < 0) throw Error(ErrorKind::Domain, "negative color");
  QPoly v = quantum_int(a + 1);
  return a % 2 == 0 ? QRat(std::move(v)) : QRat(-v);
}

QIntProduct theta_product(const ColorTriple& t) {
  require_admissible(t);
  const int s = (t.a + t.b + t.c) / 2;
  QIntProduct p = multinomial_product(
      {{s + 1, (t.a + t.b - t.c) / 2, (t.b + t.c - t.a) / 2, (t.c + t.a - t.b) / 2}, {t.a, t.b, t.c, 1}});
  if (s % 2 != 0) p.negate();
  return p;
}

QRat theta_eval(const ColorTriple& t) { return theta_product(t).value(); }

QRat tet_eval(const TetFrame& fr) {
  for (const auto& t : fr.vertex_triples()) require_admissible(t);
  const auto tri = fr.triangles();
  const auto sq = fr.squares();
  const int zmin = *std::max_element(tri.begin(), tri.end());
  const int zmax = *std::min_element(sq.begin(), sq.end());
  if (zmin > zmax) {
    throw std::logic_error("tet_eval: empty z-range for an admissible frame");
  }

  // Prefactor [sq_i - tri_j ; a..f], then divide by the common denominator
  // prod_j [zmax - tri_j]! prod_i [sq_i - zmin]! of the z-sum.
  QIntProduct scale;
  for (int s : sq) {
    for (int t : tri) scale.mul_factorial(s - t, 1);
  }
  for (int color : {fr.a, fr.b, fr.c, fr.d, fr.e, fr.f}) scale.mul_factorial(color, -1);
  for (int t : tri) scale.mul_factorial(zmax - t, -1);
  for (int s : sq) scale.mul_factorial(s - zmin, -1);

  // Each z term over the common denominator is a product of quantum integers.
  QPoly sum;
  for (int z = zmin; z <= zmax; ++z) {
    QIntProduct term;
    term.mul_factorial(z + 1, 1);
    for (int t : tri) {
      for (int k = z - t + 1; k <= zmax - t; ++k) term.mul_qint(k, 1);
    }
    for (int s : sq) {
      for (int k = s - z + 1; k <= s - zmin; ++k) term.mul_qint(k, 1);
    }
    if (z % 2 != 0) term.negate();
    sum += term.numerator();
  }
  return QRat(sum * scale.numerator(), scale.denominator());
}

OrderBoundCheck order_bound_check(PlanarGraph kind, std::span<const int> colors) {
  const std::size_t want = kind == PlanarGraph::Circle ? 1 : kind == PlanarGraph::Theta ? 3 : 6;
  if (colors.size() != want) {
    throw Error(ErrorKind::Domain, "order_bound_check expects " + std::to_string(want) + " colors");
  }
  OrderBoundCheck r;
  const bool any_odd = std::any_of(colors.begin(), colors.end(), [](int c) { return c % 2 != 0; });
  const std::int64_t odd_link = any_odd ? 1 : 0;
  std::int64_t red = 0;
  QRat value;
  switch (kind) {
    case PlanarGraph::Circle:
      value = circle_eval(colors[0]);
      break;
    case PlanarGraph::Theta: {
      const ColorTriple t{colors[0], colors[1], colors[2]};
      value = theta_eval(t);
      red = is_red(t) ? 2 : 0;
      break;
    }
    case PlanarGraph::Tet: {
      const TetFrame fr{colors[0], colors[1], colors[2], colors[3], colors[4], colors[5]};
      value = tet_eval(fr);
      for (const auto& t : fr.vertex_triples()) red += is_red(t) ? 1 : 0;
      break;
    }
  }
  r.ord = value.ord_at_i();
  r.bound = HalfInt{2 * odd_link - red};
  r.equality_expected = kind != PlanarGraph::Tet;
  r.holds = order_at_least(r.ord, r.bound);
  return r;
}

}  // namespace shadowq
