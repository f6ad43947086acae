// Circle, theta and tetrahedron evaluations.

#include <random>

#include "doctest.h"
#include "shadowq/error.hpp"
#include "shadowq/graphvals.hpp"

using namespace shadowq;

namespace {

QPoly q_terms(std::initializer_list<std::pair<int, long>> qexp_coeff) {
  std::vector<QPoly::Term> t;
  for (auto [e, c] : qexp_coeff) t.emplace_back(4 * e, GaussInt(c));
  return QPoly::from_terms(std::move(t));
}

// The tetrahedron formula summed term by term in QRat, without the common
// denominator used by tet_eval.
QRat tet_naive(const TetFrame& fr) {
  const auto tri = fr.triangles();
  const auto sq = fr.squares();
  MultinomialSpec pre;
  for (int s : sq) {
    for (int t : tri) pre.tops.push_back(s - t);
  }
  pre.bottoms = {fr.a, fr.b, fr.c, fr.d, fr.e, fr.f};
  QRat sum;
  const int zmin = *std::max_element(tri.begin(), tri.end());
  const int zmax = *std::min_element(sq.begin(), sq.end());
  for (int z = zmin; z <= zmax; ++z) {
    MultinomialSpec m{{z + 1}, {}};
    for (int t : tri) m.bottoms.push_back(z - t);
    for (int s : sq) m.bottoms.push_back(s - z);
    m.bottoms.push_back(1);
    QRat term = quantum_multinomial(m);
    sum += z % 2 == 0 ? term : -term;
  }
  return quantum_multinomial(pre) * sum;
}

std::vector<TetFrame> admissible_frames(int max_color) {
  std::vector<TetFrame> out;
  for (int a = 0; a <= max_color; ++a)
    for (int b = 0; b <= max_color; ++b)
      for (int c = 0; c <= max_color; ++c) {
        if (!is_admissible({a, b, c})) continue;
        for (int d = 0; d <= max_color; ++d)
          for (int e = 0; e <= max_color; ++e) {
            if (!is_admissible({d, e, c})) continue;
            for (int f = 0; f <= max_color; ++f) {
              const TetFrame fr{a, b, c, d, e, f};
              if (fr.admissible()) out.push_back(fr);
            }
          }
      }
  return out;
}

}  // namespace

TEST_CASE("admissibility and redness") {
  CHECK(is_admissible({1, 1, 0}));
  CHECK_FALSE(is_admissible({1, 1, 1}));
  CHECK(is_admissible({2, 2, 2}));
  CHECK_FALSE(is_admissible({1, 4, 1}));
  CHECK(is_red({2, 2, 2}));
  CHECK_FALSE(is_red({1, 1, 0}));
  CHECK_FALSE(is_red({0, 0, 0}));
  CHECK_THROWS_AS(is_red({1, 1, 1}), Error);
}

TEST_CASE("circle_eval examples") {
  CHECK(circle_eval(0) == QRat(1));
  CHECK(circle_eval(1) == QRat(-quantum_int(2)));
  CHECK(circle_eval(2) == QRat(q_terms({{2, 1}, {0, 1}, {-2, 1}})));
}

TEST_CASE("theta_eval examples") {
  CHECK(theta_eval({0, 0, 0}) == QRat(1));
  const QPoly a = q_terms({{3, 1}, {1, 1}, {-1, 1}, {-3, 1}});
  const QPoly b = q_terms({{2, 1}, {0, 1}, {-2, 1}});
  const QPoly c = q_terms({{1, 1}, {-1, 1}});
  CHECK(theta_eval({2, 2, 2}) == QRat(-(a * b), c * c));
  CHECK(theta_eval({1, 1, 0}) == QRat(-quantum_int(2)));
  CHECK(theta_eval({1, 1, 0}) == circle_eval(1));
  CHECK_THROWS_AS(theta_eval({1, 1, 1}), Error);
  for (int n = 0; n <= 20; ++n) CHECK(theta_eval({n, n, 0}) == circle_eval(n));
}

TEST_CASE("tet_eval examples") {
  CHECK(tet_eval({0, 0, 0, 0, 0, 0}) == QRat(1));
  const QRat all2 = tet_eval({2, 2, 2, 2, 2, 2});
  CHECK(all2 == QRat(quantum_factorial(4) * (quantum_int(5) - QPoly(1)), quantum_int(2).pow(6)));
  // Exact division counting: [4]! has order 2, [5]-1 = [2]([4]-[2]) order 2, [2]^6 order 6.
  CHECK(all2.ord_at_i() == OrderVal(-2));
  CHECK_THROWS_AS(tet_eval({1, 1, 1, 0, 0, 0}), Error);
}

TEST_CASE("tet_eval matches the term-by-term sum") {
  std::mt19937 rng(31);
  auto frames = admissible_frames(5);
  std::shuffle(frames.begin(), frames.end(), rng);
  for (std::size_t k = 0; k < 60 && k < frames.size(); ++k) {
    CHECK(tet_eval(frames[k]) == tet_naive(frames[k]));
  }
}

TEST_CASE("tetrahedral symmetries") {
  std::mt19937 rng(37);
  auto frames = admissible_frames(6);
  std::shuffle(frames.begin(), frames.end(), rng);
  for (std::size_t k = 0; k < 40; ++k) {
    const auto [a, b, c, d, e, f] = frames[k];
    const QRat v = tet_eval(frames[k]);
    CHECK(tet_eval({d, e, c, a, b, f}) == v);
    CHECK(tet_eval({d, b, f, a, e, c}) == v);
    CHECK(tet_eval({a, c, b, d, f, e}) == v);
    CHECK(tet_eval({b, c, a, e, f, d}) == v);
  }
}

TEST_CASE("order_bound_check examples") {
  const int t222[] = {2, 2, 2};
  auto r = order_bound_check(PlanarGraph::Theta, t222);
  CHECK(r.ord == OrderVal(-1));
  CHECK(r.bound.twice == -2);
  CHECK(r.holds);
  CHECK(r.equality_expected);

  const int c1[] = {1};
  r = order_bound_check(PlanarGraph::Circle, c1);
  CHECK(r.ord == OrderVal(1));
  CHECK(r.bound.twice == 2);

  const int all2[] = {2, 2, 2, 2, 2, 2};
  r = order_bound_check(PlanarGraph::Tet, all2);
  CHECK(r.ord == OrderVal(-2));
  CHECK(r.bound.twice == -4);
  CHECK(r.holds);
  CHECK_FALSE(r.equality_expected);
}

TEST_CASE("theta orders equal |L| - r/2 for small triples") {
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b)
      for (int c = 0; c <= 8; ++c) {
        if (!is_admissible({a, b, c})) continue;
        const int cols[] = {a, b, c};
        const auto r = order_bound_check(PlanarGraph::Theta, cols);
        CHECK(2 * r.ord.value() == r.bound.twice);
      }
}
