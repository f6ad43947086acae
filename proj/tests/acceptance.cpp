// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "corpus.hpp"
#include "shadowq/builders.hpp"
#include "shadowq/error.hpp"
#include "shadowq/skein.hpp"
#include "shadowq/statesum.hpp"

using namespace shadowq;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failures, counts the rest.
struct Checker {
  int failures = 0;
  std::ostringstream notes;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (++failures <= 3) notes << (failures > 1 ? "; " : "") << what;
  }
  Outcome done(const std::string& summary) const {
    Outcome o{failures == 0, summary};
    if (failures) o.detail += " | " + std::to_string(failures) + " failure(s): " + notes.str();
    return o;
  }
};

QPoly q_terms(std::initializer_list<std::pair<int, long>> qexp_coeff) {
  std::vector<QPoly::Term> t;
  for (auto [e, c] : qexp_coeff) t.emplace_back(4 * e, GaussInt(c));
  return QPoly::from_terms(std::move(t));
}

// [n] summed term by term: q^(n-1) + q^(n-3) + ... + q^(1-n).
QPoly qint_naive(int n) {
  std::vector<QPoly::Term> t;
  for (int k = 0; k < n; ++k) t.emplace_back(4 * (n - 1 - 2 * k), GaussInt(1));
  return QPoly::from_terms(std::move(t));
}

std::string ord_str(const OrderVal& o) { return o.str(); }

const char* kLinks[] = {"unknot", "kink_pos", "kink_neg", "unlink2", "hopf", "trefoil", "figure8"};

// ---------------------------------------------------------------------------

// Order at q = i by repeated exact division by x^4 - i.
OrderVal ord_by_division(const QRat& f) {
  if (f.is_zero()) return OrderVal::infinity();
  const QPoly fac = QPoly::from_terms({{4, GaussInt(1)}, {0, GaussInt(0, -1)}});
  auto count = [&](QPoly p) {
    std::int64_t n = 0;
    while (auto r = p.exact_div(fac)) {
      p = *r;
      ++n;
    }
    return n;
  };
  return OrderVal(count(f.num()) - count(f.den()));
}

Outcome c1_theta222() {
  Checker ck;
  const QPoly a = q_terms({{3, 1}, {1, 1}, {-1, 1}, {-3, 1}});
  const QPoly b = q_terms({{2, 1}, {0, 1}, {-2, 1}});
  const QPoly d = q_terms({{1, 1}, {-1, 1}});
  const QRat want(-(a * b), d * d);
  const QRat got = theta_eval({2, 2, 2});
  ck.expect(got == want, "value mismatch: " + got.render());
  ck.expect(got.ord_at_i() == OrderVal(-1), "ord " + ord_str(got.ord_at_i()));
  return ck.done("ord_i = " + ord_str(got.ord_at_i()));
}

Outcome c2_tet222222() {
  Checker ck;
  QPoly fact(1);
  for (int k = 1; k <= 4; ++k) fact *= qint_naive(k);
  const QRat want(fact * (qint_naive(5) - QPoly(1)), qint_naive(2).pow(6));
  const QRat got = tet_eval({2, 2, 2, 2, 2, 2});
  ck.expect(got == want, "value mismatch: " + got.render());
  const OrderVal expect = ord_by_division(want);
  ck.expect(got.ord_at_i() == expect, "ord " + ord_str(got.ord_at_i()) + " vs counted " + ord_str(expect));
  ck.expect(expect == OrderVal(-2), "counted order " + ord_str(expect) + " (frozen value -2)");
  return ck.done("ord_i = " + ord_str(got.ord_at_i()) + " (frozen at -2)");
}

Outcome c3_genus_knots() {
  Checker ck;
  const QPoly four = qint_naive(4), two = qint_naive(2);
  for (int g = 1; g <= 6; ++g) {
    const QPoly num = QPoly::monomial((1 - g) % 2 == 0 ? 1 : -1, 6 * g) * four.pow(static_cast<unsigned>(g));
    const QRat want(num, two.pow(static_cast<unsigned>(2 * g - 1)));
    const auto b = bracket(genus_knot_shadow(g, 1), 17);
    const std::string tag = "g=" + std::to_string(g);
    ck.expect(b.value == want, tag + " bracket");
    ck.expect(b.ord_i == OrderVal(1 - g), tag + " ord " + ord_str(b.ord_i));
    if (g >= 2) {
      const auto rep = ribbon_report(b, RibbonTarget{1});
      const std::string line = "ribbon genus ≥ " + std::to_string((g + 1) / 2);
      ck.expect(std::find(rep.lines.begin(), rep.lines.end(), line) != rep.lines.end(), tag + " missing '" + line + "'");
    }
  }
  return ck.done("g = 1..6");
}

Outcome c4_surfaces() {
  Checker ck;
  for (int n : {1, 2, 3, 5}) {
    const QRat circle(n % 2 == 0 ? qint_naive(n + 1) : -qint_naive(n + 1));
    for (int chi = -3; chi <= 0; ++chi) {
      const auto b = bracket(surface_link_shadow(chi, {n}), n + 16);
      const std::string tag = "n=" + std::to_string(n) + " chi=" + std::to_string(chi);
      ck.expect(b.value == circle.pow(chi), tag + " bracket");
      if (n % 2 == 1) ck.expect(b.ord_i == OrderVal(chi), tag + " ord " + ord_str(b.ord_i));
    }
  }
  int zero = 0;
  for (auto cs : {std::vector<int>{1, 3}, std::vector<int>{2, 4}, std::vector<int>{1, 1, 2}}) {
    const auto b = bracket(surface_link_shadow(-1, cs), 20);
    ck.expect(b.value.is_zero() && b.states_evaluated == 0, "mismatched colors give nonzero bracket");
    ++zero;
  }
  return ck.done("16 surfaces, " + std::to_string(zero) + " mismatched-color links vanish");
}

Outcome c5_atomic() {
  Checker ck;
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> col(0, 10);
  int done[3] = {0, 0, 0};
  while (done[0] + done[1] + done[2] < 200) {
    const int kind = (done[0] + done[1] + done[2]) % 3;
    const int n = kind == 0 ? 1 : kind == 1 ? 3 : 6;
    std::vector<int> cs;
    for (int k = 0; k < n; ++k) cs.push_back(col(rng));
    QRat want;
    if (kind == 0) {
      want = QRat(cs[0] % 2 ? -qint_naive(cs[0] + 1) : qint_naive(cs[0] + 1));
    } else if (kind == 1) {
      if (!is_admissible({cs[0], cs[1], cs[2]})) continue;
      want = theta_eval({cs[0], cs[1], cs[2]});
    } else {
      const TetFrame fr{cs[0], cs[1], cs[2], cs[3], cs[4], cs[5]};
      if (!fr.admissible()) continue;
      want = tet_eval(fr);
    }
    const PlanarGraph pg = kind == 0 ? PlanarGraph::Circle : kind == 1 ? PlanarGraph::Theta : PlanarGraph::Tet;
    const Shadow s = atomic_cone(pg, cs);
    bool zero_gleam = true;
    for (const auto& r : s.regions) zero_gleam = zero_gleam && r.gleam2 == 0;
    ck.expect(zero_gleam, "cone has nonzero gleam");
    ck.expect(bracket(s, 26).value == want, "state sum differs from closed form");
    ++done[kind];
  }
  return ck.done(std::to_string(done[0]) + " circles, " + std::to_string(done[1]) + " thetas, " +
                 std::to_string(done[2]) + " tetrahedra");
}

Outcome c6_order_laws() {
  Checker ck;
  for (int n = 0; n <= 40; ++n) {
    ck.expect(ord_qint_closed(n) == ord_by_division(QRat(qint_naive(n))), "[" + std::to_string(n) + "]");
    QPoly fact(1);
    for (int k = 1; k <= n; ++k) fact *= qint_naive(k);
    ck.expect(ord_factorial_closed(n) == ord_by_division(QRat(fact)), "[" + std::to_string(n) + "]!");
  }
  std::mt19937 rng(606);
  std::uniform_int_distribution<int> len(1, 5), val(0, 9);
  for (int k = 0; k < 100; ++k) {
    MultinomialSpec s;
    int total = 0;
    for (int j = len(rng); j > 0; --j) {
      s.tops.push_back(val(rng));
      total += s.tops.back();
    }
    const int parts = len(rng);
    s.bottoms.assign(static_cast<std::size_t>(parts), 0);
    std::uniform_int_distribution<int> pick(0, parts - 1);
    for (int j = 0; j < total; ++j) ++s.bottoms[static_cast<std::size_t>(pick(rng))];
    QPoly num(1), den(1);
    for (int t : s.tops) {
      for (int j = 1; j <= t; ++j) num *= qint_naive(j);
    }
    for (int b : s.bottoms) {
      for (int j = 1; j <= b; ++j) den *= qint_naive(j);
    }
    ck.expect(ord_multinomial_closed(s) == ord_by_division(QRat(num, den)), "multinomial");
  }
  return ck.done("n <= 40 and 100 random multinomials");
}

template <class F>
int parallel_count(std::size_t n, F&& item_fails) {
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<int>> fs;
  for (unsigned w = 0; w < workers; ++w) {
    fs.push_back(std::async(std::launch::async, [&, w] {
      int bad = 0;
      for (std::size_t k = w; k < n; k += workers) bad += item_fails(k) ? 1 : 0;
      return bad;
    }));
  }
  int bad = 0;
  for (auto& f : fs) bad += f.get();
  return bad;
}

Outcome c7_graph_orders() {
  Checker ck;
  std::vector<std::array<int, 3>> thetas;
  for (int a = 0; a <= 20; ++a) {
    for (int b = 0; b <= 20; ++b) {
      for (int c = 0; c <= 20; ++c) {
        if (is_admissible({a, b, c})) thetas.push_back({a, b, c});
      }
    }
  }
  const int theta_bad = parallel_count(thetas.size(), [&](std::size_t k) {
    const auto r = order_bound_check(PlanarGraph::Theta, thetas[k]);
    return !(r.equality_expected && !r.ord.is_infinite() && r.ord.value() * 2 == r.bound.twice);
  });
  ck.expect(theta_bad == 0, std::to_string(theta_bad) + " theta triples miss equality");

  std::vector<TetFrame> frames;
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b)
      for (int c = 0; c <= 8; ++c)
        for (int d = 0; d <= 8; ++d)
          for (int e = 0; e <= 8; ++e)
            for (int f = 0; f <= 8; ++f) {
              const TetFrame fr{a, b, c, d, e, f};
              if (fr.admissible()) frames.push_back(fr);
            }
  const int tet_bad = parallel_count(frames.size(), [&](std::size_t k) {
    const TetFrame& fr = frames[k];
    const int cs[] = {fr.a, fr.b, fr.c, fr.d, fr.e, fr.f};
    const OrderVal o = tet_eval(fr).ord_at_i();
    const auto r = order_bound_check(PlanarGraph::Tet, cs);
    return !(r.ord == o && order_at_least(o, r.bound));
  });
  ck.expect(tet_bad == 0, std::to_string(tet_bad) + " tetrahedra violate the bound");
  return ck.done(std::to_string(thetas.size()) + " theta triples (equality), " + std::to_string(frames.size()) +
                 " tet frames (bound)");
}

Outcome c8_odd_products() {
  Checker ck;
  std::mt19937 rng(411);
  std::uniform_int_distribution<int> len(1, 4), half(0, 6);
  int sat = 0, vio = 0;
  std::map<std::string, int> vio_orders;
  while (sat < 100 || vio < 20) {
    std::vector<int> xs, ys;
    for (int k = len(rng); k > 0; --k) xs.push_back(2 * half(rng) + 1);
    for (int k = len(rng); k > 0; --k) ys.push_back(2 * half(rng) + 1);
    int sx = 0, sy = 0;
    for (int x : xs) sx += x - 1;
    for (int y : ys) sy += y - 1;
    const bool hyp = (sx - sy) % 4 == 0;
    if ((hyp && sat >= 100) || (!hyp && vio >= 20)) continue;
    QPoly px(1), py(1);
    for (int x : xs) px *= qint_naive(x);
    for (int y : ys) py *= qint_naive(y);
    const OrderVal o = QRat(px - py).ord_at_i();
    if (hyp) {
      ck.expect(o.is_infinite() || o.value() >= 2, "ord " + ord_str(o) + " < 2");
      ++sat;
    } else {
      ++vio_orders[ord_str(o)];
      ++vio;
    }
  }
  std::string hist;
  for (const auto& [o, n] : vio_orders) hist += (hist.empty() ? "" : ", ") + std::to_string(n) + "x ord " + o;
  return ck.done("100 congruent instances have ord >= 2; 20 non-congruent (not asserted): " + hist);
}

std::vector<std::pair<std::string, Shadow>> shadow_corpus() {
  std::vector<std::pair<std::string, Shadow>> out;
  for (int g = 1; g <= 4; ++g) {
    for (int c : {1, 2, 3}) out.emplace_back("genus knot g=" + std::to_string(g) + " c=" + std::to_string(c), genus_knot_shadow(g, c));
  }
  for (int chi = -3; chi <= 1; ++chi) {
    for (int n : {1, 2, 3, 5}) out.emplace_back("surface chi=" + std::to_string(chi), surface_link_shadow(chi, {n}));
    out.emplace_back("surface2 chi=" + std::to_string(chi), surface_link_shadow(chi, {1, 1}));
  }
  const int th[] = {2, 2, 2}, th2[] = {3, 4, 5}, c1[] = {1}, c4[] = {4}, tt[] = {2, 2, 2, 2, 2, 2},
            tt2[] = {1, 1, 2, 1, 1, 2}, tt3[] = {3, 3, 2, 3, 3, 4};
  out.emplace_back("theta 222", atomic_cone(PlanarGraph::Theta, th));
  out.emplace_back("theta 345", atomic_cone(PlanarGraph::Theta, th2));
  out.emplace_back("circle 1", atomic_cone(PlanarGraph::Circle, c1));
  out.emplace_back("circle 4", atomic_cone(PlanarGraph::Circle, c4));
  out.emplace_back("tet 222222", atomic_cone(PlanarGraph::Tet, tt));
  out.emplace_back("tet 112112", atomic_cone(PlanarGraph::Tet, tt2));
  out.emplace_back("tet 332334", atomic_cone(PlanarGraph::Tet, tt3));
  for (const char* name : {"unknot", "kink_pos", "kink_neg", "unlink2", "hopf", "trefoil", "figure8", "theta",
                           "tetrahedron"}) {
    Diagram d = load_diagram(name);
    out.emplace_back(std::string("diagram ") + name, compile(d).shadow);
    if (d.vertices.empty()) {
      for (auto& a : d.arcs) d.colors[a] = 2;
      out.emplace_back(std::string("diagram ") + name + " c=2", compile(d).shadow);
    }
  }
  return out;
}

Outcome c9_state_audit() {
  Checker ck;
  std::size_t states = 0;
  std::optional<std::int64_t> min_slack2;
  std::string where;
  for (const auto& [name, s] : shadow_corpus()) {
    const Enumeration en = enumerate_colorings(s, s.max_fixed_color() + 16);
    ck.expect(en.complete, name + " incomplete");
    for (const auto& c : en.colorings) {
      const StateBound sb = verify_state_bound(s, c);
      ++states;
      ck.expect(sb.holds, name + " violates ord >= chi - r/2");
      if (!sb.ord.is_infinite()) {
        const std::int64_t slack2 = 2 * sb.ord.value() - sb.bound.twice;
        if (!min_slack2 || slack2 < *min_slack2) {
          min_slack2 = slack2;
          where = name;
        }
      }
    }
  }
  return ck.done(std::to_string(states) + " states, min slack " +
                 (min_slack2 ? HalfInt{*min_slack2}.str() + " (" + where + ")" : std::string("+inf")));
}

Outcome c10_oracle() {
  Checker ck;
  const QRat flat = bracket(compile(load_diagram("unknot")).shadow, 17).value;
  for (const char* name : kLinks) {
    const Diagram d = load_diagram(name);
    const Shadow s = compile(d).shadow;
    const auto b = bracket(s, 17);
    const QRat sk(kauffman_bracket(d));
    ck.expect(b.value == sk, std::string(name) + " differs from skein");
    const auto comps = static_cast<std::int64_t>(g_edges(d).size());
    ck.expect(b.ord_i >= OrderVal(1) && b.ord_i <= OrderVal(comps), std::string(name) + " outside 1..#components");
  }
  for (auto [name, sign] : {std::pair{"kink_pos", 1}, std::pair{"kink_neg", -1}}) {
    const QRat k = bracket(compile(load_diagram(name)).shadow, 17).value;
    ck.expect(k == flat * QRat(QPoly::monomial(-1, 6 * sign)), std::string(name) + " ratio is not -A^(+-3)");
    ck.expect(k.ord_at_i() == flat.ord_at_i(), std::string(name) + " changes ord");
  }
  return ck.done("7 diagrams match the skein oracle; kinks give -A^(+-3)");
}

Outcome c11_odd_links() {
  Checker ck;
  int checked = 0;
  auto check = [&](const std::string& name, const OrderVal& o) {
    ck.expect(o >= OrderVal(1), name + " has ord " + ord_str(o));
    ++checked;
  };
  for (int n = 1; n <= 9; n += 2) {
    const int c[] = {n};
    check("circle cone " + std::to_string(n), bracket(atomic_cone(PlanarGraph::Circle, c), n + 16).ord_i);
    check("disc " + std::to_string(n), bracket(surface_link_shadow(1, {n}), n + 16).ord_i);
  }
  for (const char* name : kLinks) {
    Diagram d = load_diagram(name);
    check(std::string("skein ") + name, QRat(kauffman_bracket(d)).ord_at_i());
    for (int n : {1, 3}) {
      for (auto& a : d.arcs) d.colors[a] = n;
      check(std::string(name) + " c=" + std::to_string(n), bracket(compile(d).shadow, n + 16).ord_i);
    }
  }
  return ck.done(std::to_string(checked) + " odd-colored links vanish at q = i");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"theta(2,2,2) closed form and order", c1_theta222},
      {"tet(2,2,2,2,2,2) closed form and order", c2_tet222222},
      {"genus knot family brackets, orders and genus bounds", c3_genus_knots},
      {"surface link brackets and orders", c4_surfaces},
      {"atomic cones equal planar graph evaluations", c5_atomic},
      {"closed-form orders equal division counting", c6_order_laws},
      {"theta equality and tetrahedron bound sweeps", c7_graph_orders},
      {"odd quantum product differences vanish twice", c8_odd_products},
      {"per-state order audit over the corpus", c9_state_audit},
      {"compiled diagrams match the skein oracle", c10_oracle},
      {"odd-colored links vanish at q = i", c11_odd_links},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s  %2zu  %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
