#include "shadowq/statesum.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "shadowq/error.hpp"

namespace shadowq {

namespace {

struct Indexed {
  std::vector<std::int64_t> chi, gleam2;
  std::vector<int> fixed;  // -1 when free
  bool conflict = false;   // some region has two different boundary colors
  std::vector<std::array<int, 3>> edges;
  std::vector<int> edge_chi;
  std::vector<std::array<int, 6>> verts;
  std::vector<std::array<int, 3>> bverts;
  std::vector<std::pair<int, int>> bedges;  // region, chi
};

Indexed index_shadow(const Shadow& s) {
  const ValidationReport rep = validate_shadow(s);
  if (!rep.ok()) {
    std::string msg = "invalid shadow:";
    for (const auto& v : rep.violations) msg += "\n  " + v;
    throw Error(ErrorKind::Validation, msg);
  }
  std::map<std::string, int> idx;
  for (std::size_t k = 0; k < s.regions.size(); ++k) idx[s.regions[k].id] = static_cast<int>(k);

  Indexed ix;
  for (const auto& r : s.regions) {
    ix.chi.push_back(r.chi);
    ix.gleam2.push_back(r.gleam2);
    ix.fixed.push_back(r.color ? *r.color : -1);
  }
  for (const auto& e : s.interior_edges) {
    ix.edges.push_back({idx[e.regions[0]], idx[e.regions[1]], idx[e.regions[2]]});
    ix.edge_chi.push_back(cell_chi(e.kind));
  }
  for (const auto& v : s.interior_vertices) {
    std::array<int, 6> a{};
    for (int k = 0; k < 6; ++k) a[k] = idx[v.slots[k]];
    ix.verts.push_back(a);
  }
  for (const auto& v : s.boundary_vertices) {
    ix.bverts.push_back({idx[v.regions[0]], idx[v.regions[1]], idx[v.regions[2]]});
  }
  for (const auto& e : s.boundary_edges) {
    const int r = idx[e.region];
    ix.bedges.emplace_back(r, cell_chi(e.kind));
    if (ix.fixed[r] != e.color) ix.conflict = true;
  }
  return ix;
}

ColorTriple triple_of(const std::array<int, 3>& t, const std::vector<int>& c) {
  return {c[t[0]], c[t[1]], c[t[2]]};
}

class TetCache {
 public:
  QRat get(const TetFrame& fr) {
    const std::array<int, 6> key{fr.a, fr.b, fr.c, fr.d, fr.e, fr.f};
    {
      std::lock_guard lock(mu_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    QRat v = tet_eval(fr);
    std::lock_guard lock(mu_);
    return memo_.emplace(key, std::move(v)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<std::array<int, 6>, QRat> memo_;
};

QRat evaluate(const Indexed& ix, const Shadow& s, const std::vector<int>& c, TetCache& tets) {
  if (c.size() != ix.chi.size()) throw Error(ErrorKind::Domain, "coloring size does not match the region count");
  for (std::size_t k = 0; k < ix.edges.size(); ++k) {
    if (!is_admissible(triple_of(ix.edges[k], c))) {
      throw Error(ErrorKind::Inadmissible, "coloring is inadmissible at interior edge '" + s.interior_edges[k].id + "'");
    }
  }

  QIntProduct p;
  int quarter_turns = 0;
  std::int64_t xexp = 0;
  auto circle_pow = [&](int col, std::int64_t e) {
    p.mul_qint(col + 1, e);
    if (col % 2 != 0 && e % 2 != 0) p.negate();
  };
  for (std::size_t f = 0; f < ix.chi.size(); ++f) {
    const std::int64_t col = c[f], g2 = ix.gleam2[f];
    circle_pow(static_cast<int>(col), ix.chi[f]);
    quarter_turns += static_cast<int>(((g2 * col) % 4 + 4) % 4);
    xexp -= g2 * col * (col + 2);
  }
  for (const auto& bv : ix.bverts) p *= theta_product(triple_of(bv, c));
  for (std::size_t k = 0; k < ix.edges.size(); ++k) {
    if (ix.edge_chi[k] != 0) p.mul_pow(theta_product(triple_of(ix.edges[k], c)), -ix.edge_chi[k]);
  }
  for (const auto& [r, chi] : ix.bedges) circle_pow(c[r], -chi);

  GaussInt unit(1);
  for (int k = 0; k < quarter_turns % 4; ++k) unit = unit.times_i();
  QRat v(QPoly::monomial(unit, xexp) * p.numerator(), p.denominator());
  for (const auto& sl : ix.verts) {
    v *= tets.get({c[sl[0]], c[sl[1]], c[sl[2]], c[sl[3]], c[sl[4]], c[sl[5]]});
  }
  return v;
}

unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned n = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

}  // namespace

Enumeration enumerate_colorings(const Shadow& s, int cap) {
  const Indexed ix = index_shadow(s);
  if (cap < s.max_fixed_color()) {
    throw Error(ErrorKind::Domain, "cap " + std::to_string(cap) + " is below the fixed color " +
                                       std::to_string(s.max_fixed_color()));
  }
  const std::size_t n = ix.chi.size();

  // Breadth-first order from the fixed regions through interior edges.
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : ix.edges) {
    for (int a : e) {
      for (int b : e) {
        if (a != b) adj[a].push_back(b);
      }
    }
  }
  std::vector<int> order;
  std::vector<int> pos(n, -1);
  std::deque<int> queue;
  for (std::size_t r = 0; r < n; ++r) {
    if (ix.fixed[r] >= 0) {
      pos[r] = static_cast<int>(order.size());
      order.push_back(static_cast<int>(r));
      queue.push_back(static_cast<int>(r));
    }
  }
  while (!queue.empty()) {
    const int r = queue.front();
    queue.pop_front();
    for (int o : adj[r]) {
      if (pos[o] >= 0) continue;
      pos[o] = static_cast<int>(order.size());
      order.push_back(o);
      queue.push_back(o);
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (pos[r] < 0) {
      throw Error(ErrorKind::Unbounded, "unbounded coloring space: region '" + s.regions[r].id +
                                            "' is not constrained by any fixed color");
    }
  }

  Enumeration out;
  out.cap = cap;
  out.complete = true;
  if (ix.conflict) return out;

  // Edges checked at the step where their last region is colored.
  std::vector<std::vector<int>> closing(n);
  for (std::size_t k = 0; k < ix.edges.size(); ++k) {
    const auto& e = ix.edges[k];
    closing[std::max({pos[e[0]], pos[e[1]], pos[e[2]]})].push_back(static_cast<int>(k));
  }

  std::vector<int> col(n, -1);
  auto step = [&](auto&& self, std::size_t depth) -> void {
    if (depth == n) {
      out.colorings.push_back({col});
      return;
    }
    const int r = order[depth];
    int lo = 0, hi = cap, parity = -1;
    if (ix.fixed[r] >= 0) lo = hi = ix.fixed[r];
    for (int k : closing[depth]) {
      const auto& e = ix.edges[k];
      std::vector<int> others;
      for (int x : e) {
        if (x != r) others.push_back(col[x]);
      }
      if (others.size() == 2) {
        lo = std::max(lo, std::abs(others[0] - others[1]));
        hi = std::min(hi, others[0] + others[1]);
        parity = (others[0] + others[1]) % 2;
      } else if (others.size() == 1) {
        if (others[0] % 2 != 0) return;
        lo = std::max(lo, others[0] / 2);
      } else {
        parity = 0;
      }
    }
    for (int v = lo; v <= hi; ++v) {
      if (parity >= 0 && v % 2 != parity) continue;
      col[r] = v;
      const bool ok = std::all_of(closing[depth].begin(), closing[depth].end(),
                                  [&](int k) { return is_admissible(triple_of(ix.edges[k], col)); });
      if (ok) self(self, depth + 1);
    }
    col[r] = -1;
  };
  step(step, 0);

  std::sort(out.colorings.begin(), out.colorings.end());
  for (const auto& c : out.colorings) {
    for (std::size_t r = 0; r < n; ++r) {
      if (ix.fixed[r] < 0 && c.colors[r] >= cap - 1) out.complete = false;
    }
  }
  return out;
}

QRat state_value(const Shadow& s, const Coloring& c) {
  const Indexed ix = index_shadow(s);
  TetCache tets;
  return evaluate(ix, s, c.colors, tets);
}

BracketResult bracket(const Shadow& s, int cap, unsigned threads) {
  return bracket(s, enumerate_colorings(s, cap), threads);
}

BracketResult bracket(const Shadow& s, const Enumeration& e, unsigned threads, std::vector<QRat>* values_out) {
  const Indexed ix = index_shadow(s);
  const std::size_t n = e.colorings.size();
  std::vector<QRat> values(n);
  TetCache tets;

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < n;) {
      try {
        values[k] = evaluate(ix, s, e.colorings[k].colors, tets);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    }
  };
  const unsigned workers = worker_count(threads, n);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  QRat sum;
  for (const auto& v : values) sum += v;
  BracketResult b;
  b.value = sum.reduced();
  b.ord_i = b.value.ord_at_i();
  b.states_evaluated = n;
  b.complete = e.complete;
  b.cap_used = e.cap;
  if (values_out) *values_out = std::move(values);
  return b;
}

OddSurface odd_surface(const Shadow& s, const Coloring& c) {
  const Indexed ix = index_shadow(s);
  const auto& col = c.colors;
  if (col.size() != ix.chi.size()) throw Error(ErrorKind::Domain, "coloring size does not match the region count");
  auto odd = [&](int r) { return col[r] % 2 != 0; };

  OddSurface out;
  for (std::size_t r = 0; r < ix.chi.size(); ++r) {
    if (!odd(static_cast<int>(r))) continue;
    out.regions.push_back(s.regions[r].id);
    out.euler_char += ix.chi[r];
  }
  for (std::size_t k = 0; k < ix.edges.size(); ++k) {
    const int n_odd = static_cast<int>(std::count_if(ix.edges[k].begin(), ix.edges[k].end(), odd));
    if (n_odd == 0) continue;
    if (n_odd != 2) {
      throw std::logic_error("odd_surface: interior edge '" + s.interior_edges[k].id + "' has " +
                             std::to_string(n_odd) + " odd sheets");
    }
    out.interior_edges.push_back(s.interior_edges[k].id);
    out.euler_char -= ix.edge_chi[k];
  }
  for (std::size_t k = 0; k < ix.bedges.size(); ++k) {
    if (!odd(ix.bedges[k].first)) continue;
    out.boundary_edges.push_back(s.boundary_edges[k].id);
    out.euler_char -= ix.bedges[k].second;
  }
  for (std::size_t k = 0; k < ix.verts.size(); ++k) {
    if (std::none_of(ix.verts[k].begin(), ix.verts[k].end(), odd)) continue;
    out.interior_vertices.push_back(s.interior_vertices[k].id);
    out.euler_char += 1;
  }
  for (std::size_t k = 0; k < ix.bverts.size(); ++k) {
    if (std::none_of(ix.bverts[k].begin(), ix.bverts[k].end(), odd)) continue;
    out.boundary_vertices.push_back(s.boundary_vertices[k].id);
    out.euler_char += 1;
  }
  return out;
}

StateBound verify_state_bound(const Shadow& s, const Coloring& c) {
  return verify_state_bound(s, c, state_value(s, c));
}

StateBound verify_state_bound(const Shadow& s, const Coloring& c, const QRat& value) {
  StateBound b;
  b.ord = value.ord_at_i();
  b.chi = odd_surface(s, c).euler_char;
  const int n = static_cast<int>(s.regions.size());
  for (const auto& bv : s.boundary_vertices) {
    ColorTriple t;
    int* dst[3] = {&t.a, &t.b, &t.c};
    for (int k = 0; k < 3; ++k) {
      const int r = s.region_index(bv.regions[k]);
      if (r < 0 || r >= n) throw Error(ErrorKind::Validation, "boundary vertex '" + bv.id + "' has a missing region");
      *dst[k] = c.colors[static_cast<std::size_t>(r)];
    }
    if (is_red(t)) ++b.red_boundary;
  }
  b.bound = HalfInt{2 * b.chi - b.red_boundary};
  b.holds = order_at_least(b.ord, b.bound);
  return b;
}

RibbonBoundReport ribbon_report(const BracketResult& b, RibbonTarget target) {
  if (!b.complete) {
    throw Error(ErrorKind::Incomplete,
                "the enumeration at cap " + std::to_string(b.cap_used) +
                    " carries no completeness certificate (colors reached the top of the range); "
                    "raise --cap before drawing ribbon conclusions");
  }
  if (target.components < 1) throw Error(ErrorKind::Domain, "a link has at least one component");
  RibbonBoundReport r;
  r.ord = b.ord_i;
  r.components = target.components;
  if (b.ord_i.is_infinite()) {
    r.lines.push_back("bracket vanishes identically: no obstruction");
    return r;
  }
  const std::int64_t ord = b.ord_i.value();
  r.lines.push_back("every ribbon surface bounded by the link has χ ≤ " + std::to_string(ord));
  if (target.is_knot()) {
    if (ord <= 0) {
      r.informative = true;
      r.not_ribbon = true;
      r.genus_lower_bound = (1 - ord + 1) / 2;
      r.lines.push_back("not ribbon");
      r.lines.push_back("ribbon genus ≥ " + std::to_string(*r.genus_lower_bound));
    } else {
      r.lines.push_back("no information on the ribbon genus (ord_i = " + std::to_string(ord) + ")");
    }
  } else if (ord < target.components) {
    r.informative = true;
    r.not_ribbon = true;
    r.lines.push_back("not a ribbon link: " + std::to_string(target.components) +
                      " ribbon discs would have χ = " + std::to_string(target.components));
  } else {
    r.lines.push_back("no information: ord_i is at least the number of components");
  }
  return r;
}

}  // namespace shadowq
