#include "shadowq/skein.hpp"

#include <map>
#include <numeric>

#include "shadowq/error.hpp"

namespace shadowq {

namespace {

int find(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

void unite(std::vector<int>& p, int a, int b) { p[find(p, a)] = find(p, b); }

}  // namespace

QPoly kauffman_bracket(const Diagram& d) {
  if (!d.vertices.empty()) throw Error(ErrorKind::Unsupported, "skein evaluation handles link diagrams only");
  for (const auto& [arc, c] : d.colors) {
    if (c != 1) throw Error(ErrorKind::Unsupported, "skein evaluation needs color 1 (arc '" + arc + "')");
  }
  const std::size_t n = d.crossings.size();
  if (n > 24) throw Error(ErrorKind::Unsupported, "more than 24 crossings");

  std::map<std::string, int> idx;
  for (std::size_t k = 0; k < d.arcs.size(); ++k) idx[d.arcs[k]] = static_cast<int>(k);
  auto code = [&](const ArcEnd& e) { return 2 * idx.at(e.arc) + e.which_end; };

  const int ends = static_cast<int>(2 * d.arcs.size());
  std::vector<int> base(static_cast<std::size_t>(ends));
  std::iota(base.begin(), base.end(), 0);
  for (int a = 0; 2 * a < ends; ++a) unite(base, 2 * a, 2 * a + 1);

  // A-smoothing joins the ends bounding the two B corners; B-smoothing the A corners.
  std::vector<std::array<std::array<int, 2>, 2>> a_pairs(n), b_pairs(n);
  for (std::size_t c = 0; c < n; ++c) {
    const auto& x = d.crossings[c];
    const int o = x.over;
    auto e = [&](int p) { return code(x.ends[(o + p) % 4]); };
    a_pairs[c] = {{{e(1), e(2)}, {e(3), e(0)}}};
    b_pairs[c] = {{{e(0), e(1)}, {e(2), e(3)}}};
  }

  // (#A - #B, loops) -> number of states
  std::map<std::pair<int, int>, long> census;
  std::vector<int> p;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    p = base;
    int balance = 0;
    for (std::size_t c = 0; c < n; ++c) {
      const bool b = (mask >> c) & 1;
      balance += b ? -1 : 1;
      for (const auto& pr : b ? b_pairs[c] : a_pairs[c]) unite(p, pr[0], pr[1]);
    }
    int loops = 0;
    for (int k = 0; k < ends; ++k) loops += find(p, k) == k ? 1 : 0;
    ++census[{balance, loops}];
  }

  const QPoly delta = QPoly::monomial(-1, 4) + QPoly::monomial(-1, -4);
  std::map<int, QPoly> delta_pow;
  QPoly sum;
  for (const auto& [key, count] : census) {
    const auto [balance, loops] = key;
    auto it = delta_pow.find(loops);
    if (it == delta_pow.end()) it = delta_pow.emplace(loops, delta.pow(static_cast<unsigned>(loops))).first;
    sum += QPoly::monomial(count, 2 * balance) * it->second;
  }
  return sum;
}

}  // namespace shadowq
