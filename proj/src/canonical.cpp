#include "slee/canonical.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace slee {

namespace {

constexpr int kHardCap = 11;  // 11*10/2 = 55 triangle bits, fits the uint64

// Upper-triangle string of g under the identity labeling, MSB-aligned.
std::uint64_t triangle_bits(const Graph& g) {
  std::uint64_t bits = 0;
  int t = 0;
  for (int col = 1; col < g.order(); ++col)
    for (int row = 0; row < col; ++row, ++t)
      if (g.has_edge(row, col)) bits |= std::uint64_t{1} << (63 - t);
  return bits;
}

struct Search {
  const Graph* g = nullptr;
  int n = 0;
  std::array<int, kHardCap> order{};       // candidate iteration order
  std::array<int, kHardCap> placed{};      // position -> original vertex
  std::uint64_t best = ~std::uint64_t{0};
  std::array<int, kHardCap> best_placed{};

  static std::uint64_t prefix_mask(int nbits) {
    return nbits == 0 ? 0 : ~std::uint64_t{0} << (64 - nbits);
  }

  void run(int pos, std::uint64_t prefix, std::uint64_t used) {
    const int col_base = pos * (pos - 1) / 2;
    const int determined = col_base + pos;  // triangle bits known once pos is placed
    for (int idx = 0; idx < n; ++idx) {
      const int v = order[static_cast<std::size_t>(idx)];
      if ((used >> v) & 1u) continue;
      std::uint64_t next = prefix;
      const std::uint64_t nb = g->neighbor_mask(v);
      for (int i = 0; i < pos; ++i) {
        if ((nb >> placed[static_cast<std::size_t>(i)]) & 1u)
          next |= std::uint64_t{1} << (63 - (col_base + i));
      }
      if (next > (best & prefix_mask(determined))) continue;
      placed[static_cast<std::size_t>(pos)] = v;
      if (pos + 1 == n) {
        if (next < best) {
          best = next;
          best_placed = placed;
        }
      } else {
        run(pos + 1, next, used | (std::uint64_t{1} << v));
      }
    }
  }
};

Search solve(const Graph& g, int max_order) {
  const int cap = std::min(max_order, kHardCap);
  if (g.order() > cap)
    throw budget_error("canonical labeling capped at " + std::to_string(cap) +
                       " vertices (got " + std::to_string(g.order()) + ")");
  Search s;
  s.g = &g;
  s.n = g.order();
  for (int v = 0; v < s.n; ++v) s.order[static_cast<std::size_t>(v)] = v;
  std::sort(s.order.begin(), s.order.begin() + s.n, [&](int a, int b) {
    const int da = g.degree(a), db = g.degree(b);
    return da != db ? da < db : a < b;
  });
  for (int v = 0; v < s.n; ++v) s.best_placed[static_cast<std::size_t>(v)] = v;
  s.best = triangle_bits(g);
  if (s.n > 1) s.run(0, 0, 0);
  return s;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g, int max_order) {
  const Search s = solve(g, max_order);
  return CanonicalForm{g.order(), s.best};
}

std::vector<int> canonical_permutation(const Graph& g, int max_order) {
  const Search s = solve(g, max_order);
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  for (int pos = 0; pos < g.order(); ++pos)
    perm[static_cast<std::size_t>(s.best_placed[static_cast<std::size_t>(pos)])] = pos;
  return perm;
}

Graph canonical_representative(const Graph& g, int max_order) {
  return relabel(g, canonical_permutation(g, max_order));
}

Graph from_canonical(const CanonicalForm& form) {
  std::vector<std::pair<int, int>> es;
  int t = 0;
  for (int col = 1; col < form.order; ++col)
    for (int row = 0; row < col; ++row, ++t)
      if ((form.bits >> (63 - t)) & 1u) es.emplace_back(row, col);
  return Graph::from_edges(form.order, es);
}

bool is_isomorphic(const Graph& a, const Graph& b, int max_order) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  return canonical_form(a, max_order) == canonical_form(b, max_order);
}

}  // namespace slee
