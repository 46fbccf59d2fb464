#include "slee/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace slee {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (n > kMaxOrder)
    throw std::invalid_argument("vertex count exceeds the cap of " +
                                std::to_string(kMaxOrder));
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop rejected");
    if ((g.adj_[u] >> v) & 1u) throw std::invalid_argument("duplicate edge rejected");
    g.adj_[u] |= std::uint64_t{1} << v;
    g.adj_[v] |= std::uint64_t{1} << u;
    ++g.m_;
  }
  return g;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[v]);
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, std::popcount(adj_[v]));
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = kMaxOrder;
  for (int v = 0; v < n_; ++v) d = std::min(d, std::popcount(adj_[v]));
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    std::uint64_t rest = adj_[u] >> (u + 1) << (u + 1);
    while (rest != 0) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = std::popcount(adj_[v]);
  std::sort(d.begin(), d.end(), std::greater<int>());
  return d;
}

Graph empty_graph(int n) { return Graph(n); }

Graph add_edge(const Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("self-loop rejected");
  if (g.has_edge(u, v)) throw std::invalid_argument("edge already present");
  auto es = g.edges();
  es.emplace_back(std::min(u, v), std::max(u, v));
  return Graph::from_edges(g.order(), es);
}

Graph remove_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("edge not present");
  auto es = g.edges();
  const std::pair<int, int> target{std::min(u, v), std::max(u, v)};
  es.erase(std::find(es.begin(), es.end(), target));
  return Graph::from_edges(g.order(), es);
}

Graph complete(int a) {
  if (a < 0) throw std::invalid_argument("negative vertex count");
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < a; ++u)
    for (int v = u + 1; v < a; ++v) es.emplace_back(u, v);
  return Graph::from_edges(a, es);
}

Graph star(int m) {
  if (m < 1) throw std::invalid_argument("star needs at least one vertex");
  std::vector<std::pair<int, int>> es;
  for (int v = 1; v < m; ++v) es.emplace_back(0, v);
  return Graph::from_edges(m, es);
}

Graph path(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::vector<std::pair<int, int>> es;
  for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
  return Graph::from_edges(n, es);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int shift = g.order();
  auto es = g.edges();
  for (const auto& [u, v] : h.edges()) es.emplace_back(u + shift, v + shift);
  return Graph::from_edges(g.order() + h.order(), es);
}

Graph join(const Graph& g, const Graph& h) {
  const int shift = g.order();
  auto es = g.edges();
  for (const auto& [u, v] : h.edges()) es.emplace_back(u + shift, v + shift);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) es.emplace_back(u, v + shift);
  return Graph::from_edges(g.order() + h.order(), es);
}

Graph g_nr(int n, int r) {
  if (n < 1) throw std::invalid_argument("g_nr needs n >= 1");
  if (r < 0 || r > n - 1) throw std::invalid_argument("g_nr needs 0 <= r <= n-1");
  const int a = n - r;
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < a; ++u)
    for (int v = u + 1; v < a; ++v) es.emplace_back(u, v);
  for (int i = 0; i < r; ++i) es.emplace_back(0, a + i);
  return Graph::from_edges(n, es);
}

Graph k_pqr(int p, int q, int r) {
  if (p < 0 || q < 0 || r < 0) throw std::invalid_argument("k_pqr needs non-negative parts");
  if (p + q + r < 1) throw std::invalid_argument("k_pqr needs at least one vertex");
  if (p < q && !(p == 0 && q == 1))
    throw std::invalid_argument("k_pqr needs p >= q (or the (0,1) convention)");
  return join(disjoint_union(complete(p), complete(q)), complete(r));
}

Graph attach_pendants(const Graph& g, int v, int c) {
  if (c < 0) throw std::invalid_argument("negative pendant count");
  if (v < 0 || v >= g.order()) throw std::out_of_range("vertex id out of range");
  auto es = g.edges();
  for (int i = 0; i < c; ++i) es.emplace_back(v, g.order() + i);
  return Graph::from_edges(g.order() + c, es);
}

Graph identify(const Graph& h1, int u, const Graph& h2, int w) {
  if (u < 0 || u >= h1.order()) throw std::out_of_range("vertex id out of range");
  if (w < 0 || w >= h2.order()) throw std::out_of_range("vertex id out of range");
  const int base = h1.order();
  auto map2 = [&](int x) { return x == w ? u : base + (x < w ? x : x - 1); };
  auto es = h1.edges();
  for (const auto& [a, b] : h2.edges()) {
    const int ma = map2(a);
    const int mb = map2(b);
    es.emplace_back(std::min(ma, mb), std::max(ma, mb));
  }
  return Graph::from_edges(base + h2.order() - 1, es);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int x : perm) {
    if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(x)] = true;
  }
  std::vector<std::pair<int, int>> es;
  es.reserve(static_cast<std::size_t>(g.size()));
  for (const auto& [a, b] : g.edges()) {
    const int ma = perm[static_cast<std::size_t>(a)];
    const int mb = perm[static_cast<std::size_t>(b)];
    es.emplace_back(std::min(ma, mb), std::max(ma, mb));
  }
  return Graph::from_edges(n, es);
}

}  // namespace slee
