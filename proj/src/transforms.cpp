#include "slee/transforms.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace slee {

const char* to_string(TransformTag tag) {
  switch (tag) {
    case TransformTag::identification: return "identification";
    case TransformTag::attach_vs_identify: return "attach-vs-identify";
    case TransformTag::relocation: return "relocation";
    case TransformTag::pendant_relocation: return "pendant-relocation";
  }
  return "?";
}

TransformPair identification_pair(const Graph& h1, int u, int v, const Graph& h2, int w) {
  if (u == v) throw std::invalid_argument("identification anchors must differ");
  TransformPair p;
  p.tag = TransformTag::identification;
  p.before = identify(h1, v, h2, w);
  p.after = identify(h1, u, h2, w);
  return p;
}

TransformPair attach_vs_identify_pair(const Graph& g1, int u, const Graph& g2, int v) {
  if (u < 0 || u >= g1.order() || v < 0 || v >= g2.order())
    throw std::out_of_range("vertex id out of range");
  if (g1.degree(u) < 1 || g2.degree(v) < 1)
    throw std::invalid_argument("anchors must have degree >= 1 on both sides");
  TransformPair p;
  p.tag = TransformTag::attach_vs_identify;
  p.before = add_edge(disjoint_union(g1, g2), u, g1.order() + v);
  p.after = attach_pendants(identify(g1, u, g2, v), u, 1);
  return p;
}

TransformPair relocation_pair(const Graph& g, int v, int u, const std::vector<int>& ws) {
  if (v < 0 || v >= g.order() || u < 0 || u >= g.order())
    throw std::out_of_range("vertex id out of range");
  if (ws.empty()) throw std::invalid_argument("relocation needs at least one target");
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const int w = ws[i];
    if (w < 0 || w >= g.order()) throw std::out_of_range("vertex id out of range");
    if (w == u || w == v) throw std::invalid_argument("targets must avoid both anchors");
    if (g.has_edge(v, w) || g.has_edge(u, w))
      throw std::invalid_argument("relocated edges must be absent from the base graph");
    if (std::find(ws.begin(), ws.begin() + static_cast<std::ptrdiff_t>(i), w) !=
        ws.begin() + static_cast<std::ptrdiff_t>(i))
      throw std::invalid_argument("duplicate relocation target");
  }
  TransformPair p;
  p.tag = TransformTag::relocation;
  Graph before = g;
  Graph after = g;
  for (const int w : ws) {
    before = add_edge(before, v, w);
    after = add_edge(after, u, w);
  }
  p.before = std::move(before);
  p.after = std::move(after);
  return p;
}

namespace {

// Clique-with-pendants shape: the non-pendant vertices induce a complete
// graph of order >= 3 and every pendant hangs off one of them.
void check_clique_with_pendants(const Graph& g) {
  std::vector<int> core;
  for (int x = 0; x < g.order(); ++x)
    if (g.degree(x) != 1) core.push_back(x);
  if (core.size() < 3)
    throw std::invalid_argument("need at least 3 non-pendant vertices");
  for (std::size_t i = 0; i < core.size(); ++i)
    for (std::size_t j = i + 1; j < core.size(); ++j)
      if (!g.has_edge(core[i], core[j]))
        throw std::invalid_argument("non-pendant vertices must form a clique");
  for (int x = 0; x < g.order(); ++x) {
    if (g.degree(x) != 1) continue;
    const int nb = std::countr_zero(g.neighbor_mask(x));
    if (g.degree(nb) == 1)
      throw std::invalid_argument("pendants must attach to clique vertices");
  }
}

int pendant_neighbors(const Graph& g, int v) {
  int count = 0;
  std::uint64_t nb = g.neighbor_mask(v);
  while (nb != 0) {
    const int x = std::countr_zero(nb);
    nb &= nb - 1;
    if (g.degree(x) == 1) ++count;
  }
  return count;
}

}  // namespace

TransformPair pendant_relocation(const Graph& g, int v, int u) {
  if (v < 0 || v >= g.order() || u < 0 || u >= g.order())
    throw std::out_of_range("vertex id out of range");
  if (u == v) throw std::invalid_argument("relocation anchors must differ");
  check_clique_with_pendants(g);
  if (g.degree(u) == 1 || g.degree(v) == 1)
    throw std::invalid_argument("anchors must be clique vertices");
  const int r = pendant_neighbors(g, v);
  const int s = pendant_neighbors(g, u);
  if (r < 1) throw std::invalid_argument("v needs at least one pendant neighbor");
  if (s < r) throw std::invalid_argument("u needs at least as many pendant neighbors as v");
  auto es = g.edges();
  for (auto& [a, b] : es) {
    if (a == v && g.degree(b) == 1) a = u;
    else if (b == v && g.degree(a) == 1) b = u;
    if (a > b) std::swap(a, b);
  }
  TransformPair p;
  p.tag = TransformTag::pendant_relocation;
  p.before = g;
  p.after = Graph::from_edges(g.order(), es);
  return p;
}

}  // namespace slee
