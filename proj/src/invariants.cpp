#include "slee/invariants.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <queue>
#include <stdexcept>
#include <string>

namespace slee {

namespace {

// BFS reachability within the vertex set `alive` (bitmask), from `start`.
std::uint64_t reach(const Graph& g, int start, std::uint64_t alive) {
  std::uint64_t seen = std::uint64_t{1} << start;
  std::uint64_t frontier = seen;
  while (frontier != 0) {
    std::uint64_t next = 0;
    std::uint64_t f = frontier;
    while (f != 0) {
      const int v = std::countr_zero(f);
      f &= f - 1;
      next |= g.neighbor_mask(v) & alive;
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

std::uint64_t full_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

bool connected_within(const Graph& g, std::uint64_t alive) {
  if (alive == 0) return true;
  const int start = std::countr_zero(alive);
  return reach(g, start, alive) == alive;
}

}  // namespace

bool is_connected(const Graph& g) {
  return connected_within(g, full_mask(g.order()));
}

int component_count(const Graph& g) {
  std::uint64_t left = full_mask(g.order());
  int count = 0;
  while (left != 0) {
    const int v = std::countr_zero(left);
    left &= ~reach(g, v, left);
    ++count;
  }
  return count;
}

bool is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] != -1) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::queue<int> bfs;
    bfs.push(s);
    while (!bfs.empty()) {
      const int v = bfs.front();
      bfs.pop();
      std::uint64_t nb = g.neighbor_mask(v);
      while (nb != 0) {
        const int u = std::countr_zero(nb);
        nb &= nb - 1;
        if (color[static_cast<std::size_t>(u)] == -1) {
          color[static_cast<std::size_t>(u)] = 1 - color[static_cast<std::size_t>(v)];
          bfs.push(u);
        } else if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

struct BridgeSearch {
  const Graph* g;
  std::vector<int> disc, low;
  int timer = 0;
  std::vector<std::pair<int, int>> bridges;

  void dfs(int v, int parent) {
    disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
    bool skipped_parent = false;
    std::uint64_t nb = g->neighbor_mask(v);
    while (nb != 0) {
      const int u = std::countr_zero(nb);
      nb &= nb - 1;
      if (u == parent && !skipped_parent) {
        // A simple graph has no parallel edges, so the parent edge is
        // skipped exactly once.
        skipped_parent = true;
        continue;
      }
      if (disc[static_cast<std::size_t>(u)] != -1) {
        low[static_cast<std::size_t>(v)] =
            std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(u)]);
        continue;
      }
      dfs(u, v);
      low[static_cast<std::size_t>(v)] =
          std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(u)]);
      if (low[static_cast<std::size_t>(u)] > disc[static_cast<std::size_t>(v)])
        bridges.emplace_back(std::min(v, u), std::max(v, u));
    }
  }
};

}  // namespace

std::vector<std::pair<int, int>> cut_edges(const Graph& g) {
  BridgeSearch s;
  s.g = &g;
  s.disc.assign(static_cast<std::size_t>(g.order()), -1);
  s.low.assign(static_cast<std::size_t>(g.order()), -1);
  for (int v = 0; v < g.order(); ++v)
    if (s.disc[static_cast<std::size_t>(v)] == -1) s.dfs(v, -1);
  std::sort(s.bridges.begin(), s.bridges.end());
  return s.bridges;
}

int pendant_count(const Graph& g) {
  int count = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) ++count;
  return count;
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 1) throw std::invalid_argument("vertex connectivity needs n >= 1");
  if (n > 12) throw budget_error("vertex connectivity capped at 12 vertices");
  if (!is_connected(g)) return 0;
  const std::uint64_t all = full_mask(n);
  for (int s = 1; s <= n - 2; ++s) {
    for (std::uint64_t cut = 0; cut <= all; ++cut) {
      if (std::popcount(cut) != s) continue;
      const std::uint64_t alive = all & ~cut;
      const int start = std::countr_zero(alive);
      if (reach(g, start, alive) != alive) return s;
    }
  }
  return n - 1;  // no separating set: complete graph convention
}

namespace {

// Unit-capacity max-flow (shortest augmenting paths) between s and t.
int max_flow_unit(const Graph& g, int s, int t) {
  const int n = g.order();
  std::vector<std::vector<int>> cap(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), 0));
  for (const auto& [u, v] : g.edges()) {
    cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    cap[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  }
  int flow = 0;
  for (;;) {
    std::vector<int> prev(static_cast<std::size_t>(n), -1);
    prev[static_cast<std::size_t>(s)] = s;
    std::queue<int> bfs;
    bfs.push(s);
    while (!bfs.empty() && prev[static_cast<std::size_t>(t)] == -1) {
      const int v = bfs.front();
      bfs.pop();
      for (int u = 0; u < n; ++u) {
        if (prev[static_cast<std::size_t>(u)] == -1 &&
            cap[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] > 0) {
          prev[static_cast<std::size_t>(u)] = v;
          bfs.push(u);
        }
      }
    }
    if (prev[static_cast<std::size_t>(t)] == -1) return flow;
    for (int v = t; v != s; v = prev[static_cast<std::size_t>(v)]) {
      const int p = prev[static_cast<std::size_t>(v)];
      --cap[static_cast<std::size_t>(p)][static_cast<std::size_t>(v)];
      ++cap[static_cast<std::size_t>(v)][static_cast<std::size_t>(p)];
    }
    ++flow;
  }
}

}  // namespace

int edge_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 1) throw std::invalid_argument("edge connectivity needs n >= 1");
  if (n == 1) return 0;
  if (!is_connected(g)) return 0;
  int best = g.size() + 1;
  for (int t = 1; t < n; ++t) best = std::min(best, max_flow_unit(g, 0, t));
  return best;
}

const char* to_string(ClassSpec::Kind kind) {
  switch (kind) {
    case ClassSpec::Kind::cut_edges: return "cut-edges";
    case ClassSpec::Kind::pendant_vertices: return "pendant-vertices";
    case ClassSpec::Kind::vertex_connectivity: return "vertex-connectivity";
    case ClassSpec::Kind::edge_connectivity: return "edge-connectivity";
  }
  return "?";
}

void validate(const ClassSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("class needs n >= 1");
  const int p = spec.param;
  switch (spec.kind) {
    case ClassSpec::Kind::cut_edges:
      if (p < 0 || p > spec.n - 3)
        throw std::invalid_argument("cut-edges class needs 0 <= r <= n-3");
      break;
    case ClassSpec::Kind::pendant_vertices:
      if (p < 0 || p > spec.n - 1)
        throw std::invalid_argument("pendant-vertices class needs 0 <= r <= n-1");
      break;
    case ClassSpec::Kind::vertex_connectivity:
    case ClassSpec::Kind::edge_connectivity:
      if (p < 0 || p > spec.n - 1)
        throw std::invalid_argument("connectivity class needs 0 <= k <= n-1");
      break;
  }
}

bool member_of(const Graph& g, const ClassSpec& spec) {
  validate(spec);
  if (g.order() != spec.n) return false;
  switch (spec.kind) {
    case ClassSpec::Kind::cut_edges:
      return is_connected(g) && static_cast<int>(cut_edges(g).size()) == spec.param;
    case ClassSpec::Kind::pendant_vertices:
      return pendant_count(g) == spec.param;
    case ClassSpec::Kind::vertex_connectivity:
      return vertex_connectivity(g) == spec.param;
    case ClassSpec::Kind::edge_connectivity:
      return edge_connectivity(g) == spec.param;
  }
  return false;
}

}  // namespace slee
