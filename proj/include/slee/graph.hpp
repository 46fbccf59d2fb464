// graph.hpp -- immutable simple undirected graphs on vertex set {0..n-1},
// stored as one adjacency bitmask per vertex (order capped at 64), plus the
// named constructions used throughout the project.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace slee {

inline constexpr int kMaxOrder = 64;

// Thrown when an operation would exceed an explicit cost guard
// (canonical labeling caps, enumeration caps, walk budgets). The CLI maps
// this to its own exit code so guard rejections are distinguishable from
// usage errors.
class budget_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class Graph {
public:
  Graph() = default;
  explicit Graph(int n);  // n isolated vertices

  // Set semantics: rejects self-loops, duplicate edges, out-of-range ids.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  int size() const { return m_; }
  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1u;
  }
  int degree(int v) const;
  std::uint64_t neighbor_mask(int v) const {
    check_vertex(v);
    return adj_[v];
  }
  int max_degree() const;
  int min_degree() const;
  std::vector<std::pair<int, int>> edges() const;  // sorted, u < v
  std::vector<int> degree_sequence() const;        // sorted descending

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
  }
  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint64_t> adj_;
};

Graph empty_graph(int n);
Graph add_edge(const Graph& g, int u, int v);     // error if {u,v} already present
Graph remove_edge(const Graph& g, int u, int v);  // error if {u,v} absent
Graph complete(int a);
Graph star(int m);  // m vertices, center 0
Graph path(int n);  // 0-1-2-...-(n-1)
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);  // disjoint union plus all cross edges

// Complete graph on n-r vertices with r pendant vertices attached to vertex 0.
Graph g_nr(int n, int r);

// join(disjoint_union(K_p, K_q), K_r); blocks 0..p-1, p..p+q-1, p+q..p+q+r-1.
// Requires p >= q >= 0 or (p,q) = (0,1), and p+q+r >= 1.
Graph k_pqr(int p, int q, int r);

Graph attach_pendants(const Graph& g, int v, int c);

// Disjoint union of h1 and h2 with h2's vertex w merged into h1's vertex u.
// h1 keeps its labels; h2's remaining vertices follow in increasing order.
Graph identify(const Graph& h1, int u, const Graph& h2, int w);

// perm maps old label -> new label; must be a permutation of 0..n-1.
Graph relabel(const Graph& g, const std::vector<int>& perm);

}  // namespace slee
