// invariants.hpp -- structural invariants defining the extremal classes:
// connectivity, bridges, pendant vertices, vertex/edge connectivity.
#pragma once

#include "slee/graph.hpp"

#include <utility>
#include <vector>

namespace slee {

bool is_connected(const Graph& g);  // vacuously true for the empty graph
int component_count(const Graph& g);
bool is_bipartite(const Graph& g);

// Bridges (edges whose removal increases the component count), sorted.
// Computed per component by a depth-first low-link pass.
std::vector<std::pair<int, int>> cut_edges(const Graph& g);

int pendant_count(const Graph& g);  // number of degree-1 vertices

// Minimum size of a disconnecting vertex set, by increasing-size subset
// search; n-1 for complete graphs, 0 when disconnected. Guarded at n <= 12.
int vertex_connectivity(const Graph& g);

// Minimum edge cut via unit-capacity max-flow with a fixed source;
// n-1 for complete graphs, 0 when disconnected.
int edge_connectivity(const Graph& g);

struct ClassSpec {
  enum class Kind { cut_edges, pendant_vertices, vertex_connectivity, edge_connectivity };
  Kind kind = Kind::cut_edges;
  int n = 0;
  int param = 0;
};

const char* to_string(ClassSpec::Kind kind);

// Parameter ranges: cut_edges 0 <= r <= n-3 (connected graphs only),
// pendant_vertices 0 <= r <= n-1, connectivities 0 <= k <= n-1.
void validate(const ClassSpec& spec);

// cut_edges: connected with exactly param bridges. pendant_vertices: exactly
// param degree-1 vertices (connectivity not required). connectivities: the
// invariant equals param. Graphs of a different order are never members.
bool member_of(const Graph& g, const ClassSpec& spec);

}  // namespace slee
