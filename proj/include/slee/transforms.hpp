// transforms.hpp -- the index-increasing graph transformations, built as
// before/after pairs so callers can rank both variants. All four preserve the
// vertex and edge counts.
#pragma once

#include "slee/graph.hpp"

#include <vector>

namespace slee {

enum class TransformTag {
  identification,      // identify a second graph at u instead of at v
  attach_vs_identify,  // bridge two graphs vs identify-then-pendant
  relocation,          // move a fan of new edges from anchor v to anchor u
  pendant_relocation,  // move all pendants of v to u in a clique-with-pendants
};

const char* to_string(TransformTag tag);

struct TransformPair {
  Graph before;
  Graph after;
  TransformTag tag = TransformTag::identification;
};

// before = identify(h1, v, h2, w), after = identify(h1, u, h2, w).
// Requires u != v.
TransformPair identification_pair(const Graph& h1, int u, int v, const Graph& h2, int w);

// before = g1 and g2 bridged by the edge {u, v}; after = g1 and g2 identified
// at u = v with one pendant attached there. Requires deg(u), deg(v) >= 1 so
// the identified vertex has degree >= 2 on each side.
TransformPair attach_vs_identify_pair(const Graph& g1, int u, const Graph& g2, int v);

// before = g plus edges {v, w_i}; after = g plus edges {u, w_i}. All of those
// edges must be absent from g, and u, v must not occur among the w_i.
TransformPair relocation_pair(const Graph& g, int v, int u, const std::vector<int>& ws);

// g must be a clique with pendants hanging off it (at least 3 clique
// vertices). Moves all pendant neighbors of v to u; u must be a clique vertex
// with at least as many pendant neighbors as v, and v must have at least one.
TransformPair pendant_relocation(const Graph& g, int v, int u);

}  // namespace slee
