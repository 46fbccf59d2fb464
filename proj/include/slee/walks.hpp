// walks.hpp -- exact semi-edge-walk counting and the finite dominance check
// on anchored walk-count vectors.
//
// A semi-edge walk of length k is a sequence v_1 e_1 v_2 ... e_k v_{k+1}
// where each e_i is an edge incident to v_i and v_{i+1} is either endpoint of
// e_i (staying put is allowed). Counts anchored at a single vertex x refer to
// CLOSED walks x -> x; pair anchors (x, y) fix both ends.
#pragma once

#include "slee/exact.hpp"
#include "slee/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace slee {

// Exhaustive recursion over (incident edge, endpoint) choices; deliberately
// independent of any matrix identity so it can serve as an oracle.
// Guards: k <= max_k, order <= 10, and an overall step budget.
std::uint64_t enumerate_walks(const Graph& g, int x, int y, int k, int max_k = 8);

// Debug variant materializing the walks themselves. Each walk is the 2k+1
// sequence v_1, w_1, v_2, w_2, ..., v_{k+1} where w_i is the endpoint of e_i
// other than v_i (so e_i = {v_i, w_i}).
std::vector<std::vector<int>> enumerate_walk_sequences(const Graph& g, int x, int y, int k,
                                                       int max_k = 8);

struct WalkCountTable {
  int k_max = 0;
  std::vector<ExactMatrix> counts;  // counts[k](x, y) = #walks of length k from x to y
};

// counts[k] = Q^k, exact. Same width policy as the moment computation.
WalkCountTable walk_table(const Graph& g, int k_max);

enum class DominanceRel {
  equal_up_to_k,     // the two count vectors agree at every k <= K
  weak_up_to_k,      // <= everywhere up to K (subsumed by the two outcomes around it)
  strict_witnessed,  // <= everywhere up to K with some k strictly smaller
  fails,             // some k <= K has the left count strictly larger
};

const char* to_string(DominanceRel r);

struct DominanceVerdict {
  DominanceRel relation = DominanceRel::equal_up_to_k;
  int k_max = 0;
  std::optional<int> witness_k;  // smallest strict k when strict_witnessed
  std::optional<int> fail_k;     // smallest violating k when fails
  std::vector<BigNat> lhs, rhs;  // the compared per-k counts

  // Whether the <=-everywhere relation held over the whole horizon.
  bool weak_holds() const { return relation != DominanceRel::fails; }
};

// Compares closed-walk counts anchored at (g; x) against (g2; x2) for all
// k <= k_max. A finite horizon can refute the relation or support it, never
// prove it; verdicts say "up to K" for that reason.
DominanceVerdict dominance(const Graph& g, int x, const Graph& g2, int x2, int k_max = 20);

// Compares pair-anchored counts (g; w, v) against (g; w, u) for all k <= k_max.
DominanceVerdict pair_dominance(const Graph& g, int w, int v, int u, int k_max = 20);

}  // namespace slee
