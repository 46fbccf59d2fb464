// canonical.hpp -- canonical labeling for isomorphism tests: the
// lexicographically minimal upper-triangle bit string over all relabelings.
#pragma once

#include "slee/graph.hpp"

#include <cstdint>
#include <vector>

namespace slee {

// bits holds the column-major upper-triangle string of the minimal relabeling,
// MSB-aligned: string position t lives at bit 63-t. Two graphs are isomorphic
// iff their CanonicalForm values are equal.
struct CanonicalForm {
  int order = 0;
  std::uint64_t bits = 0;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.order == b.order && a.bits == b.bits;
  }
  friend bool operator!=(const CanonicalForm& a, const CanonicalForm& b) { return !(a == b); }
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.bits < b.bits;
  }
};

// Branch-and-bound over vertex placements with exact prefix pruning.
// max_order is a cost guard (default 10, hard limit 11 so the bit string
// fits in 64 bits); beyond it a budget_error is thrown.
CanonicalForm canonical_form(const Graph& g, int max_order = 10);

// Permutation (old label -> new label) realizing canonical_form.
std::vector<int> canonical_permutation(const Graph& g, int max_order = 10);

// relabel(g, canonical_permutation(g)); deterministic class representative.
Graph canonical_representative(const Graph& g, int max_order = 10);

// Rebuilds the representative graph encoded by a CanonicalForm.
Graph from_canonical(const CanonicalForm& form);

bool is_isomorphic(const Graph& a, const Graph& b, int max_order = 10);

}  // namespace slee
