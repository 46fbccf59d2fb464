#include "slee/walks.hpp"

#include "slee/spectral.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace slee {

namespace {

constexpr int kEnumOrderCap = 10;
constexpr double kEnumStepBudget = 2e8;

void check_enum_guards(const Graph& g, int x, int y, int k, int max_k) {
  if (x < 0 || x >= g.order() || y < 0 || y >= g.order())
    throw std::out_of_range("vertex id out of range");
  if (k < 0) throw std::invalid_argument("negative walk length");
  if (k > max_k)
    throw budget_error("walk enumeration capped at length " + std::to_string(max_k));
  if (g.order() > kEnumOrderCap)
    throw budget_error("walk enumeration capped at " + std::to_string(kEnumOrderCap) +
                       " vertices");
  const double branching = 2.0 * g.max_degree();
  if (branching > 1.0 && static_cast<double>(k) * std::log2(branching) > std::log2(kEnumStepBudget))
    throw budget_error("walk enumeration budget exceeded");
}

std::uint64_t count_rec(const Graph& g, int v, int y, int left) {
  if (left == 0) return v == y ? 1 : 0;
  std::uint64_t total = 0;
  std::uint64_t nb = g.neighbor_mask(v);
  while (nb != 0) {
    const int w = std::countr_zero(nb);
    nb &= nb - 1;
    total += count_rec(g, w, y, left - 1);  // cross the edge {v, w}
    total += count_rec(g, v, y, left - 1);  // stay at v via the edge {v, w}
  }
  return total;
}

void collect_rec(const Graph& g, int v, int y, int left, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
  if (left == 0) {
    if (v == y) out.push_back(cur);
    return;
  }
  std::uint64_t nb = g.neighbor_mask(v);
  while (nb != 0) {
    const int w = std::countr_zero(nb);
    nb &= nb - 1;
    cur.push_back(w);
    cur.push_back(w);
    collect_rec(g, w, y, left - 1, cur, out);
    cur.back() = v;
    collect_rec(g, v, y, left - 1, cur, out);
    cur.pop_back();
    cur.pop_back();
  }
}

}  // namespace

std::uint64_t enumerate_walks(const Graph& g, int x, int y, int k, int max_k) {
  check_enum_guards(g, x, y, k, max_k);
  return count_rec(g, x, y, k);
}

std::vector<std::vector<int>> enumerate_walk_sequences(const Graph& g, int x, int y, int k,
                                                       int max_k) {
  check_enum_guards(g, x, y, k, max_k);
  const double branching = 2.0 * g.max_degree();
  if (branching > 1.0 && static_cast<double>(k) * std::log2(branching) > std::log2(2e5))
    throw budget_error("walk materialization budget exceeded");
  std::vector<std::vector<int>> out;
  std::vector<int> cur{x};
  collect_rec(g, x, y, k, cur, out);
  return out;
}

WalkCountTable walk_table(const Graph& g, int k_max) {
  if (k_max < 0) throw std::invalid_argument("negative walk length");
  const int n = g.order();
  const int two_delta = 2 * g.max_degree();
  bool fits_u128 = true;
  if (n > 0 && two_delta > 1) {
    const double bits =
        static_cast<double>(k_max) * std::log2(static_cast<double>(two_delta));
    fits_u128 = bits < 126.0;
  }
  WalkCountTable table;
  table.k_max = k_max;
  table.counts.reserve(static_cast<std::size_t>(k_max) + 1);
  if (fits_u128) {
    const auto q = q_matrix<unsigned __int128>(g);
    SquareMatrix<unsigned __int128> power(n, n);
    power.setIdentity();
    for (int k = 0;; ++k) {
      ExactMatrix m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = BigNat::from_u128(power(i, j));
      table.counts.push_back(std::move(m));
      if (k == k_max) break;
      power = (power * q).eval();
    }
  } else {
    const auto q = q_matrix<BigNat>(g);
    ExactMatrix power(n, n);
    power.setIdentity();
    for (int k = 0;; ++k) {
      table.counts.push_back(power);
      if (k == k_max) break;
      power = (power * q).eval();
    }
  }
  return table;
}

const char* to_string(DominanceRel r) {
  switch (r) {
    case DominanceRel::equal_up_to_k: return "equal-up-to-K";
    case DominanceRel::weak_up_to_k: return "weak-up-to-K";
    case DominanceRel::strict_witnessed: return "strict-witnessed";
    case DominanceRel::fails: return "fails";
  }
  return "?";
}

namespace {

DominanceVerdict classify(std::vector<BigNat> lhs, std::vector<BigNat> rhs, int k_max) {
  DominanceVerdict v;
  v.k_max = k_max;
  int first_strict = -1;
  int first_fail = -1;
  for (int k = 0; k <= k_max; ++k) {
    const auto& a = lhs[static_cast<std::size_t>(k)];
    const auto& b = rhs[static_cast<std::size_t>(k)];
    if (first_fail < 0 && a > b) first_fail = k;
    if (first_strict < 0 && a < b) first_strict = k;
  }
  if (first_fail >= 0) {
    v.relation = DominanceRel::fails;
    v.fail_k = first_fail;
  } else if (first_strict >= 0) {
    v.relation = DominanceRel::strict_witnessed;
    v.witness_k = first_strict;
  } else {
    v.relation = DominanceRel::equal_up_to_k;
  }
  v.lhs = std::move(lhs);
  v.rhs = std::move(rhs);
  return v;
}

}  // namespace

DominanceVerdict dominance(const Graph& g, int x, const Graph& g2, int x2, int k_max) {
  if (x < 0 || x >= g.order() || x2 < 0 || x2 >= g2.order())
    throw std::out_of_range("vertex id out of range");
  if (k_max < 1) throw std::invalid_argument("dominance horizon must be >= 1");
  const WalkCountTable ta = walk_table(g, k_max);
  std::vector<BigNat> lhs, rhs;
  lhs.reserve(static_cast<std::size_t>(k_max) + 1);
  rhs.reserve(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k)
    lhs.push_back(ta.counts[static_cast<std::size_t>(k)](x, x));
  if (g2 == g) {
    for (int k = 0; k <= k_max; ++k)
      rhs.push_back(ta.counts[static_cast<std::size_t>(k)](x2, x2));
  } else {
    const WalkCountTable tb = walk_table(g2, k_max);
    for (int k = 0; k <= k_max; ++k)
      rhs.push_back(tb.counts[static_cast<std::size_t>(k)](x2, x2));
  }
  return classify(std::move(lhs), std::move(rhs), k_max);
}

DominanceVerdict pair_dominance(const Graph& g, int w, int v, int u, int k_max) {
  if (w < 0 || w >= g.order() || v < 0 || v >= g.order() || u < 0 || u >= g.order())
    throw std::out_of_range("vertex id out of range");
  if (k_max < 1) throw std::invalid_argument("dominance horizon must be >= 1");
  const WalkCountTable t = walk_table(g, k_max);
  std::vector<BigNat> lhs, rhs;
  lhs.reserve(static_cast<std::size_t>(k_max) + 1);
  rhs.reserve(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) {
    lhs.push_back(t.counts[static_cast<std::size_t>(k)](w, v));
    rhs.push_back(t.counts[static_cast<std::size_t>(k)](w, u));
  }
  return classify(std::move(lhs), std::move(rhs), k_max);
}

}  // namespace slee
