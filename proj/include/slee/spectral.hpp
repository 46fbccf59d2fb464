// spectral.hpp -- signless Laplacian / Laplacian matrices, symmetric
// eigensolves, the two Estrada-type indices, and exact spectral moments with
// the truncated-series cross-check.
#pragma once

#include "slee/exact.hpp"
#include "slee/graph.hpp"

#include <Eigen/Dense>

#include <bit>
#include <cstdint>
#include <vector>

namespace slee {

// D + A: diagonal = degrees, off-diagonal = adjacency indicators.
template <class Scalar = double>
SquareMatrix<Scalar> q_matrix(const Graph& g) {
  const int n = g.order();
  SquareMatrix<Scalar> m(n, n);
  m.setZero();
  for (int v = 0; v < n; ++v) {
    m(v, v) = Scalar(g.degree(v));
    std::uint64_t nb = g.neighbor_mask(v);
    while (nb != 0) {
      const int u = std::countr_zero(nb);
      nb &= nb - 1;
      m(v, u) = Scalar(1);
    }
  }
  return m;
}

// D - A.
template <class Scalar = double>
SquareMatrix<Scalar> l_matrix(const Graph& g) {
  const int n = g.order();
  SquareMatrix<Scalar> m(n, n);
  m.setZero();
  for (int v = 0; v < n; ++v) {
    m(v, v) = Scalar(g.degree(v));
    std::uint64_t nb = g.neighbor_mask(v);
    while (nb != 0) {
      const int u = std::countr_zero(nb);
      nb &= nb - 1;
      m(v, u) = -Scalar(1);
    }
  }
  return m;
}

struct Spectrum {
  enum class Source { q, l };
  Source source = Source::q;
  Eigen::VectorXd values;  // sorted descending
};

// Symmetric eigensolve (orthogonal-similarity reduction, deterministic).
// The input must be symmetric within tol * (Frobenius norm); eigenvalues come
// back sorted descending. Throws on asymmetric input or non-convergence.
Spectrum eigenvalues_sym(const Eigen::MatrixXd& m, Spectrum::Source source,
                         double tol = 1e-12);

Spectrum q_spectrum(const Graph& g);
Spectrum l_spectrum(const Graph& g);

// Sum of e^{eigenvalue} over the Q spectrum (resp. L spectrum).
double slee(const Graph& g);
double lee(const Graph& g);

struct MomentVector {
  int k_max = 0;
  std::vector<BigNat> values;  // values[k] = trace(Q^k), exact
};

// Exact spectral moments T_0..T_k_max. 128-bit accumulation when an a-priori
// bound shows it cannot overflow, arbitrary precision otherwise.
MomentVector moments(const Graph& g, int k_max);

struct SeriesValue {
  double value = 0.0;
  double tail_bound = 0.0;
};

// Partial sum of T_k/k! for k <= k_max plus a bound on |value - slee(g)|
// covering both the dropped tail (via q_1 <= 2*max_degree) and the floating
// round-off of the two evaluation routes.
SeriesValue slee_series(const Graph& g, int k_max);

}  // namespace slee
