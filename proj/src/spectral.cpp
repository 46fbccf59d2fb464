#include "slee/spectral.hpp"

#include <cfloat>
#include <cmath>
#include <stdexcept>

namespace slee {

Spectrum eigenvalues_sym(const Eigen::MatrixXd& m, Spectrum::Source source, double tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix not square");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const double fro = m.norm();
  if ((m - m.transpose()).norm() > tol * fro)
    throw std::invalid_argument("matrix not symmetric within tolerance");
  if (m.rows() == 0) {
    Spectrum s;
    s.source = source;
    s.values.resize(0);
    return s;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("symmetric eigensolver failed to converge");
  Spectrum s;
  s.source = source;
  s.values = solver.eigenvalues().reverse();
  return s;
}

Spectrum q_spectrum(const Graph& g) {
  return eigenvalues_sym(q_matrix<double>(g), Spectrum::Source::q);
}

Spectrum l_spectrum(const Graph& g) {
  return eigenvalues_sym(l_matrix<double>(g), Spectrum::Source::l);
}

namespace {

double exp_sum(const Eigen::VectorXd& values, int max_degree) {
  // e^{q_1} <= e^{2*max_degree}; reject inputs that would overflow doubles.
  if (2.0 * max_degree >= 700.0)
    throw std::overflow_error("exp overflow: spectrum radius exceeds floating range");
  double s = 0.0;
  for (Eigen::Index i = 0; i < values.size(); ++i) s += std::exp(values[i]);
  return s;
}

template <class Scalar>
std::vector<BigNat> moment_loop(const Graph& g, int k_max) {
  const auto q = q_matrix<Scalar>(g);
  SquareMatrix<Scalar> power(g.order(), g.order());
  power.setIdentity();
  std::vector<BigNat> out;
  out.reserve(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0;; ++k) {
    Scalar tr = power.trace();
    if constexpr (std::is_same_v<Scalar, BigNat>) {
      out.push_back(std::move(tr));
    } else {
      out.push_back(BigNat::from_u128(tr));
    }
    if (k == k_max) break;
    power = (power * q).eval();
  }
  return out;
}

}  // namespace

double slee(const Graph& g) { return exp_sum(q_spectrum(g).values, g.max_degree()); }

double lee(const Graph& g) { return exp_sum(l_spectrum(g).values, g.max_degree()); }

MomentVector moments(const Graph& g, int k_max) {
  if (k_max < 0) throw std::invalid_argument("negative moment index");
  MomentVector mv;
  mv.k_max = k_max;
  const int n = g.order();
  if (n == 0) {  // Eigen's reductions reject empty matrices
    mv.values.assign(static_cast<std::size_t>(k_max) + 1, BigNat());
    return mv;
  }
  const int two_delta = 2 * g.max_degree();
  // T_k <= n * (2*max_degree)^k; stay in 128 bits when that bound stays
  // below 2^126 (margin included), escalate otherwise.
  bool fits_u128 = true;
  if (n > 0 && two_delta > 1) {
    const double bits = std::log2(static_cast<double>(n)) +
                        static_cast<double>(k_max) * std::log2(static_cast<double>(two_delta));
    fits_u128 = bits < 126.0;
  }
  mv.values = fits_u128 ? moment_loop<unsigned __int128>(g, k_max)
                        : moment_loop<BigNat>(g, k_max);
  return mv;
}

SeriesValue slee_series(const Graph& g, int k_max) {
  if (k_max < 0) throw std::invalid_argument("negative series order");
  const MomentVector mv = moments(g, k_max);
  long double sum = 0.0L;
  long double factorial = 1.0L;
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) factorial *= static_cast<long double>(k);
    sum += mv.values[static_cast<std::size_t>(k)].to_long_double() / factorial;
  }
  const int n = g.order();
  const long double two_delta = 2.0L * static_cast<long double>(g.max_degree());
  const long double scale = static_cast<long double>(n) * std::exp(two_delta);
  long double ratio = 1.0L;  // (2*max_degree)^{K+1} / (K+1)!
  for (int j = 1; j <= k_max + 1; ++j) ratio *= two_delta / static_cast<long double>(j);
  const long double truncation = scale * ratio;
  const long double round_off =
      static_cast<long double>(DBL_EPSILON) * scale *
      (4.0L * static_cast<long double>(k_max + 2) +
       16.0L * static_cast<long double>(n) * (two_delta + 1.0L));
  SeriesValue sv;
  sv.value = static_cast<double>(sum);
  sv.tail_bound = static_cast<double>(truncation + round_off);
  return sv;
}

}  // namespace slee
