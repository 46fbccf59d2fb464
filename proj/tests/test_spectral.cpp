#include <slee/graph.hpp>
#include <slee/spectral.hpp>

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

using namespace slee;

namespace {

Graph random_graph(std::mt19937& rng, int n, int denom) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (int(rng() % denom) == 0) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

}  // namespace

TEST_SUITE_BEGIN("spectral");

TEST_CASE("signless Laplacian of tiny graphs has known spectra") {
  // K_2: Q = [[1,1],[1,1]], eigenvalues 2, 0
  Spectrum s2 = q_spectrum(complete(2));
  REQUIRE(s2.values.size() == 2);
  CHECK(s2.values[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(s2.values[1] == doctest::Approx(0.0).epsilon(1e-12));

  // P_3: eigenvalues 3, 1, 0
  Spectrum s3 = q_spectrum(path(3));
  REQUIRE(s3.values.size() == 3);
  CHECK(s3.values[0] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(s3.values[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s3.values[2] == doctest::Approx(0.0).epsilon(1e-12));

  // K_n: eigenvalues 2n-2 once, n-2 with multiplicity n-1
  for (int n = 2; n <= 8; ++n) {
    Spectrum s = q_spectrum(complete(n));
    CHECK(s.values[0] == doctest::Approx(2.0 * n - 2).epsilon(1e-12));
    for (int i = 1; i < n; ++i)
      CHECK(s.values[i] == doctest::Approx(n - 2.0).epsilon(1e-12));
  }
}

TEST_CASE("slee of complete graphs matches the closed form") {
  for (int n = 2; n <= 10; ++n) {
    const double expect = std::exp(2.0 * n - 2) + (n - 1) * std::exp(n - 2.0);
    CHECK(slee::slee(complete(n)) ==
          doctest::Approx(expect).epsilon(1e-12));
  }
  CHECK(slee::slee(empty_graph(4)) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(slee::slee(complete(1)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("matrix builders: Q = D + A and L = D - A") {
  Graph g = path(3);
  auto q = q_matrix<double>(g);
  auto l = l_matrix<double>(g);
  CHECK(q(0, 0) == 1.0);
  CHECK(q(1, 1) == 2.0);
  CHECK(q(0, 1) == 1.0);
  CHECK(q(0, 2) == 0.0);
  CHECK(l(0, 1) == -1.0);
  CHECK(l(1, 1) == 2.0);
  CHECK((q + l).diagonal().sum() == doctest::Approx(2.0 * (1 + 2 + 1)));
}

TEST_CASE("eigenvalues_sym rejects asymmetric input") {
  Eigen::MatrixXd m(2, 2);
  m << 0, 1, 0, 0;
  CHECK_THROWS_AS(eigenvalues_sym(m, Spectrum::Source::q),
                  std::invalid_argument);
  Eigen::MatrixXd rect(2, 3);
  rect.setZero();
  CHECK_THROWS_AS(eigenvalues_sym(rect, Spectrum::Source::q),
                  std::invalid_argument);
}

TEST_CASE("exact moments of K_2 are powers of two") {
  MomentVector mv = moments(complete(2), 5);
  REQUIRE(mv.values.size() == 6);
  CHECK(mv.values[0] == BigNat(2));
  CHECK(mv.values[1] == BigNat(2));
  CHECK(mv.values[2] == BigNat(4));
  CHECK(mv.values[3] == BigNat(8));
  CHECK(mv.values[4] == BigNat(16));
  CHECK(mv.values[5] == BigNat(32));
}

TEST_CASE("low moments have combinatorial closed forms") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = random_graph(rng, 2 + int(rng() % 7), 2);
    MomentVector mv = moments(g, 2);
    // T_0 = n, T_1 = sum of degrees = 2m, T_2 = sum d_i^2 + 2m
    CHECK(mv.values[0] == BigNat(std::uint64_t(g.order())));
    CHECK(mv.values[1] == BigNat(std::uint64_t(2 * g.size())));
    std::uint64_t t2 = 2 * std::uint64_t(g.size());
    for (int v = 0; v < g.order(); ++v)
      t2 += std::uint64_t(g.degree(v)) * std::uint64_t(g.degree(v));
    CHECK(mv.values[2] == BigNat(t2));
  }
}

TEST_CASE("moments agree with eigenvalue power sums") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    Graph g = random_graph(rng, 2 + int(rng() % 6), 2);
    MomentVector mv = moments(g, 8);
    Spectrum s = q_spectrum(g);
    for (int k = 0; k <= 8; ++k) {
      long double power_sum = 0.0L;
      for (int i = 0; i < s.values.size(); ++i)
        power_sum += std::pow(static_cast<long double>(s.values[i]), k);
      const long double exact = mv.values[k].to_long_double();
      const long double scale = std::max<long double>(1.0L, exact);
      CHECK(std::fabs(power_sum - exact) / scale <= 1e-9L);
    }
  }
}

TEST_CASE("moment horizon 40 on K_6 needs more than 128 bits") {
  MomentVector mv = moments(complete(6), 40);
  // trace(Q^40) for K_6: 10^40 + 5*4^40, a 133-bit integer
  CHECK(mv.values[40].to_string() ==
        "10000000000000006044629098073145873530880");
  CHECK_FALSE(mv.values[40].fits_u64());
}

TEST_CASE("series route converges to the eigenvalue route") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = random_graph(rng, 2 + int(rng() % 5), 2);
    const double direct = slee::slee(g);
    SeriesValue sv = slee_series(g, 40);
    CHECK(std::fabs(sv.value - direct) <= sv.tail_bound);
    CHECK(std::fabs(sv.value - direct) <= 1e-8 * direct);
  }
}

TEST_CASE("series tail bound at horizon 30 on K_2 is below 1e-12") {
  SeriesValue sv = slee_series(complete(2), 30);
  CHECK(sv.tail_bound < 1e-12);
  CHECK(std::fabs(sv.value - slee::slee(complete(2))) <= sv.tail_bound);
}

TEST_CASE("series value is monotone in the horizon") {
  Graph g = g_nr(6, 2);
  double prev = slee_series(g, 1).value;
  for (int k = 2; k <= 30; ++k) {
    const double cur = slee_series(g, k).value;
    CHECK(cur >= prev);
    prev = cur;
  }
}

TEST_CASE("adding any edge strictly increases slee (spot check)") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(rng, 3 + int(rng() % 4), 2);
    for (int v = 1; v < g.order(); ++v)
      for (int u = 0; u < v; ++u) {
        if (g.has_edge(u, v)) continue;
        const double before = slee::slee(g);
        const double after = slee::slee(add_edge(g, u, v));
        CHECK(after > before * (1 + 1e-9));
      }
  }
}

TEST_CASE("bipartite graphs: signless and ordinary Laplacian spectra agree") {
  std::vector<Graph> samples = {path(6), star(7),
                                join(empty_graph(2), empty_graph(3)),
                                Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3},
                                                      {3, 4}, {4, 5}, {5, 0}})};
  for (const Graph& g : samples) {
    Spectrum q = q_spectrum(g);
    Spectrum l = l_spectrum(g);
    for (int i = 0; i < q.values.size(); ++i)
      CHECK(std::fabs(q.values[i] - l.values[i]) <= 1e-9);
    CHECK(std::fabs(slee::slee(g) - lee(g)) <= 1e-9 * slee::slee(g));
  }
}

TEST_CASE("an odd cycle separates the two spectra") {
  Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  Spectrum q = q_spectrum(c5);
  Spectrum l = l_spectrum(c5);
  double max_gap = 0.0;
  for (int i = 0; i < 5; ++i)
    max_gap = std::max(max_gap, std::fabs(q.values[i] - l.values[i]));
  CHECK(max_gap > 0.1);
}

TEST_CASE("degenerate orders") {
  CHECK(slee::slee(empty_graph(0)) == 0.0);
  CHECK(moments(empty_graph(0), 3).values == std::vector<BigNat>(4, BigNat(0)));
  CHECK(slee_series(empty_graph(1), 10).value == doctest::Approx(1.0));
}

TEST_SUITE_END();
