#include <slee/graph.hpp>
#include <slee/graph6.hpp>

#include <doctest.h>

#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace slee;

TEST_SUITE_BEGIN("graph6");

TEST_CASE("hand-derived encodings of tiny graphs") {
  CHECK(write_graph6(complete(2)) == "A_");
  CHECK(write_graph6(complete(3)) == "Bw");
  CHECK(write_graph6(empty_graph(5)) == "D??");
  CHECK(write_graph6(empty_graph(0)) == "?");
  CHECK(write_graph6(complete(5)) == "D~{");

  CHECK(parse_graph6("A_") == complete(2));
  CHECK(parse_graph6("Bw") == complete(3));
  CHECK(parse_graph6("D??") == empty_graph(5));
  CHECK(parse_graph6("?") == empty_graph(0));
  CHECK(parse_graph6("A?") == empty_graph(2));
}

TEST_CASE("optional format prefix is accepted") {
  CHECK(parse_graph6(">>graph6<<A_") == complete(2));
}

TEST_CASE("long-form headers for n > 62") {
  Graph g = empty_graph(63);
  std::string s = write_graph6(g);
  CHECK(s.size() == 4 + (63 * 62 / 2 + 5) / 6);
  CHECK(s[0] == '~');
  CHECK(parse_graph6(s) == g);
}

TEST_CASE("round trip over every isomorphism-class representative, n <= 5") {
  // all 2^C(n,2) labeled graphs is a superset of class representatives
  for (int n = 0; n <= 5; ++n) {
    const int bits = n * (n - 1) / 2;
    for (unsigned mask = 0; mask < (1u << bits); ++mask) {
      std::vector<std::pair<int, int>> edges;
      int t = 0;
      for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++t)
          if (mask >> t & 1) edges.emplace_back(row, col);
      Graph g = Graph::from_edges(n, edges);
      CHECK(parse_graph6(write_graph6(g)) == g);
    }
  }
}

TEST_CASE("round trip over 100 random graphs, n <= 20") {
  std::mt19937 rng(20260822);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + int(rng() % 20);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u)
        if (rng() % 2 == 0) edges.emplace_back(u, v);
    Graph g = Graph::from_edges(n, edges);
    CHECK(parse_graph6(write_graph6(g)) == g);
  }
}

namespace {

graph6_errc error_code_of(const std::string& input) {
  try {
    parse_graph6(input);
  } catch (const graph6_error& e) {
    return e.code();
  }
  FAIL("no graph6_error thrown for: ", input);
  return graph6_errc::empty_input;
}

}  // namespace

TEST_CASE("ten malformed inputs hit ten distinct error categories") {
  CHECK(error_code_of("") == graph6_errc::empty_input);
  CHECK(error_code_of(":Fa@x^") == graph6_errc::unsupported_format);
  CHECK(error_code_of(">>sparse6<<:Fa@x^") == graph6_errc::unsupported_format);
  CHECK(error_code_of(">>graph5<<A_") == graph6_errc::bad_prefix);
  CHECK(error_code_of(" A") == graph6_errc::invalid_char_header);
  CHECK(error_code_of("B\x7f") == graph6_errc::invalid_char_body);
  CHECK(error_code_of("~B") == graph6_errc::truncated_header);
  CHECK(error_code_of("~?B?") == graph6_errc::order_too_large);
  CHECK(error_code_of("D?") == graph6_errc::truncated_bits);
  CHECK(error_code_of("B@") == graph6_errc::nonzero_padding);
  CHECK(error_code_of("A_?") == graph6_errc::trailing_garbage);
}

TEST_CASE("error categories have distinct printable names") {
  std::vector<graph6_errc> all = {
      graph6_errc::empty_input,        graph6_errc::unsupported_format,
      graph6_errc::bad_prefix,         graph6_errc::invalid_char_header,
      graph6_errc::invalid_char_body,  graph6_errc::truncated_header,
      graph6_errc::order_too_large,    graph6_errc::truncated_bits,
      graph6_errc::nonzero_padding,    graph6_errc::trailing_garbage};
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      CHECK(std::string(to_string(all[i])) != to_string(all[j]));
}

TEST_CASE("line reader skips the header line and carriage returns") {
  std::istringstream in(">>graph6<<\r\nA_\r\nBw\n");
  std::vector<Graph> gs = read_graph6_lines(in);
  REQUIRE(gs.size() == 2);
  CHECK(gs[0] == complete(2));
  CHECK(gs[1] == complete(3));

  std::istringstream blank("A_\n\nBw\n");
  CHECK_THROWS_AS(read_graph6_lines(blank), graph6_error);
}

TEST_CASE("edge list round trip") {
  Graph g = g_nr(6, 2);
  std::istringstream in(write_edge_list(g));
  CHECK(parse_edge_list(in) == g);

  std::istringstream bad("3 1\n0 3\n");
  CHECK_THROWS(parse_edge_list(bad));
}

TEST_SUITE_END();
