#include <slee/canonical.hpp>
#include <slee/graph.hpp>
#include <slee/graph6.hpp>
#include <slee/invariants.hpp>
#include <slee/search.hpp>
#include <slee/spectral.hpp>

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace slee;

TEST_SUITE_BEGIN("search");

TEST_CASE("class counts match the classical enumeration") {
  CHECK(enumerate_classes(0).size() == 1);
  CHECK(enumerate_classes(1).size() == 1);
  CHECK(enumerate_classes(2).size() == 2);
  CHECK(enumerate_classes(3).size() == 4);
  CHECK(enumerate_classes(4).size() == 11);
  CHECK(enumerate_classes(5).size() == 34);
  CHECK(enumerate_classes(5, true).size() == 21);
  CHECK(enumerate_classes(6).size() == 156);
  CHECK(enumerate_classes(6, true).size() == 112);
  CHECK(enumerate_classes(7).size() == 1044);
  CHECK(enumerate_classes(7, true).size() == 853);
}

TEST_CASE("enumeration yields distinct canonical representatives in order") {
  std::vector<Graph> classes = enumerate_classes(5);
  for (std::size_t i = 0; i + 1 < classes.size(); ++i) {
    CHECK(canonical_form(classes[i]) < canonical_form(classes[i + 1]));
    CHECK_FALSE(is_isomorphic(classes[i], classes[i + 1]));
  }
}

TEST_CASE("enumeration cap is a cost guard, not a crash") {
  CHECK_THROWS_AS(enumerate_classes(8), budget_error);
  CHECK_THROWS_AS(load_source(GraphSource::generated(8)), budget_error);
}

TEST_CASE("the expected maximizers by construction") {
  CHECK(is_isomorphic(expected_extremal({ClassSpec::Kind::cut_edges, 6, 0}),
                      complete(6)));
  CHECK(is_isomorphic(
      expected_extremal({ClassSpec::Kind::vertex_connectivity, 6, 0}),
      disjoint_union(complete(5), complete(1))));
  CHECK(is_isomorphic(
      expected_extremal({ClassSpec::Kind::vertex_connectivity, 6, 5}),
      complete(6)));
  CHECK(is_isomorphic(
      expected_extremal({ClassSpec::Kind::pendant_vertices, 6, 5}), star(6)));
}

TEST_CASE("search finds the decorated clique in every cut-edge class at n=5") {
  std::vector<Graph> candidates = enumerate_classes(5);
  for (int r = 0; r <= 2; ++r) {
    SearchReport report =
        extremal_search(candidates, {ClassSpec::Kind::cut_edges, 5, r});
    CHECK(report.verdict == SearchReport::Verdict::unique_match);
    CHECK(report.expected_in_class);
    REQUIRE(report.maximizers.size() == 1);
    CHECK(report.maximizers.front() == report.expected);
    CHECK(is_isomorphic(parse_graph6(report.maximizers.front()), g_nr(5, r)));
  }
}

TEST_CASE("ranking is sorted and consistent") {
  std::vector<Graph> candidates = enumerate_classes(5);
  SearchReport report =
      extremal_search(candidates, {ClassSpec::Kind::pendant_vertices, 5, 1});
  CHECK(report.candidates_examined == 34);
  CHECK(report.in_class > 1);
  CHECK(static_cast<long long>(report.ranking.size()) == report.in_class);
  for (std::size_t i = 0; i + 1 < report.ranking.size(); ++i)
    CHECK(report.ranking[i].slee >= report.ranking[i + 1].slee);
  for (const RankedEntry& e : report.ranking) {
    Graph g = parse_graph6(e.graph6);
    CHECK(member_of(g, report.spec));
    CHECK(e.slee == doctest::Approx(slee::slee(g)).epsilon(1e-12));
  }
}

TEST_CASE("the pendant-count class at r = n-2 exposes the collapsed construction") {
  // the construction for r pendants degenerates to the star when r = n-2,
  // and the star has n-1 pendants, so the conjectured maximizer is not even
  // in the class; the true maximizer is the double star
  std::vector<Graph> candidates = enumerate_classes(5);
  SearchReport report =
      extremal_search(candidates, {ClassSpec::Kind::pendant_vertices, 5, 3});
  CHECK(report.verdict == SearchReport::Verdict::mismatch);
  CHECK_FALSE(report.expected_in_class);
  CHECK(is_isomorphic(parse_graph6(report.expected), star(5)));
  REQUIRE(report.maximizers.size() == 1);
  Graph double_star =
      Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}});
  CHECK(is_isomorphic(parse_graph6(report.maximizers.front()), double_star));
}

TEST_CASE("parallel evaluation returns exactly the serial report") {
  std::vector<Graph> candidates = enumerate_classes(6);
  ClassSpec spec{ClassSpec::Kind::vertex_connectivity, 6, 2};
  SearchReport serial = extremal_search(candidates, spec, 1e-9, 1);
  SearchReport parallel = extremal_search(candidates, spec, 1e-9, 4);
  CHECK(report_json(serial, -1) == report_json(parallel, -1));
}

TEST_CASE("empty classes are reported, not crashed") {
  // a file holding only K_3 cannot populate a 2-cut-edge class
  const std::string fname = "empty_class_input.g6";
  {
    std::ofstream out(fname);
    out << "Bw\n";
  }
  std::vector<Graph> candidates = load_source(GraphSource::from_file(fname));
  std::remove(fname.c_str());
  SearchReport report =
      extremal_search(candidates, {ClassSpec::Kind::cut_edges, 3, 0});
  CHECK(report.candidates_examined == 1);
  CHECK(report.in_class == 1);
  CHECK(report.verdict == SearchReport::Verdict::unique_match);

  // order mismatch empties the class entirely
  SearchReport empty =
      extremal_search(candidates, {ClassSpec::Kind::cut_edges, 5, 0});
  CHECK(empty.in_class == 0);
  CHECK(empty.maximizers.empty());
  CHECK(empty.verdict == SearchReport::Verdict::empty_class);
}

TEST_CASE("file sources deduplicate isomorphic entries") {
  const std::string fname = "dup_input.g6";
  {
    std::ofstream out(fname);
    // P_3 under two labelings, plus K_3
    out << write_graph6(path(3)) << "\n";
    out << write_graph6(relabel(path(3), {1, 0, 2})) << "\n";
    out << "Bw\n";
  }
  std::vector<Graph> candidates = load_source(GraphSource::from_file(fname));
  std::remove(fname.c_str());
  SearchReport report =
      extremal_search(candidates, {ClassSpec::Kind::pendant_vertices, 3, 2});
  CHECK(report.candidates_examined == 3);
  CHECK(report.in_class == 1);  // the two P_3 copies collapse
}

TEST_CASE("missing source files raise a readable error") {
  CHECK_THROWS_AS(load_source(GraphSource::from_file("no_such_file.g6")),
                  std::runtime_error);
}

TEST_CASE("theorem sweeps at n = 5") {
  TheoremReport cut = verify_theorem(ClassSpec::Kind::cut_edges, 5);
  CHECK(cut.pass);
  CHECK(cut.reports.size() == 3);  // r = 0, 1, 2
  CHECK(cut.notes.empty());       // max slee strictly decreases in r

  TheoremReport vc = verify_theorem(ClassSpec::Kind::vertex_connectivity, 5);
  CHECK(vc.pass);
  CHECK(vc.reports.size() == 5);

  TheoremReport ec = verify_theorem(ClassSpec::Kind::edge_connectivity, 5);
  CHECK(ec.pass);

  TheoremReport pend = verify_theorem(ClassSpec::Kind::pendant_vertices, 5);
  CHECK_FALSE(pend.pass);  // the r = n-2 class has no collapsed construction
  REQUIRE(pend.reports.size() == 5);
  CHECK(pend.reports[3].verdict == SearchReport::Verdict::mismatch);
  for (int r : {0, 1, 2, 4})
    CHECK(pend.reports[r].verdict == SearchReport::Verdict::unique_match);
}

TEST_CASE("clique merge sweep holds through ten total vertices") {
  std::vector<CliqueMergeCase> cases = clique_merge_sweep(10);
  CHECK(cases.size() > 20);
  for (const CliqueMergeCase& c : cases) {
    CHECK(c.pass);
    CHECK(c.split < c.merged);
    CHECK(c.p >= c.q);
    CHECK(c.q >= 2);
    CHECK(c.r >= 1);
    CHECK(c.p + c.q + c.r <= 10);
  }
  CHECK_THROWS_AS(clique_merge_sweep(4), std::invalid_argument);
}

TEST_CASE("reports serialize deterministically") {
  std::vector<Graph> candidates = enumerate_classes(5);
  ClassSpec spec{ClassSpec::Kind::cut_edges, 5, 1};
  SearchReport a = extremal_search(candidates, spec);
  SearchReport b = extremal_search(candidates, spec);
  CHECK(report_json(a, 10) == report_json(b, 10));
  CHECK(report_csv(a) == report_csv(b));

  const std::string csv = report_csv(a);
  CHECK(csv.rfind("rank,graph6,slee\n", 0) == 0);
  CHECK(csv.find("1,") != std::string::npos);
}

TEST_SUITE_END();
