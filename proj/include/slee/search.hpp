#pragma once

#include <slee/canonical.hpp>
#include <slee/graph.hpp>
#include <slee/invariants.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace slee {

// Where search candidates come from: either the built-in enumeration of
// isomorphism classes on n vertices, or a user-supplied graph6 file.
struct GraphSource {
  enum class Kind { generated, file };

  Kind kind = Kind::generated;
  int n = 0;
  bool connected_only = false;
  std::string path;

  static GraphSource generated(int n, bool connected_only = false);
  static GraphSource from_file(std::string path);
};

// All isomorphism classes of simple graphs on n vertices, one canonical
// representative each, sorted by canonical form.  Small orders are done by
// exhausting every adjacency bitmask; larger orders extend the classes on
// n-1 vertices by one new vertex.  Throws budget_error when n exceeds cap.
std::vector<Graph> enumerate_classes(int n, bool connected_only = false,
                                     int cap = 7);

std::vector<Graph> load_source(const GraphSource& source, int cap = 7);

struct RankedEntry {
  CanonicalForm canon;
  std::string graph6;
  double slee = 0.0;
};

struct SearchReport {
  enum class Verdict { unique_match, tie, mismatch, empty_class };

  ClassSpec spec;
  long long candidates_examined = 0;
  long long in_class = 0;
  double tie_tolerance = 0.0;
  std::vector<RankedEntry> ranking;  // slee descending, canonical ascending
  std::vector<std::string> maximizers;  // graph6 of every entry within tie tol
  std::string expected;                 // graph6 of the conjectured maximizer
  bool expected_in_class = false;
  Verdict verdict = Verdict::empty_class;
};

std::string to_string(SearchReport::Verdict v);

// The conjectured maximizer for a class: a clique with pendants hanging off
// one vertex for the cut-edge / pendant-vertex classes, and a clique joined
// to a near-clique plus isolated-ish vertex for the connectivity classes.
Graph expected_extremal(const ClassSpec& spec);

SearchReport extremal_search(const std::vector<Graph>& candidates,
                             const ClassSpec& spec, double tie_tol = 1e-9,
                             int jobs = 1);

struct TheoremReport {
  ClassSpec::Kind kind = ClassSpec::Kind::cut_edges;
  int n = 0;
  std::vector<SearchReport> reports;  // one per parameter value
  bool pass = false;                  // every verdict unique_match
  std::vector<std::string> notes;     // advisory observations, not asserted
};

// Sweep every admissible parameter value for the class kind at order n and
// check that the conjectured maximizer is the unique one found by search.
TheoremReport verify_theorem(ClassSpec::Kind kind, int n,
                             double tie_tol = 1e-9, int jobs = 1, int cap = 7);

struct CliqueMergeCase {
  int p = 0, q = 0, r = 0;
  double split = 0.0;   // slee of (K_p u K_q) joined with K_r
  double merged = 0.0;  // slee of (K_{p+q-1} u K_1) joined with K_r
  bool pass = false;    // split < merged
};

// For every p >= q >= 2, r >= 1 with p+q+r <= max_total, merging the two
// cliques into one (keeping an isolated vertex) must strictly increase slee.
std::vector<CliqueMergeCase> clique_merge_sweep(int max_total = 10);

std::string report_json(const SearchReport& report, int top_k = 10);
std::string theorem_json(const TheoremReport& report, int top_k = 10);
std::string report_csv(const SearchReport& report);

}  // namespace slee
