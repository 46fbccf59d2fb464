#include <slee/search.hpp>

#include <slee/format.hpp>
#include <slee/graph6.hpp>
#include <slee/spectral.hpp>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace slee {

GraphSource GraphSource::generated(int n, bool connected_only) {
  GraphSource s;
  s.kind = Kind::generated;
  s.n = n;
  s.connected_only = connected_only;
  return s;
}

GraphSource GraphSource::from_file(std::string path) {
  GraphSource s;
  s.kind = Kind::file;
  s.path = std::move(path);
  return s;
}

namespace {

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> edges;
  int t = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row, ++t)
      if (mask >> t & 1) edges.emplace_back(row, col);
  return Graph::from_edges(n, edges);
}

std::set<CanonicalForm> classes_by_exhaustion(int n) {
  std::set<CanonicalForm> seen;
  const int bits = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask)
    seen.insert(canonical_form(graph_from_mask(n, mask)));
  return seen;
}

// Every graph on n vertices arises by deleting one vertex and re-attaching
// it, so extending each (n-1)-class representative by one vertex with every
// possible neighborhood reaches every n-class.
std::set<CanonicalForm> classes_by_extension(int n,
                                             const std::vector<Graph>& smaller) {
  std::set<CanonicalForm> seen;
  for (const Graph& h : smaller) {
    auto base = h.edges();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
      auto edges = base;
      for (int v = 0; v < n - 1; ++v)
        if (mask >> v & 1) edges.emplace_back(v, n - 1);
      seen.insert(canonical_form(Graph::from_edges(n, edges)));
    }
  }
  return seen;
}

}  // namespace

std::vector<Graph> enumerate_classes(int n, bool connected_only, int cap) {
  if (n < 0) throw std::invalid_argument("enumerate_classes: negative order");
  if (n > cap)
    throw budget_error("enumerate_classes: order " + std::to_string(n) +
                       " exceeds the enumeration cap of " + std::to_string(cap));
  std::set<CanonicalForm> seen;
  if (n <= 6) {
    seen = classes_by_exhaustion(n);
  } else {
    seen = classes_by_extension(n, enumerate_classes(n - 1, false, cap));
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (const CanonicalForm& form : seen) {
    Graph g = from_canonical(form);
    if (connected_only && !is_connected(g)) continue;
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> load_source(const GraphSource& source, int cap) {
  if (source.kind == GraphSource::Kind::generated)
    return enumerate_classes(source.n, source.connected_only, cap);
  std::ifstream in(source.path);
  if (!in)
    throw std::runtime_error("cannot open graph6 file: " + source.path);
  return read_graph6_lines(in);
}

Graph expected_extremal(const ClassSpec& spec) {
  validate(spec);
  switch (spec.kind) {
    case ClassSpec::Kind::cut_edges:
    case ClassSpec::Kind::pendant_vertices:
      return g_nr(spec.n, spec.param);
    case ClassSpec::Kind::vertex_connectivity:
    case ClassSpec::Kind::edge_connectivity:
      return k_pqr(spec.n - 1 - spec.param, 1, spec.param);
  }
  throw std::logic_error("expected_extremal: unreachable");
}

namespace {

std::vector<RankedEntry> rank_slice(const std::vector<Graph>& candidates,
                                    const ClassSpec& spec, std::size_t lo,
                                    std::size_t hi) {
  std::vector<RankedEntry> out;
  for (std::size_t i = lo; i < hi; ++i) {
    const Graph& g = candidates[i];
    if (!member_of(g, spec)) continue;
    RankedEntry e;
    e.canon = canonical_form(g);
    Graph rep = from_canonical(e.canon);
    e.graph6 = write_graph6(rep);
    e.slee = slee(rep);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

SearchReport extremal_search(const std::vector<Graph>& candidates,
                             const ClassSpec& spec, double tie_tol, int jobs) {
  validate(spec);
  if (!(tie_tol >= 0.0))
    throw std::invalid_argument("extremal_search: tie tolerance must be >= 0");
  if (jobs < 1) jobs = 1;

  SearchReport report;
  report.spec = spec;
  report.candidates_examined = static_cast<long long>(candidates.size());
  report.tie_tolerance = tie_tol;

  std::vector<RankedEntry> entries;
  if (jobs == 1 || candidates.size() < 2 * static_cast<std::size_t>(jobs)) {
    entries = rank_slice(candidates, spec, 0, candidates.size());
  } else {
    std::vector<std::future<std::vector<RankedEntry>>> parts;
    const std::size_t chunk = (candidates.size() + jobs - 1) / jobs;
    for (std::size_t lo = 0; lo < candidates.size(); lo += chunk) {
      const std::size_t hi = std::min(lo + chunk, candidates.size());
      parts.push_back(std::async(std::launch::async, rank_slice,
                                 std::cref(candidates), std::cref(spec), lo,
                                 hi));
    }
    for (auto& part : parts)
      for (auto& e : part.get()) entries.push_back(std::move(e));
  }

  // Collapse isomorphic duplicates, then order by slee (descending) with the
  // canonical form as a deterministic tiebreak.
  std::sort(entries.begin(), entries.end(),
            [](const RankedEntry& a, const RankedEntry& b) {
              return a.canon < b.canon;
            });
  entries.erase(std::unique(entries.begin(), entries.end(),
                            [](const RankedEntry& a, const RankedEntry& b) {
                              return a.canon == b.canon;
                            }),
                entries.end());
  std::sort(entries.begin(), entries.end(),
            [](const RankedEntry& a, const RankedEntry& b) {
              if (a.slee != b.slee) return a.slee > b.slee;
              return a.canon < b.canon;
            });
  report.in_class = static_cast<long long>(entries.size());
  report.ranking = std::move(entries);

  const Graph expected = expected_extremal(spec);
  const CanonicalForm expected_canon = canonical_form(expected);
  report.expected = write_graph6(from_canonical(expected_canon));
  for (const RankedEntry& e : report.ranking)
    if (e.canon == expected_canon) {
      report.expected_in_class = true;
      break;
    }

  if (report.ranking.empty()) {
    report.verdict = SearchReport::Verdict::empty_class;
    return report;
  }

  const double best = report.ranking.front().slee;
  const double cutoff = best - tie_tol * std::max(1.0, std::fabs(best));
  bool expected_is_max = false;
  for (const RankedEntry& e : report.ranking) {
    if (e.slee < cutoff) break;
    report.maximizers.push_back(e.graph6);
    if (e.canon == expected_canon) expected_is_max = true;
  }

  if (!expected_is_max)
    report.verdict = SearchReport::Verdict::mismatch;
  else if (report.maximizers.size() == 1)
    report.verdict = SearchReport::Verdict::unique_match;
  else
    report.verdict = SearchReport::Verdict::tie;
  return report;
}

std::string to_string(SearchReport::Verdict v) {
  switch (v) {
    case SearchReport::Verdict::unique_match: return "unique-match";
    case SearchReport::Verdict::tie: return "tie";
    case SearchReport::Verdict::mismatch: return "mismatch";
    case SearchReport::Verdict::empty_class: return "empty-class";
  }
  return "unknown";
}

TheoremReport verify_theorem(ClassSpec::Kind kind, int n, double tie_tol,
                             int jobs, int cap) {
  if (n < 1) throw std::invalid_argument("verify_theorem: order must be >= 1");
  TheoremReport tr;
  tr.kind = kind;
  tr.n = n;

  int param_max = 0;
  switch (kind) {
    case ClassSpec::Kind::cut_edges: param_max = n - 3; break;
    case ClassSpec::Kind::pendant_vertices: param_max = n - 1; break;
    case ClassSpec::Kind::vertex_connectivity:
    case ClassSpec::Kind::edge_connectivity: param_max = n - 1; break;
  }

  const std::vector<Graph> candidates = enumerate_classes(n, false, cap);
  tr.pass = true;
  for (int param = 0; param <= param_max; ++param) {
    ClassSpec spec{kind, n, param};
    SearchReport report = extremal_search(candidates, spec, tie_tol, jobs);
    if (report.verdict != SearchReport::Verdict::unique_match) tr.pass = false;
    tr.reports.push_back(std::move(report));
  }

  if (kind == ClassSpec::Kind::cut_edges) {
    // The top slee value should shrink as cut edges are forced in; record
    // any violation as a note rather than a failure.
    for (std::size_t i = 0; i + 1 < tr.reports.size(); ++i) {
      const auto& a = tr.reports[i];
      const auto& b = tr.reports[i + 1];
      if (a.ranking.empty() || b.ranking.empty()) continue;
      if (!(b.ranking.front().slee < a.ranking.front().slee))
        tr.notes.push_back(
            "maximum slee did not decrease from " + std::to_string(i) + " to " +
            std::to_string(i + 1) + " cut edges at order " + std::to_string(n));
    }
  }
  return tr;
}

std::vector<CliqueMergeCase> clique_merge_sweep(int max_total) {
  if (max_total < 5)
    throw std::invalid_argument("clique_merge_sweep: total must be >= 5");
  std::vector<CliqueMergeCase> out;
  for (int p = 2; p + 3 <= max_total; ++p)
    for (int q = 2; q <= p && p + q + 1 <= max_total; ++q)
      for (int r = 1; p + q + r <= max_total; ++r) {
        CliqueMergeCase c;
        c.p = p;
        c.q = q;
        c.r = r;
        c.split = slee(k_pqr(p, q, r));
        c.merged = slee(k_pqr(p + q - 1, 1, r));
        c.pass = c.split < c.merged;
        out.push_back(c);
      }
  return out;
}

namespace {

nlohmann::ordered_json report_to_json(const SearchReport& report, int top_k) {
  nlohmann::ordered_json j;
  j["spec"] = {{"kind", to_string(report.spec.kind)},
               {"n", report.spec.n},
               {"param", report.spec.param}};
  j["candidates_examined"] = report.candidates_examined;
  j["in_class"] = report.in_class;
  j["tie_tolerance"] = report.tie_tolerance;
  nlohmann::ordered_json ranking = nlohmann::ordered_json::array();
  const int limit = top_k < 0 ? static_cast<int>(report.ranking.size())
                              : std::min<int>(top_k, report.ranking.size());
  for (int i = 0; i < limit; ++i) {
    const RankedEntry& e = report.ranking[i];
    ranking.push_back({{"rank", i + 1}, {"graph6", e.graph6}, {"slee", e.slee}});
  }
  j["ranking"] = std::move(ranking);
  j["maximizers"] = report.maximizers;
  j["expected"] = report.expected;
  j["expected_in_class"] = report.expected_in_class;
  j["verdict"] = to_string(report.verdict);
  return j;
}

}  // namespace

std::string report_json(const SearchReport& report, int top_k) {
  return report_to_json(report, top_k).dump(2);
}

std::string theorem_json(const TheoremReport& report, int top_k) {
  nlohmann::ordered_json j;
  j["theorem"] = to_string(report.kind);
  j["n"] = report.n;
  j["pass"] = report.pass;
  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  for (const SearchReport& r : report.reports)
    reports.push_back(report_to_json(r, top_k));
  j["reports"] = std::move(reports);
  j["notes"] = report.notes;
  return j.dump(2);
}

std::string report_csv(const SearchReport& report) {
  std::ostringstream out;
  out << "rank,graph6,slee\n";
  for (std::size_t i = 0; i < report.ranking.size(); ++i)
    out << i + 1 << ',' << report.ranking[i].graph6 << ','
        << format_sig(report.ranking[i].slee) << '\n';
  return out.str();
}

}  // namespace slee
