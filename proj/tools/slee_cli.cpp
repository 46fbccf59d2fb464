// slee command-line front end: compute spectral quantities, count semi-edge
// walks, compare anchored walk counts, build named graph families, run the
// extremal searches, and convert between graph encodings.
//
// Exit codes: 0 success / verification pass, 1 usage or input error,
// 2 verification fail, 3 cost-guard rejection.

#include <slee/format.hpp>
#include <slee/graph.hpp>
#include <slee/graph6.hpp>
#include <slee/invariants.hpp>
#include <slee/search.hpp>
#include <slee/spectral.hpp>
#include <slee/walks.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace slee;
using nlohmann::ordered_json;

struct GraphInput {
  std::string graph6;
  std::string graph6_file;
  std::string edge_list;
};

void add_graph_options(CLI::App* cmd, GraphInput& in) {
  auto* a = cmd->add_option("--graph6", in.graph6, "graph6 string");
  auto* b = cmd->add_option("--graph6-file", in.graph6_file,
                            "file with one graph6 line per graph");
  auto* c = cmd->add_option("--edge-list", in.edge_list,
                            "file with a 'n m' header then one 'u v' per edge");
  a->excludes(b);
  a->excludes(c);
  b->excludes(c);
}

std::vector<Graph> resolve_graphs(const GraphInput& in) {
  if (!in.graph6.empty()) return {parse_graph6(in.graph6)};
  if (!in.graph6_file.empty()) {
    std::ifstream f(in.graph6_file);
    if (!f) throw std::runtime_error("cannot open " + in.graph6_file);
    return read_graph6_lines(f);
  }
  if (!in.edge_list.empty()) {
    std::ifstream f(in.edge_list);
    if (!f) throw std::runtime_error("cannot open " + in.edge_list);
    return {parse_edge_list(f)};
  }
  return read_graph6_lines(std::cin);
}

Graph resolve_single(const GraphInput& in) {
  std::vector<Graph> gs = resolve_graphs(in);
  if (gs.size() != 1)
    throw std::runtime_error("expected exactly one graph, got " +
                             std::to_string(gs.size()));
  return gs.front();
}

void require_format(const std::string& format,
                    std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  std::string msg = "unsupported --format '" + format + "' here; allowed:";
  for (const char* a : allowed) msg += std::string(" ") + a;
  throw std::runtime_error(msg);
}

int enumeration_cap() {
  const char* s = std::getenv("SLEE_MAX_N");
  if (s == nullptr || *s == '\0') return 7;
  char* end = nullptr;
  const long v = std::strtol(s, &end, 10);
  if (end == s || *end != '\0' || v < 0 || v > kMaxOrder)
    throw std::runtime_error("SLEE_MAX_N must be an integer in [0, " +
                             std::to_string(kMaxOrder) + "]");
  return static_cast<int>(v);
}

int default_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

ClassSpec::Kind parse_class_kind(const std::string& name) {
  if (name == "cut-edges") return ClassSpec::Kind::cut_edges;
  if (name == "pendant-vertices") return ClassSpec::Kind::pendant_vertices;
  if (name == "vertex-connectivity") return ClassSpec::Kind::vertex_connectivity;
  if (name == "edge-connectivity") return ClassSpec::Kind::edge_connectivity;
  throw std::runtime_error(
      "unknown class '" + name +
      "'; expected cut-edges, pendant-vertices, vertex-connectivity, or "
      "edge-connectivity");
}

// ---- compute ----

struct ComputeOpts {
  GraphInput input;
  bool want_slee = false;
  bool want_lee = false;
  bool want_spectrum = false;
  bool want_moments = false;
  int horizon = 20;
  std::string format = "text";
};

int run_compute(const ComputeOpts& opt) {
  require_format(opt.format, {"text", "json"});
  if (!opt.want_slee && !opt.want_lee && !opt.want_spectrum &&
      !opt.want_moments)
    throw std::runtime_error(
        "nothing to compute; pass at least one of --slee --lee --spectrum "
        "--moments");
  if (opt.horizon < 0) throw std::runtime_error("--K must be >= 0");
  const std::vector<Graph> graphs = resolve_graphs(opt.input);
  const int quantities = int(opt.want_slee) + int(opt.want_lee) +
                         int(opt.want_spectrum) + int(opt.want_moments);

  ordered_json out_array = ordered_json::array();
  for (const Graph& g : graphs) {
    if (opt.format == "json") {
      ordered_json j;
      j["graph6"] = write_graph6(g);
      j["n"] = g.order();
      j["m"] = g.size();
      if (opt.want_slee) j["slee"] = slee::slee(g);
      if (opt.want_lee) j["lee"] = lee(g);
      if (opt.want_spectrum) {
        const Spectrum s = q_spectrum(g);
        ordered_json vals = ordered_json::array();
        for (int i = 0; i < s.values.size(); ++i) vals.push_back(s.values[i]);
        j["spectrum"] = std::move(vals);
      }
      if (opt.want_moments) {
        const MomentVector mv = moments(g, opt.horizon);
        ordered_json vals = ordered_json::array();
        for (const BigNat& t : mv.values) vals.push_back(t.to_string());
        j["moments"] = {{"K", mv.k_max}, {"values", std::move(vals)}};
      }
      out_array.push_back(std::move(j));
      continue;
    }
    // Text: bare values when a single quantity is requested, labeled lines
    // otherwise.
    const bool label = quantities > 1 || graphs.size() > 1;
    if (opt.want_slee)
      std::cout << (label ? "slee " : "") << format_sig(slee::slee(g)) << '\n';
    if (opt.want_lee)
      std::cout << (label ? "lee " : "") << format_sig(lee(g)) << '\n';
    if (opt.want_spectrum) {
      const Spectrum s = q_spectrum(g);
      if (label) std::cout << "spectrum";
      for (int i = 0; i < s.values.size(); ++i)
        std::cout << (label || i > 0 ? " " : "") << format_sig(s.values[i]);
      std::cout << '\n';
    }
    if (opt.want_moments) {
      const MomentVector mv = moments(g, opt.horizon);
      for (int k = 0; k <= mv.k_max; ++k)
        std::cout << (label ? "moment " : "") << k << ' ' << mv.values[k]
                  << '\n';
    }
  }
  if (opt.format == "json") {
    if (out_array.size() == 1)
      std::cout << out_array.front().dump(2) << '\n';
    else
      std::cout << out_array.dump(2) << '\n';
  }
  return 0;
}

// ---- walks ----

struct WalksOpts {
  GraphInput input;
  int x = -1;
  int y = -1;
  int length = -1;   // single length; negative means full table
  int horizon = 20;  // table horizon
  std::string format = "text";
};

int run_walks(const WalksOpts& opt) {
  require_format(opt.format, {"text", "json"});
  const Graph g = resolve_single(opt.input);
  const int y = opt.y < 0 ? opt.x : opt.y;
  if (opt.x < 0 || opt.x >= g.order() || y >= g.order())
    throw std::runtime_error("walk anchors out of range");
  const int k_max = opt.length >= 0 ? opt.length : opt.horizon;
  if (k_max < 0) throw std::runtime_error("--K must be >= 0");
  const WalkCountTable table = walk_table(g, k_max);

  if (opt.format == "json") {
    ordered_json j;
    j["graph6"] = write_graph6(g);
    j["x"] = opt.x;
    j["y"] = y;
    if (opt.length >= 0) {
      j["k"] = opt.length;
      j["count"] = table.counts[opt.length](opt.x, y).to_string();
    } else {
      j["K"] = k_max;
      ordered_json vals = ordered_json::array();
      for (int k = 0; k <= k_max; ++k)
        vals.push_back(table.counts[k](opt.x, y).to_string());
      j["counts"] = std::move(vals);
    }
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  if (opt.length >= 0) {
    std::cout << table.counts[opt.length](opt.x, y) << '\n';
  } else {
    for (int k = 0; k <= k_max; ++k)
      std::cout << k << ' ' << table.counts[k](opt.x, y) << '\n';
  }
  return 0;
}

// ---- dominance ----

struct DominanceOpts {
  bool pair_mode = false;
  std::string g1, g2, g;
  int x = -1, y = -1;
  int w = -1, v = -1, u = -1;
  int horizon = 20;
  std::string format = "text";
};

int run_dominance(const DominanceOpts& opt) {
  require_format(opt.format, {"text", "json"});
  DominanceVerdict verdict;
  if (opt.pair_mode) {
    if (opt.g.empty() || opt.w < 0 || opt.v < 0 || opt.u < 0)
      throw std::runtime_error("--pair needs --g, --w, --v, and --u");
    verdict = pair_dominance(parse_graph6(opt.g), opt.w, opt.v, opt.u,
                             opt.horizon);
  } else {
    if (opt.g1.empty() || opt.g2.empty() || opt.x < 0 || opt.y < 0)
      throw std::runtime_error(
          "anchored mode needs --g1, --x, --g2, and --y (or use --pair)");
    verdict =
        dominance(parse_graph6(opt.g1), opt.x, parse_graph6(opt.g2), opt.y,
                  opt.horizon);
  }

  if (opt.format == "json") {
    ordered_json j;
    j["relation"] = to_string(verdict.relation);
    j["k_max"] = verdict.k_max;
    j["witness_k"] =
        verdict.witness_k ? ordered_json(*verdict.witness_k) : nullptr;
    j["fail_k"] = verdict.fail_k ? ordered_json(*verdict.fail_k) : nullptr;
    ordered_json lhs = ordered_json::array(), rhs = ordered_json::array();
    for (const BigNat& c : verdict.lhs) lhs.push_back(c.to_string());
    for (const BigNat& c : verdict.rhs) rhs.push_back(c.to_string());
    j["lhs"] = std::move(lhs);
    j["rhs"] = std::move(rhs);
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "relation " << to_string(verdict.relation) << '\n';
  if (verdict.witness_k) std::cout << "witness_k " << *verdict.witness_k << '\n';
  if (verdict.fail_k) std::cout << "fail_k " << *verdict.fail_k << '\n';
  for (int k = 0; k <= verdict.k_max; ++k)
    std::cout << k << ' ' << verdict.lhs[k] << ' ' << verdict.rhs[k] << '\n';
  return 0;
}

// ---- construct ----

struct ConstructOpts {
  std::string family;
  int n = -1, r = -1, p = -1, q = -1;
};

int run_construct(const ConstructOpts& opt) {
  auto need = [](bool ok, const char* what) {
    if (!ok) throw std::runtime_error(std::string("missing or invalid ") + what);
  };
  Graph g = empty_graph(0);
  if (opt.family == "g_nr") {
    need(opt.n >= 1, "--n");
    need(opt.r >= 0, "--r");
    g = g_nr(opt.n, opt.r);
  } else if (opt.family == "k_pqr") {
    need(opt.p >= 0, "--p");
    need(opt.q >= 0, "--q");
    need(opt.r >= 0, "--r");
    g = k_pqr(opt.p, opt.q, opt.r);
  } else if (opt.family == "complete") {
    need(opt.n >= 0, "--n");
    g = complete(opt.n);
  } else if (opt.family == "star") {
    need(opt.n >= 1, "--n");
    g = star(opt.n);
  } else if (opt.family == "path") {
    need(opt.n >= 0, "--n");
    g = path(opt.n);
  } else if (opt.family == "empty") {
    need(opt.n >= 0, "--n");
    g = empty_graph(opt.n);
  } else {
    throw std::runtime_error(
        "unknown family '" + opt.family +
        "'; expected g_nr, k_pqr, complete, star, path, or empty");
  }
  std::cout << write_graph6(g) << '\n';
  return 0;
}

// ---- search ----

struct SearchOpts {
  std::string class_name;
  int n = -1;
  int param = -1;
  double tie_tol = 1e-9;
  int top = 10;
  int jobs = 0;
  std::string format = "text";
  std::string graph6_file;
};

void print_report_text(const SearchReport& report, int top) {
  std::cout << "class " << to_string(report.spec.kind) << " n=" << report.spec.n
            << " param=" << report.spec.param << '\n';
  std::cout << "candidates examined: " << report.candidates_examined << '\n';
  std::cout << "in class: " << report.in_class << '\n';
  const int limit =
      top < 0 ? static_cast<int>(report.ranking.size())
              : std::min<int>(top, static_cast<int>(report.ranking.size()));
  for (int i = 0; i < limit; ++i)
    std::cout << "  " << i + 1 << ". " << report.ranking[i].graph6 << "  "
              << format_sig(report.ranking[i].slee) << '\n';
  std::cout << "maximizers:";
  for (const std::string& s : report.maximizers) std::cout << ' ' << s;
  std::cout << '\n';
  std::cout << "expected: " << report.expected << " (in class: "
            << (report.expected_in_class ? "yes" : "no") << ")\n";
  std::cout << "verdict: " << to_string(report.verdict) << '\n';
}

int run_search(const SearchOpts& opt) {
  require_format(opt.format, {"text", "json", "csv"});
  const ClassSpec spec{parse_class_kind(opt.class_name), opt.n, opt.param};
  validate(spec);
  const int cap = enumeration_cap();
  const GraphSource source = opt.graph6_file.empty()
                                 ? GraphSource::generated(opt.n)
                                 : GraphSource::from_file(opt.graph6_file);
  const std::vector<Graph> candidates = load_source(source, cap);
  const int jobs = opt.jobs > 0 ? opt.jobs : default_jobs();
  const SearchReport report = extremal_search(candidates, spec, opt.tie_tol,
                                              jobs);
  if (opt.format == "json")
    std::cout << report_json(report, opt.top) << '\n';
  else if (opt.format == "csv")
    std::cout << report_csv(report);
  else
    print_report_text(report, opt.top);
  return report.verdict == SearchReport::Verdict::unique_match ? 0 : 2;
}

// ---- verify ----

struct VerifyOpts {
  std::string theorem;
  std::string lemma;
  int n = -1;
  int limit = 10;
  double tie_tol = 1e-9;
  int jobs = 0;
  int top = 10;
  std::string format = "text";
};

int run_verify(const VerifyOpts& opt) {
  require_format(opt.format, {"text", "json"});
  if (opt.theorem.empty() == opt.lemma.empty())
    throw std::runtime_error("pass exactly one of --theorem or --lemma");
  const int jobs = opt.jobs > 0 ? opt.jobs : default_jobs();

  if (!opt.lemma.empty()) {
    if (opt.lemma != "clique-merge")
      throw std::runtime_error("unknown lemma '" + opt.lemma +
                               "'; expected clique-merge");
    const std::vector<CliqueMergeCase> cases = clique_merge_sweep(opt.limit);
    bool pass = true;
    for (const CliqueMergeCase& c : cases) pass = pass && c.pass;
    if (opt.format == "json") {
      ordered_json j;
      j["lemma"] = "clique-merge";
      j["limit"] = opt.limit;
      j["pass"] = pass;
      ordered_json arr = ordered_json::array();
      for (const CliqueMergeCase& c : cases)
        arr.push_back({{"p", c.p},
                       {"q", c.q},
                       {"r", c.r},
                       {"split", c.split},
                       {"merged", c.merged},
                       {"pass", c.pass}});
      j["cases"] = std::move(arr);
      std::cout << j.dump(2) << '\n';
    } else {
      for (const CliqueMergeCase& c : cases)
        std::cout << "p=" << c.p << " q=" << c.q << " r=" << c.r << ": "
                  << format_sig(c.split) << (c.pass ? " < " : " !< ")
                  << format_sig(c.merged) << (c.pass ? "" : "  VIOLATION")
                  << '\n';
      std::cout << (pass ? "PASS" : "FAIL") << '\n';
    }
    return pass ? 0 : 2;
  }

  if (opt.n < 1) throw std::runtime_error("--theorem needs --n >= 1");
  const ClassSpec::Kind kind = parse_class_kind(opt.theorem);
  const TheoremReport tr =
      verify_theorem(kind, opt.n, opt.tie_tol, jobs, enumeration_cap());
  for (const std::string& note : tr.notes) std::cerr << "note: " << note << '\n';
  if (opt.format == "json") {
    std::cout << theorem_json(tr, opt.top) << '\n';
  } else {
    std::cout << "theorem " << to_string(tr.kind) << " n=" << tr.n << '\n';
    for (const SearchReport& r : tr.reports) {
      std::cout << "param=" << r.spec.param << ": "
                << to_string(r.verdict);
      if (!r.ranking.empty())
        std::cout << " (max " << r.ranking.front().graph6 << ", slee "
                  << format_sig(r.ranking.front().slee) << ")";
      std::cout << '\n';
    }
    std::cout << (tr.pass ? "PASS" : "FAIL") << '\n';
  }
  return tr.pass ? 0 : 2;
}

// ---- convert ----

struct ConvertOpts {
  GraphInput input;
  std::string to;
};

int run_convert(const ConvertOpts& opt) {
  if (opt.to != "graph6" && opt.to != "edge-list")
    throw std::runtime_error("--to must be graph6 or edge-list");
  const std::vector<Graph> graphs = resolve_graphs(opt.input);
  for (const Graph& g : graphs) {
    if (opt.to == "graph6")
      std::cout << write_graph6(g) << '\n';
    else
      std::cout << write_edge_list(g);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "signless Laplacian Estrada index toolkit: spectra, exact walk counts, "
      "graph families, and exhaustive extremal searches over small graphs"};
  app.require_subcommand(1);

  ComputeOpts compute_opts;
  auto* compute = app.add_subcommand(
      "compute", "spectral quantities of one graph (or each graph in a file)");
  add_graph_options(compute, compute_opts.input);
  compute->add_flag("--slee", compute_opts.want_slee,
                    "signless Laplacian Estrada index");
  compute->add_flag("--lee", compute_opts.want_lee,
                    "Laplacian Estrada index");
  compute->add_flag("--spectrum", compute_opts.want_spectrum,
                    "signless Laplacian eigenvalues, descending");
  compute->add_flag("--moments", compute_opts.want_moments,
                    "exact spectral moments trace(Q^k), k = 0..K");
  compute->add_option("--K", compute_opts.horizon, "moment horizon")
      ->default_val(20);
  compute->add_option("--format", compute_opts.format, "text or json")
      ->default_val("text");

  WalksOpts walks_opts;
  auto* walks = app.add_subcommand(
      "walks", "exact semi-edge-walk counts between two anchor vertices");
  add_graph_options(walks, walks_opts.input);
  walks->add_option("--x", walks_opts.x, "first anchor vertex")->required();
  walks->add_option("--y", walks_opts.y, "second anchor (default: --x)");
  walks->add_option("--k", walks_opts.length, "single walk length");
  walks->add_option("--K", walks_opts.horizon, "table horizon when --k absent")
      ->default_val(20);
  walks->add_option("--format", walks_opts.format, "text or json")
      ->default_val("text");

  DominanceOpts dom_opts;
  auto* dom = app.add_subcommand(
      "dominance",
      "compare per-length closed-walk counts at two anchored vertices");
  dom->add_flag("--pair", dom_opts.pair_mode,
                "within one graph, compare counts from --w to --v and to --u");
  dom->add_option("--g1", dom_opts.g1, "first graph (graph6)");
  dom->add_option("--x", dom_opts.x, "anchor in --g1");
  dom->add_option("--g2", dom_opts.g2, "second graph (graph6)");
  dom->add_option("--y", dom_opts.y, "anchor in --g2");
  dom->add_option("--g", dom_opts.g, "graph for --pair mode (graph6)");
  dom->add_option("--w", dom_opts.w, "walk start for --pair mode");
  dom->add_option("--v", dom_opts.v, "first walk end for --pair mode");
  dom->add_option("--u", dom_opts.u, "second walk end for --pair mode");
  dom->add_option("--K", dom_opts.horizon, "comparison horizon")
      ->default_val(20);
  dom->add_option("--format", dom_opts.format, "text or json")
      ->default_val("text");

  ConstructOpts cons_opts;
  auto* cons = app.add_subcommand("construct",
                                  "emit a named graph family as graph6");
  cons->add_option("--family", cons_opts.family,
                   "g_nr, k_pqr, complete, star, path, or empty")
      ->required();
  cons->add_option("--n", cons_opts.n, "vertex count");
  cons->add_option("--r", cons_opts.r, "pendant count (g_nr) / join size (k_pqr)");
  cons->add_option("--p", cons_opts.p, "first clique size (k_pqr)");
  cons->add_option("--q", cons_opts.q, "second clique size (k_pqr)");

  SearchOpts search_opts;
  auto* search = app.add_subcommand(
      "search", "rank a graph class by slee and check the expected maximizer");
  search->add_option("--class", search_opts.class_name,
                     "cut-edges, pendant-vertices, vertex-connectivity, or "
                     "edge-connectivity")
      ->required();
  search->add_option("--n", search_opts.n, "vertex count")->required();
  search->add_option("--param", search_opts.param,
                     "class parameter (cut-edge / pendant count or "
                     "connectivity)")
      ->required();
  search->add_option("--tie-tol", search_opts.tie_tol,
                     "relative tie tolerance on slee")
      ->default_val(1e-9);
  search->add_option("--top", search_opts.top, "ranking rows to print")
      ->default_val(10);
  search->add_option("--jobs", search_opts.jobs,
                     "worker threads (default: all cores)");
  search->add_option("--format", search_opts.format, "text, json, or csv")
      ->default_val("text");
  search->add_option("--graph6-file", search_opts.graph6_file,
                     "candidate graphs, one graph6 line each (default: "
                     "built-in enumeration)");

  VerifyOpts verify_opts;
  auto* verify = app.add_subcommand(
      "verify", "sweep a theorem's parameter range or a lemma's case list");
  verify->add_option("--theorem", verify_opts.theorem,
                     "cut-edges, pendant-vertices, vertex-connectivity, or "
                     "edge-connectivity");
  verify->add_option("--lemma", verify_opts.lemma, "clique-merge");
  verify->add_option("--n", verify_opts.n, "vertex count for --theorem");
  verify->add_option("--limit", verify_opts.limit,
                     "max total vertices for --lemma clique-merge")
      ->default_val(10);
  verify->add_option("--tie-tol", verify_opts.tie_tol,
                     "relative tie tolerance on slee")
      ->default_val(1e-9);
  verify->add_option("--jobs", verify_opts.jobs,
                     "worker threads (default: all cores)");
  verify->add_option("--top", verify_opts.top,
                     "ranking rows per report in json output")
      ->default_val(10);
  verify->add_option("--format", verify_opts.format, "text or json")
      ->default_val("text");

  ConvertOpts conv_opts;
  auto* conv = app.add_subcommand("convert",
                                  "convert between graph6 and edge lists");
  add_graph_options(conv, conv_opts.input);
  conv->add_option("--to", conv_opts.to, "graph6 or edge-list")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 1;
  }

  try {
    if (app.got_subcommand(compute)) return run_compute(compute_opts);
    if (app.got_subcommand(walks)) return run_walks(walks_opts);
    if (app.got_subcommand(dom)) return run_dominance(dom_opts);
    if (app.got_subcommand(cons)) return run_construct(cons_opts);
    if (app.got_subcommand(search)) return run_search(search_opts);
    if (app.got_subcommand(verify)) return run_verify(verify_opts);
    if (app.got_subcommand(conv)) return run_convert(conv_opts);
    return 1;
  } catch (const budget_error& e) {
    std::cerr << "cost guard: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
