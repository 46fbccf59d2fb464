#include "slee/graph6.hpp"

#include <istream>
#include <sstream>

namespace slee {

const char* to_string(graph6_errc c) {
  switch (c) {
    case graph6_errc::empty_input: return "empty input";
    case graph6_errc::unsupported_format: return "unsupported format";
    case graph6_errc::bad_prefix: return "bad format prefix";
    case graph6_errc::invalid_char_header: return "invalid character in size field";
    case graph6_errc::invalid_char_body: return "invalid character in bit field";
    case graph6_errc::truncated_header: return "truncated size field";
    case graph6_errc::order_too_large: return "order too large";
    case graph6_errc::truncated_bits: return "truncated bit field";
    case graph6_errc::nonzero_padding: return "nonzero padding bits";
    case graph6_errc::trailing_garbage: return "trailing garbage";
  }
  return "graph6 error";
}

namespace {

[[noreturn]] void fail(graph6_errc c, const std::string& detail) {
  std::string msg = to_string(c);
  if (!detail.empty()) msg += ": " + detail;
  throw graph6_error(c, msg);
}

bool printable(unsigned char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) fail(graph6_errc::empty_input, "no bytes");
  if (text.front() == '>') {
    constexpr std::string_view g6 = ">>graph6<<";
    if (text.substr(0, g6.size()) == g6) {
      text.remove_prefix(g6.size());
    } else if (text.substr(0, 11) == ">>sparse6<<" || text.substr(0, 12) == ">>digraph6<<") {
      fail(graph6_errc::unsupported_format, "not a graph6 header");
    } else {
      fail(graph6_errc::bad_prefix, "expected \">>graph6<<\"");
    }
    if (text.empty()) fail(graph6_errc::empty_input, "header with no payload");
  }
  if (text.front() == ':' || text.front() == ';' || text.front() == '&')
    fail(graph6_errc::unsupported_format, "sparse6/digraph6 marker");

  std::size_t pos = 0;
  auto size_char = [&]() -> std::uint64_t {
    if (pos >= text.size()) fail(graph6_errc::truncated_header, "size field cut short");
    const unsigned char c = static_cast<unsigned char>(text[pos++]);
    if (!printable(c)) fail(graph6_errc::invalid_char_header, "byte outside 63..126");
    return c - 63u;
  };

  std::uint64_t n = size_char();
  if (n == 63) {
    // '~' escapes to the 18-bit form; '~~' to the 36-bit form.
    if (pos < text.size() && text[pos] == '~') {
      ++pos;
      n = 0;
      for (int i = 0; i < 6; ++i) n = (n << 6) | size_char();
    } else {
      n = 0;
      for (int i = 0; i < 3; ++i) n = (n << 6) | size_char();
    }
  }
  if (n > static_cast<std::uint64_t>(kMaxOrder))
    fail(graph6_errc::order_too_large,
         "order " + std::to_string(n) + " exceeds the cap of " + std::to_string(kMaxOrder));

  const int order = static_cast<int>(n);
  const std::size_t nbits = static_cast<std::size_t>(order) * (order - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  const std::size_t have = text.size() - pos;
  if (have < nbytes)
    fail(graph6_errc::truncated_bits, "need " + std::to_string(nbytes) + " bit-field bytes, have " +
                                          std::to_string(have));
  if (have > nbytes)
    fail(graph6_errc::trailing_garbage,
         std::to_string(have - nbytes) + " byte(s) past the encoding");

  std::vector<std::pair<int, int>> es;
  std::size_t bit = 0;
  int col = 1, row = 0;
  for (std::size_t b = 0; b < nbytes; ++b) {
    const unsigned char c = static_cast<unsigned char>(text[pos + b]);
    if (!printable(c)) fail(graph6_errc::invalid_char_body, "byte outside 63..126");
    const unsigned group = c - 63u;
    for (int j = 5; j >= 0; --j, ++bit) {
      const bool set = (group >> j) & 1u;
      if (bit >= nbits) {
        if (set) fail(graph6_errc::nonzero_padding, "set bit past the triangle");
        continue;
      }
      if (set) es.emplace_back(row, col);
      if (++row == col) {
        row = 0;
        ++col;
      }
    }
  }
  return Graph::from_edges(order, es);
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  unsigned group = 0;
  int filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      group = (group << 1) | (g.has_edge(row, col) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled != 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      if (in.peek() == std::char_traits<char>::eof()) break;
      fail(graph6_errc::empty_input, "blank line in graph6 stream");
    }
    if (first && line == ">>graph6<<") {
      first = false;
      continue;
    }
    first = false;
    out.push_back(parse_graph6(line));
  }
  return out;
}

Graph parse_edge_list(std::istream& in) {
  int n = 0;
  long long m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list needs a \"n m\" first line");
  if (m < 0) throw std::invalid_argument("negative edge count");
  std::vector<std::pair<int, int>> es;
  es.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v))
      throw std::invalid_argument("edge list ends after " + std::to_string(i) + " edge(s)");
    es.emplace_back(u, v);
  }
  return Graph::from_edges(n, es);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

}  // namespace slee
