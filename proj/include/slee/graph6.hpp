// graph6.hpp -- graph6 serialization (printable 63-offset encoding of the
// upper adjacency triangle, column-major) plus a plain edge-list text format.
#pragma once

#include "slee/graph.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace slee {

enum class graph6_errc {
  empty_input,         // no bytes at all
  unsupported_format,  // sparse6 / digraph6 marker or header
  bad_prefix,          // a ">>...<<" style header that is not ">>graph6<<"
  invalid_char_header, // size field byte outside 63..126
  invalid_char_body,   // bit field byte outside 63..126
  truncated_header,    // long size form cut short
  order_too_large,     // well-formed size exceeding the supported cap
  truncated_bits,      // fewer bit-field bytes than the order requires
  nonzero_padding,     // unused bits of the last group not zero
  trailing_garbage,    // bytes after a complete encoding
};

const char* to_string(graph6_errc c);

class graph6_error : public std::runtime_error {
public:
  graph6_error(graph6_errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  graph6_errc code() const { return code_; }

private:
  graph6_errc code_;
};

// Accepts an optional leading ">>graph6<<" header. Long size forms are
// accepted for any order up to the cap; orders above 62 round-trip through
// the 4-byte form.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// One graph per line; an optional ">>graph6<<" header line and trailing
// carriage returns are tolerated, blank interior lines are not.
std::vector<Graph> read_graph6_lines(std::istream& in);

// "n m" on the first line, then m lines "u v" (0-based).
Graph parse_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

}  // namespace slee
