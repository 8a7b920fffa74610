#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "divisible/errors.hpp"
#include "divisible/graph.hpp"

namespace divisible {

enum class ParseFailure {
  MalformedHeader,
  ByteOutOfRange,
  InconsistentLength,
  InconsistentEdgeCount,
  VertexOutOfRange,
  MalformedLine,
  TooLarge,
};

class ParseError : public Error {
 public:
  ParseError(ParseFailure reason, const std::string& what) : Error(ErrorKind::Parse, what), reason_(reason) {}
  ParseFailure reason() const { return reason_; }

 private:
  ParseFailure reason_;
};

/// graph6: size header, then the upper triangle column by column, six bits per
/// byte offset by 63. A leading ">>graph6<<" marker is accepted. Nonzero
/// padding bits are rejected so that parsing is injective.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// DIMACS edge format: "c" comments, one "p edge n m" line, then m "e u v" lines (1-indexed).
Graph parse_dimacs(std::string_view text);
std::string emit_dimacs(const Graph& g);

/// Reads a graph file: DIMACS when the first non-empty line is a "c" comment
/// or a "p" line, otherwise one graph6 string per non-empty line.
std::vector<Graph> read_graphs(std::string_view text);
std::vector<Graph> read_graph_file(const std::string& path);

}  // namespace divisible
