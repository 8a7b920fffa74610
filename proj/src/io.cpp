#include "divisible/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace divisible {
namespace {

constexpr std::string_view kGraph6Marker = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

int sextet(char c) {
  auto b = static_cast<unsigned char>(c);
  if (b < 63 || b > 126)
    throw ParseError(ParseFailure::ByteOutOfRange, "graph6 byte " + std::to_string(b) + " outside 63..126");
  return b - 63;
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

long long parse_int(std::string_view word, std::size_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size())
    throw ParseError(ParseFailure::MalformedLine,
                     "DIMACS line " + std::to_string(line_no) + ": expected an integer, got '" + std::string(word) + "'");
  return value;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.substr(0, kGraph6Marker.size()) == kGraph6Marker) text.remove_prefix(kGraph6Marker.size());
  if (text.empty()) throw ParseError(ParseFailure::MalformedHeader, "empty graph6 string");
  if (text.front() == ':' || text.front() == '&')
    throw ParseError(ParseFailure::MalformedHeader, "sparse6/digraph6 input is not graph6");

  std::size_t pos = 0;
  long long n = 0;
  if (text[0] != '~') {
    n = sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) throw ParseError(ParseFailure::MalformedHeader, "truncated graph6 size header");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(text[i]);
    if (n < 63) throw ParseError(ParseFailure::MalformedHeader, "non-canonical graph6 size header");
    pos = 4;
  } else {
    if (text.size() < 8) throw ParseError(ParseFailure::MalformedHeader, "truncated graph6 size header");
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | sextet(text[i]);
    if (n < 258048) throw ParseError(ParseFailure::MalformedHeader, "non-canonical graph6 size header");
    pos = 8;
  }
  if (n > kMaxVertices)
    throw ParseError(ParseFailure::TooLarge, "graph6 order " + std::to_string(n) + " exceeds " +
                                                 std::to_string(kMaxVertices));

  const auto order = static_cast<int>(n);
  const std::size_t bits = static_cast<std::size_t>(order) * static_cast<std::size_t>(order > 0 ? order - 1 : 0) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    throw ParseError(ParseFailure::InconsistentLength, "graph6 body has " + std::to_string(text.size() - pos) +
                                                           " bytes, expected " + std::to_string(bytes));

  std::vector<std::pair<int, int>> edges;
  std::size_t k = 0;
  for (int j = 1; j < order; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) edges.emplace_back(i, j);
    }
  if (bytes > 0) {
    const int pad = static_cast<int>(bytes * 6 - bits);
    if ((sextet(text[pos + bytes - 1]) & ((1 << pad) - 1)) != 0)
      throw ParseError(ParseFailure::InconsistentLength, "graph6 padding bits are not zero");
  }
  for (std::size_t i = pos; i < text.size(); ++i) sextet(text[i]);
  return Graph::from_edges(order, edges);
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | ((g.row(i) >> j) & 1 ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph parse_dimacs(std::string_view text) {
  long long n = -1;
  long long m = -1;
  std::vector<std::pair<int, int>> edges;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(start, end - start));
    ++line_no;
    start = end + 1;
    if (line.empty() || line[0] == 'c') continue;
    auto words = split_words(line);
    if (words[0] == "p") {
      if (n >= 0) throw ParseError(ParseFailure::MalformedHeader, "DIMACS: repeated problem line");
      if (words.size() != 4 || (words[1] != "edge" && words[1] != "col"))
        throw ParseError(ParseFailure::MalformedHeader, "DIMACS: expected 'p edge n m' at line " +
                                                            std::to_string(line_no));
      n = parse_int(words[2], line_no);
      m = parse_int(words[3], line_no);
      if (n < 0 || m < 0) throw ParseError(ParseFailure::MalformedHeader, "DIMACS: negative size");
      if (n > kMaxVertices)
        throw ParseError(ParseFailure::TooLarge, "DIMACS order " + std::to_string(n) + " exceeds " +
                                                     std::to_string(kMaxVertices));
    } else if (words[0] == "e") {
      if (n < 0) throw ParseError(ParseFailure::MalformedHeader, "DIMACS: edge before problem line");
      if (words.size() != 3)
        throw ParseError(ParseFailure::MalformedLine, "DIMACS: malformed edge at line " + std::to_string(line_no));
      long long u = parse_int(words[1], line_no);
      long long v = parse_int(words[2], line_no);
      if (u < 1 || v < 1 || u > n || v > n)
        throw ParseError(ParseFailure::VertexOutOfRange, "DIMACS: vertex out of range at line " +
                                                             std::to_string(line_no));
      if (u == v)
        throw ParseError(ParseFailure::MalformedLine, "DIMACS: self-loop at line " + std::to_string(line_no));
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    } else {
      throw ParseError(ParseFailure::MalformedLine, "DIMACS: unknown line type at line " + std::to_string(line_no));
    }
  }
  if (n < 0) throw ParseError(ParseFailure::MalformedHeader, "DIMACS: missing problem line");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(ParseFailure::InconsistentEdgeCount, "DIMACS: header declares " + std::to_string(m) +
                                                              " edges, found " + std::to_string(edges.size()));
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string emit_dimacs(const Graph& g) {
  std::ostringstream out;
  auto edges = g.edges();
  out << "p edge " << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

std::vector<Graph> read_graphs(std::string_view text) {
  std::size_t start = 0;
  std::vector<std::string_view> lines;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = trim(text.substr(start, end - start));
    if (!line.empty()) lines.push_back(line);
    start = end + 1;
  }
  if (lines.empty()) return {};
  auto first = lines.front();
  const bool dimacs = first == "c" || first.substr(0, 2) == "c " || first.substr(0, 2) == "c\t" ||
                      first.substr(0, 2) == "p ";
  if (dimacs) return {parse_dimacs(text)};
  std::vector<Graph> out;
  out.reserve(lines.size());
  for (auto line : lines) out.push_back(parse_graph6(line));
  return out;
}

std::vector<Graph> read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_graphs(buf.str());
}

}  // namespace divisible
