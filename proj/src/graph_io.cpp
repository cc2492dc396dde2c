#include "kdense/graph_io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace kdense {

namespace {

void append_bits(std::string& out, const std::vector<char>& bits) {
  for (size_t i = 0; i < bits.size(); i += 6) {
    int group = 0;
    for (size_t j = 0; j < 6; ++j) {
      group <<= 1;
      if (i + j < bits.size() && bits[i + j]) group |= 1;
    }
    out.push_back(static_cast<char>(group + 63));
  }
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const long n = g.vertex_count();
  if (n > 258047) throw ParseError("graph6: vertex count too large to encode");

  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }

  std::vector<char> bits;
  bits.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? 1 : 0);
  append_bits(out, bits);
  return out;
}

Graph from_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  if (text.empty()) throw ParseError("graph6: empty input");

  for (char c : text)
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside printable range [63,126]");

  size_t pos = 0;
  long n;
  if (text[0] != '~') {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4) throw ParseError("graph6: truncated size header");
    if (text[1] == '~') throw ParseError("graph6: 8-byte size form not supported");
    n = (static_cast<long>(text[1] - 63) << 12) | (static_cast<long>(text[2] - 63) << 6) |
        static_cast<long>(text[3] - 63);
    pos = 4;
  }

  const long nbits = n * (n - 1) / 2;
  const size_t expect = pos + static_cast<size_t>((nbits + 5) / 6);
  if (text.size() != expect) throw ParseError("graph6: malformed length for declared vertex count");

  Graph g(static_cast<int>(n));
  long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int byte = text[pos + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  // padding bits must be zero
  for (long b = nbits; b < static_cast<long>(text.size() - pos) * 6; ++b) {
    int byte = text[pos + b / 6] - 63;
    if ((byte >> (5 - b % 6)) & 1) throw ParseError("graph6: nonzero padding bits");
  }
  return g;
}

Graph parse_edge_list(std::string_view text, EdgeListStats* stats) {
  std::string cleaned;
  cleaned.reserve(text.size());
  bool comment = false;
  for (char c : text) {
    if (c == '#') comment = true;
    if (c == '\n') comment = false;
    cleaned.push_back(comment ? ' ' : c);
  }

  std::istringstream in(cleaned);
  long n, m;
  if (!(in >> n >> m)) throw ParseError("edge list: missing \"n m\" header");
  if (n < 0 || m < 0) throw ParseError("edge list: negative header values");

  Graph g(static_cast<int>(n));
  long dup = 0;
  for (long i = 0; i < m; ++i) {
    long u, v;
    if (!(in >> u >> v)) throw ParseError("edge list: fewer edges than declared");
    if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("edge list: endpoint out of range");
    if (u == v) throw ParseError("edge list: loop edge rejected");
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
      ++dup;
    else
      g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  long extra;
  if (in >> extra) throw ParseError("edge list: trailing data after declared edges");
  if (stats) stats->duplicates_collapsed = dup;
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_graph_auto(std::string_view text, EdgeListStats* stats) {
  size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i == text.size()) throw ParseError("empty input");
  if (text[i] >= '@' && text[i] <= '~') {
    size_t end = i;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    return from_graph6(text.substr(i, end - i));
  }
  return parse_edge_list(text, stats);
}

}  // namespace kdense
