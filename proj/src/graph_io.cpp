#include "geoconv/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <vector>

namespace geoconv {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

struct Token {
  long value;
  std::size_t offset;
};

// Splits text into lines of integer tokens, remembering byte offsets.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::vector<Token> line;
    std::size_t i = pos;
    bool comment = false;
    while (i < end) {
      const char c = text[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (c == '#' && line.empty()) {
        comment = true;
        break;
      }
      long value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + end, value);
      if (ec != std::errc{} || ptr == text.data() + i)
        throw ParseError("expected an integer", i);
      const std::size_t stop = static_cast<std::size_t>(ptr - text.data());
      if (stop < end && !std::isspace(static_cast<unsigned char>(text[stop])))
        throw ParseError("unexpected character after integer", stop);
      line.push_back({value, i});
      i = stop;
    }
    if (!comment && !line.empty()) lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

template <typename Pair>
std::vector<Pair> read_pairs(std::string_view text, int& n, bool directed) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("missing vertex count", 0);
  if (lines[0].size() != 1)
    throw ParseError("first line must hold only the vertex count",
                     lines[0].back().offset);
  const Token count = lines[0][0];
  if (count.value < 0 || count.value > kMaxVertices)
    throw ParseError("vertex count out of range [0, " +
                         std::to_string(kMaxVertices) + "]",
                     count.offset);
  n = static_cast<int>(count.value);

  std::vector<Pair> pairs;
  std::set<std::pair<int, int>> seen;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& line = lines[li];
    if (line.size() != 2)
      throw ParseError("expected exactly two vertex indices", line[0].offset);
    for (const Token& t : line)
      if (t.value < 0 || t.value >= n)
        throw ParseError("vertex index " + std::to_string(t.value) +
                             " outside [0, " + std::to_string(n) + ")",
                         t.offset);
    const int a = static_cast<int>(line[0].value);
    const int b = static_cast<int>(line[1].value);
    if (a == b) throw ParseError("self-loop", line[0].offset);
    const auto key = directed ? std::pair{a, b}
                              : std::pair{std::min(a, b), std::max(a, b)};
    if (!seen.insert(key).second)
      throw ParseError(directed ? "duplicate arc" : "duplicate edge",
                       line[0].offset);
    pairs.push_back({a, b});
  }
  return pairs;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t start = 0;
  if (text.substr(0, kHeader.size()) == kHeader) start = kHeader.size();
  std::size_t end = text.size();
  while (end > start && (text[end - 1] == '\n' || text[end - 1] == '\r')) --end;

  if (start >= end) throw ParseError("empty graph6 line", start);
  const int head = static_cast<unsigned char>(text[start]);
  if (head == 126)
    throw ParseError("graph6 long form (n > 62) is not supported", start);
  if (head < kBias || head > 126)
    throw ParseError("malformed graph6 header byte", start);
  const int n = head - kBias;

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  const std::size_t body = start + 1;
  if (end - body < bytes)
    throw ParseError("truncated graph6 bit vector: expected " +
                         std::to_string(bytes) + " bytes",
                     end);
  if (end - body > bytes)
    throw ParseError("trailing garbage after graph6 bit vector", body + bytes);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t at = body + k / 6;
      const int value = static_cast<unsigned char>(text[at]) - kBias;
      if (value < 0 || value > 63)
        throw ParseError("byte outside the graph6 alphabet", at);
      if ((value >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  if (bits % 6 != 0) {
    const std::size_t at = body + bytes - 1;
    const int value = static_cast<unsigned char>(text[at]) - kBias;
    if (value < 0 || value > 63)
      throw ParseError("byte outside the graph6 alphabet", at);
    if ((value & ((1 << (6 - bits % 6)) - 1)) != 0)
      throw ParseError("nonzero graph6 padding bits", at);
  }
  return Graph(n, std::move(edges));
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxVertices)
    throw Error("graph6 short form holds at most 62 vertices");
  std::string out(1, static_cast<char>(n + kBias));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  int n = 0;
  auto pairs = read_pairs<Edge>(text, n, false);
  return Graph(n, std::move(pairs));
}

Digraph parse_arc_list(std::string_view text) {
  int n = 0;
  const auto pairs = read_pairs<Arc>(text, n, true);
  return Digraph(n, pairs);
}

}  // namespace geoconv
