#include "gallai/graph_io.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include "gallai/error.hpp"

namespace gallai {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int sextet(char c, std::size_t pos) {
  const int value = static_cast<unsigned char>(c) - kBias;
  if (value < 0 || value > 63)
    throw Error(ErrorCode::InvalidCharacter, "byte " + std::to_string(static_cast<int>(static_cast<unsigned char>(c))) +
                                                 " at offset " + std::to_string(pos));
  return value;
}

std::string_view trim_line(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim_line(text);
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw Error(ErrorCode::MalformedHeader, "empty graph6 string");

  std::size_t pos = 0;
  auto read_size_byte = [&]() -> int {
    if (pos >= text.size()) throw Error(ErrorCode::MalformedHeader, "size field truncated");
    const char c = text[pos];
    const int value = static_cast<unsigned char>(c) - kBias;
    if (value < 0 || value > 63) throw Error(ErrorCode::MalformedHeader, "invalid size byte at offset " + std::to_string(pos));
    ++pos;
    return value;
  };

  long long n = 0;
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = read_size_byte();
  } else {
    ++pos;
    int width = 3;
    if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126) {
      ++pos;
      width = 6;
    }
    for (int i = 0; i < width; ++i) n = (n << 6) | read_size_byte();
  }
  if (n > 1'000'000) throw Error(ErrorCode::SizeLimitExceeded, "graph6 order " + std::to_string(n));

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() - pos < body)
    throw Error(ErrorCode::TruncatedBitVector,
                "expected " + std::to_string(body) + " data bytes, found " + std::to_string(text.size() - pos));
  if (text.size() - pos > body) throw Error(ErrorCode::TrailingData, "extra bytes after bit vector");

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = sextet(text[pos + k / 6], pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  for (std::size_t b = pos + k / 6; b < text.size(); ++b) sextet(text[b], b);
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      ++line_no;
      const std::string_view t = trim_line(out);
      if (t.empty() || t.front() == '#') continue;
      out = std::string(t);
      return true;
    }
    return false;
  };
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + msg);
  };

  if (!next_line(line)) fail("missing header \"n m\"");
  long long n = -1;
  long long m = -1;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra) || n < 0 || m < 0) fail("expected header \"n m\"");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line(line)) fail("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    std::istringstream row(line);
    long long u = -1;
    long long v = -1;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) fail("expected \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorCode::VertexOutOfRange, "line " + std::to_string(line_no) + ": endpoint out of range");
    if (u == v) throw Error(ErrorCode::LoopEdge, "line " + std::to_string(line_no) + ": loop at " + std::to_string(u));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_line(line)) fail("unexpected content after edge list");
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view t = trim_line(line);
    if (t.empty() || t.front() == '#') continue;
    if (t.find_first_of(" \t") != std::string_view::npos) return parse_edge_list(text);
    return parse_graph6(t);
  }
  throw Error(ErrorCode::ParseError, "no graph found in input");
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_graph_text(text);
}

std::vector<Graph6Line> read_graph6_lines(std::istream& in) {
  std::vector<Graph6Line> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view t = trim_line(line);
    if (t.empty()) continue;
    out.push_back({line_no, std::string(t)});
  }
  return out;
}

}  // namespace gallai
