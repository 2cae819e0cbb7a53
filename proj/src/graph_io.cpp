#include <charconv>
#include <sstream>
#include <string>

#include "pnc/graph.hpp"

namespace pnc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

constexpr int kBias = 63;

}  // namespace

CubicGraph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  if (line.empty()) throw GraphError("graph6: empty input");
  for (char ch : line) {
    if (ch < 63 || ch > 126) throw GraphError("graph6: byte out of range");
  }

  std::size_t pos = 0;
  long n = 0;
  if (line[0] != 126) {
    n = line[0] - kBias;
    pos = 1;
  } else {
    if (line.size() >= 2 && line[1] == 126) throw GraphError("graph6: order above 258047 unsupported");
    if (line.size() < 4) throw GraphError("graph6: truncated order field");
    n = ((line[1] - kBias) << 12) | ((line[2] - kBias) << 6) | (line[3] - kBias);
    pos = 4;
  }

  const long bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - pos != need) {
    throw GraphError("graph6: expected " + std::to_string(need) + " data bytes, got " +
                     std::to_string(line.size() - pos));
  }

  std::vector<Edge> edges;
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = line[pos + k / 6] - kBias;
      if (byte & (1 << (5 - k % 6))) edges.push_back({i, j});
    }
  }
  return CubicGraph(static_cast<int>(n), std::move(edges));
}

CubicGraph parse_edgelist(std::string_view text) {
  std::vector<std::pair<long, long>> rows;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream fields{std::string(line)};
    long a = 0, b = 0;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw GraphError("edgelist: malformed line " + std::to_string(lineno));
    }
    rows.emplace_back(a, b);
  }
  if (rows.empty()) throw GraphError("edgelist: missing header");
  const auto [n, m] = rows.front();
  if (n < 0 || m < 0) throw GraphError("edgelist: negative header values");
  if (static_cast<long>(rows.size()) - 1 != m) {
    throw GraphError("edgelist: header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(rows.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    edges.push_back({static_cast<VertexId>(rows[i].first), static_cast<VertexId>(rows[i].second)});
  }
  return CubicGraph(static_cast<int>(n), std::move(edges));
}

CubicGraph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::Graph6 ? parse_graph6(text) : parse_edgelist(text);
}

std::vector<CubicGraph> parse_graph6_lines(std::string_view text) {
  std::vector<CubicGraph> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(start, end - start));
    if (!line.empty() && line != ">>graph6<<") out.push_back(parse_graph6(line));
    start = end + 1;
  }
  return out;
}

std::string to_graph6(const CubicGraph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const Edge& e : g.edges()) {
    if (adj[e.u][e.v]) throw GraphError("graph6: parallel edges cannot be encoded");
    adj[e.u][e.v] = adj[e.v][e.u] = 1;
  }
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0, used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | adj[i][j];
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + kBias));
  return out;
}

std::string to_edgelist(const CubicGraph& g) {
  std::string out = std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace pnc
