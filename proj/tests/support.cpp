#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pnc::support {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<CubicGraph> corpus(int n) {
  return parse_graph6_lines(read_file(std::string(PNC_DATA_DIR) + "/cubic_n" + std::to_string(n) + ".g6"));
}

std::vector<CubicGraph> bridgeless_corpus(int n) {
  std::vector<CubicGraph> out;
  for (CubicGraph& g : corpus(n)) {
    const ValidationReport v = validate(g);
    if (v.is_connected && v.is_bridgeless) out.push_back(std::move(g));
  }
  return out;
}

std::optional<CubicGraph> random_cubic(int n, std::mt19937& rng, bool simple) {
  for (int tries = 0; tries < 10000; ++tries) {
    std::vector<VertexId> points;
    for (VertexId v = 0; v < n; ++v) points.insert(points.end(), 3, v);
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;
    bool ok = true;
    for (std::size_t i = 0; i < points.size() && ok; i += 2) {
      const auto key = std::minmax(points[i], points[i + 1]);
      if (key.first == key.second || (simple && seen.count(key))) ok = false;
      seen.insert(key);
      edges.push_back({points[i], points[i + 1]});
    }
    if (!ok) continue;
    CubicGraph g(n, std::move(edges));
    const ValidationReport v = validate(g);
    if (v.is_connected && v.is_bridgeless) return g;
  }
  return std::nullopt;
}

std::vector<EdgeList> naive_matchings(const CubicGraph& g) {
  std::vector<EdgeList> out;
  std::vector<int> cover(g.num_vertices(), 0);
  EdgeList cur;
  auto rec = [&](auto&& self, EdgeId e) -> void {
    if (e == g.num_edges()) {
      if (std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; })) out.push_back(cur);
      return;
    }
    self(self, e + 1);
    const Edge& ed = g.edge(e);
    if (cover[ed.u] || cover[ed.v]) return;
    cover[ed.u] = cover[ed.v] = 1;
    cur.push_back(e);
    self(self, e + 1);
    cur.pop_back();
    cover[ed.u] = cover[ed.v] = 0;
  };
  rec(rec, 0);
  return out;
}

int uncovered(const CubicGraph& g, const EdgeList& m1, const EdgeList& m2, const EdgeList& m3) {
  std::vector<char> hit(g.num_edges(), 0);
  for (const EdgeList* m : {&m1, &m2, &m3}) {
    for (EdgeId e : *m) hit[e] = 1;
  }
  return static_cast<int>(std::count(hit.begin(), hit.end(), 0));
}

int naive_mu3(const CubicGraph& g) {
  const auto ms = naive_matchings(g);
  int best = g.num_edges() + 1;
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i; j < ms.size(); ++j)
      for (std::size_t l = j; l < ms.size(); ++l) best = std::min(best, uncovered(g, ms[i], ms[j], ms[l]));
  return best;
}

Core random_core(const CubicGraph& g, const std::vector<EdgeList>& matchings, std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, matchings.size() - 1);
  return core_from_triple(g, matchings[pick(rng)], matchings[pick(rng)], matchings[pick(rng)]);
}

PartialColoring random_total_coloring(const CubicGraph& g, std::mt19937& rng) {
  std::vector<EdgeId> order(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) order[e] = e;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Color> colors(g.num_edges(), 0);
  for (EdgeId e : order) {
    std::vector<Color> options;
    for (Color c = 1; c <= 5; ++c) {
      bool free = true;
      for (EdgeId f = 0; f < g.num_edges(); ++f) {
        if (f == e || colors[f] != c) continue;
        const Edge &a = g.edge(e), &b = g.edge(f);
        if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) free = false;
      }
      if (free) options.push_back(c);
    }
    colors[e] = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
  }
  return PartialColoring(g, colors);
}

bool naive_normal(const PartialColoring& psi, EdgeId e) {
  const CubicGraph& g = psi.graph();
  const Edge& a = g.edge(e);
  std::set<Color> seen;
  for (EdgeId f = 0; f < g.num_edges(); ++f) {
    const Edge& b = g.edge(f);
    if (f == e || a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) seen.insert(psi.color(f));
  }
  return seen.size() == 3 || seen.size() == 5;
}

int naive_abnormal_count(const PartialColoring& psi) {
  int n = 0;
  for (EdgeId e = 0; e < psi.graph().num_edges(); ++e) n += naive_normal(psi, e) ? 0 : 1;
  return n;
}

bool naive_three_colorable(const CubicGraph& g) {
  std::vector<Color> colors(g.num_edges(), 0);
  auto rec = [&](auto&& self, EdgeId e) -> bool {
    if (e == g.num_edges()) return true;
    for (Color c = 1; c <= 3; ++c) {
      bool ok = true;
      for (EdgeId f = 0; f < e && ok; ++f) {
        const Edge &a = g.edge(e), &b = g.edge(f);
        if (colors[f] == c && (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)) ok = false;
      }
      if (!ok) continue;
      colors[e] = c;
      if (self(self, e + 1)) return true;
    }
    colors[e] = 0;
    return false;
  };
  return rec(rec, 0);
}

CubicGraph relabel(const CubicGraph& g, const std::vector<VertexId>& perm) {
  std::vector<Edge> edges;
  for (EdgeId e = g.num_edges() - 1; e >= 0; --e) edges.push_back({perm[g.edge(e).u], perm[g.edge(e).v]});
  return CubicGraph(g.num_vertices(), std::move(edges));
}

}  // namespace pnc::support
