#include "pnc/oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace pnc {

const char* to_string(OracleStatus s) {
  switch (s) {
    case OracleStatus::Found:
      return "FOUND";
    case OracleStatus::NotFound:
      return "NONE";
    case OracleStatus::BudgetExceeded:
      return "BUDGET_EXCEEDED";
  }
  return "?";
}

namespace {

// BFS over vertices from vertex 0, restarting at the lowest unvisited vertex;
// each vertex contributes its unlisted edges in ascending id order.
EdgeList bfs_edge_order(const CubicGraph& g) {
  const int n = g.num_vertices();
  std::vector<char> seen_v(n, 0), seen_e(g.num_edges(), 0);
  EdgeList order;
  std::vector<VertexId> queue;
  for (VertexId root = 0; root < n; ++root) {
    if (seen_v[root]) continue;
    seen_v[root] = 1;
    queue.push_back(root);
    for (std::size_t head = queue.size() - 1; head < queue.size(); ++head) {
      const VertexId v = queue[head];
      std::array<EdgeId, 3> inc = g.incident(v);
      std::sort(inc.begin(), inc.end());
      for (EdgeId e : inc) {
        if (seen_e[e]) continue;
        seen_e[e] = 1;
        order.push_back(e);
        const VertexId w = g.other_end(e, v);
        if (!seen_v[w]) {
          seen_v[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  return order;
}

// Shared state of the two 5-coloring searches.
class EdgeSearch {
 public:
  EdgeSearch(const CubicGraph& g, long long budget)
      : g_(g), budget_(budget), order_(bfs_edge_order(g)), colors_(g.num_edges(), kUncolored),
        at_(g.num_vertices(), 0), dead_(g.num_edges(), 0) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) nb_.push_back(g.closed_neighborhood(e));
  }

  long long nodes = 0;
  bool exceeded = false;

 protected:
  // Colors the search may give order_[i], honoring the symmetry reduction.
  ColorMask candidates(int i) const {
    if (i < 3) return color_bit(i + 1);
    ColorMask m = 0;
    for (Color c = 1; c <= kNumColors; ++c) m |= color_bit(c);
    if (uses4_ == 0) m &= ~color_bit(5);
    const Edge& ed = g_.edge(order_[i]);
    return m & ~(at_[ed.u] | at_[ed.v]);
  }

  // No completion can make f normal.
  bool doomed(EdgeId f) const {
    ColorMask mask = 0;
    bool repeat = false;
    for (EdgeId h : nb_[f]) {
      const Color c = colors_[h];
      if (c == kUncolored) continue;
      if (mask & color_bit(c)) repeat = true;
      mask |= color_bit(c);
    }
    const bool poor_possible = std::popcount(mask) <= 3;
    const bool rich_possible = !repeat && nb_[f].size() == 5;
    return !poor_possible && !rich_possible;
  }

  void assign(EdgeId e, Color c) {
    const Edge& ed = g_.edge(e);
    colors_[e] = c;
    at_[ed.u] |= color_bit(c);
    at_[ed.v] |= color_bit(c);
    if (c == 4) ++uses4_;
  }

  void unassign(EdgeId e) {
    const Edge& ed = g_.edge(e);
    const Color c = colors_[e];
    colors_[e] = kUncolored;
    at_[ed.u] &= ~color_bit(c);
    at_[ed.v] &= ~color_bit(c);
    if (c == 4) --uses4_;
  }

  bool tick() {
    if (++nodes > budget_) exceeded = true;
    return !exceeded;
  }

  PartialColoring snapshot() const { return PartialColoring(g_, colors_); }

  const CubicGraph& g_;
  long long budget_;
  EdgeList order_;
  std::vector<EdgeList> nb_;
  std::vector<Color> colors_;
  std::vector<ColorMask> at_;
  std::vector<char> dead_;
  int uses4_ = 0;
};

class NormalSearcher : public EdgeSearch {
 public:
  using EdgeSearch::EdgeSearch;

  std::optional<PartialColoring> run() {
    if (rec(0)) return snapshot();
    return std::nullopt;
  }

 private:
  bool rec(int i) {
    if (i == static_cast<int>(order_.size())) return true;
    const EdgeId e = order_[i];
    const ColorMask cand = candidates(i);
    for (Color c = 1; c <= kNumColors; ++c) {
      if (!(cand & color_bit(c))) continue;
      if (!tick()) return false;
      assign(e, c);
      bool ok = true;
      for (EdgeId f : nb_[e]) {
        if (doomed(f)) {
          ok = false;
          break;
        }
      }
      if (ok && rec(i + 1)) return true;
      unassign(e);
      if (exceeded) return false;
    }
    return false;
  }
};

class MaxNormalSearcher : public EdgeSearch {
 public:
  using EdgeSearch::EdgeSearch;

  int best = -1;
  std::vector<Color> best_colors;

  void run() { rec(0); }

 private:
  void rec(int i) {
    const int m = g_.num_edges();
    if (best == m || exceeded) return;
    if (i == static_cast<int>(order_.size())) {
      const int count = m - dead_count_;
      if (count > best) {
        best = count;
        best_colors = colors_;
      }
      return;
    }
    const EdgeId e = order_[i];
    const ColorMask cand = candidates(i);
    for (Color c = 1; c <= kNumColors; ++c) {
      if (!(cand & color_bit(c))) continue;
      if (!tick()) return;
      assign(e, c);
      std::vector<EdgeId> newly;
      for (EdgeId f : nb_[e]) {
        if (!dead_[f] && doomed(f)) {
          dead_[f] = 1;
          newly.push_back(f);
        }
      }
      dead_count_ += static_cast<int>(newly.size());
      // Undetermined edges are counted as normal.
      if (m - dead_count_ > best) rec(i + 1);
      dead_count_ -= static_cast<int>(newly.size());
      for (EdgeId f : newly) dead_[f] = 0;
      unassign(e);
      if (exceeded || best == m) return;
    }
  }

  int dead_count_ = 0;
};

constexpr std::array<std::array<int, 3>, 6> kPerms{
    {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

VertexId common_end(const CubicGraph& h, EdgeId a, EdgeId b) {
  const Edge& x = h.edge(a);
  if (h.has_endpoint(b, x.u)) return x.u;
  if (h.has_endpoint(b, x.v)) return x.v;
  return -1;
}

}  // namespace

NormalSearch brute_force_normal(const CubicGraph& g, long long budget) {
  NormalSearcher s(g, budget);
  NormalSearch out;
  out.coloring = s.run();
  out.nodes = s.nodes;
  out.status = out.coloring ? OracleStatus::Found
               : s.exceeded ? OracleStatus::BudgetExceeded
                            : OracleStatus::NotFound;
  return out;
}

MaxNormalResult max_normal_brute(const CubicGraph& g, long long budget) {
  MaxNormalSearcher s(g, budget);
  s.run();
  MaxNormalResult out;
  out.nodes = s.nodes;
  // A search that reached |E| is complete even if the budget ran out after.
  const bool complete = !s.exceeded || s.best == g.num_edges();
  out.status = complete ? OracleStatus::Found : OracleStatus::BudgetExceeded;
  out.count = std::max(s.best, 0);
  if (s.best >= 0) out.witness = PartialColoring(g, s.best_colors);
  return out;
}

const CubicGraph& petersen_graph() {
  static const CubicGraph p = generate_graph(Family::Petersen);
  return p;
}

bool is_petersen_coloring(const CubicGraph& g, const HMapping& h) {
  const CubicGraph& p = petersen_graph();
  if (static_cast<int>(h.edge_map.size()) != g.num_edges()) return false;
  for (EdgeId x : h.edge_map) {
    if (x < 0 || x >= p.num_edges()) return false;
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto& inc = g.incident(v);
    const EdgeId a = h.edge_map[inc[0]], b = h.edge_map[inc[1]], c = h.edge_map[inc[2]];
    if (a == b || b == c || a == c) return false;
    const VertexId x = common_end(p, a, b);
    if (x < 0 || !p.has_endpoint(c, x)) return false;
  }
  return true;
}

PetersenSearch petersen_coloring(const CubicGraph& g, long long budget) {
  const CubicGraph& p = petersen_graph();
  const int n = g.num_vertices();

  // Vertex order: first endpoints along the BFS edge order.
  std::vector<VertexId> vorder;
  std::vector<char> seen(n, 0);
  for (EdgeId e : bfs_edge_order(g)) {
    for (VertexId v : {g.edge(e).u, g.edge(e).v}) {
      if (!seen[v]) {
        seen[v] = 1;
        vorder.push_back(v);
      }
    }
  }

  std::vector<EdgeId> image(g.num_edges(), -1);
  PetersenSearch out;
  bool exceeded = false;

  // Aut(P) is transitive on vertices with an ordered edge triple, so the
  // first vertex is pinned to vertex 0 with the identity.
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == static_cast<int>(vorder.size())) return true;
    const VertexId v = vorder[i];
    const auto& inc = g.incident(v);
    const int xs = i == 0 ? 1 : p.num_vertices();
    for (VertexId x = 0; x < xs; ++x) {
      const auto& pinc = p.incident(x);
      const int ps = i == 0 ? 1 : 6;
      for (int pi = 0; pi < ps; ++pi) {
        bool ok = true;
        for (int j = 0; j < 3 && ok; ++j) {
          const EdgeId want = pinc[kPerms[pi][j]];
          if (image[inc[j]] >= 0 && image[inc[j]] != want) ok = false;
        }
        if (!ok) continue;
        if (++out.nodes > budget) {
          exceeded = true;
          return false;
        }
        std::array<bool, 3> set{};
        for (int j = 0; j < 3; ++j) {
          if (image[inc[j]] < 0) {
            image[inc[j]] = pinc[kPerms[pi][j]];
            set[j] = true;
          }
        }
        if (self(self, i + 1)) return true;
        for (int j = 0; j < 3; ++j) {
          if (set[j]) image[inc[j]] = -1;
        }
        if (exceeded) return false;
      }
    }
    return false;
  };

  if (rec(rec, 0)) {
    out.status = OracleStatus::Found;
    out.mapping = HMapping{image};
  } else {
    out.status = exceeded ? OracleStatus::BudgetExceeded : OracleStatus::NotFound;
  }
  return out;
}

PartialColoring normal_coloring_from(const CubicGraph& g, const HMapping& h) {
  static const PartialColoring base = *brute_force_normal(petersen_graph()).coloring;
  std::vector<Color> colors(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) colors[e] = base.color(h.edge_map[e]);
  return PartialColoring(g, std::move(colors));
}

}  // namespace pnc
