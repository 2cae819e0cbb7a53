#include "pnc/coloring.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>
#include <unordered_set>

namespace pnc {

ColoringConflict::ColoringConflict(EdgeId edge_, VertexId vertex_, EdgeId clash_)
    : std::runtime_error("edge " + std::to_string(edge_) + " clashes with edge " + std::to_string(clash_) +
                         " at vertex " + std::to_string(vertex_)),
      edge(edge_),
      vertex(vertex_),
      clash(clash_) {}

PartialColoring::PartialColoring(const CubicGraph& g) : g_(&g), colors_(g.num_edges(), kUncolored) {}

PartialColoring::PartialColoring(const CubicGraph& g, std::vector<Color> colors)
    : g_(&g), colors_(std::move(colors)) {
  if (static_cast<int>(colors_.size()) != g.num_edges()) {
    throw std::invalid_argument("coloring size does not match edge count");
  }
  for (Color c : colors_) {
    if (c < 0 || c > kNumColors) throw std::invalid_argument("color out of range");
  }
}

ColorMask PartialColoring::palette(VertexId v, EdgeId except) const {
  ColorMask mask = 0;
  for (EdgeId f : g_->incident(v)) {
    if (f != except && colors_[f] != kUncolored) mask |= color_bit(colors_[f]);
  }
  return mask;
}

ColorMask PartialColoring::blocked(EdgeId e) const {
  const Edge& ed = g_->edge(e);
  return palette(ed.u, e) | palette(ed.v, e);
}

void PartialColoring::set(EdgeId e, Color c) {
  if (c < 1 || c > kNumColors) throw std::invalid_argument("color must be in 1..5");
  const Edge& ed = g_->edge(e);
  for (VertexId w : {ed.u, ed.v}) {
    for (EdgeId f : g_->incident(w)) {
      if (f != e && colors_[f] == c) throw ColoringConflict(e, w, f);
    }
  }
  colors_[e] = c;
}

bool PartialColoring::try_set(EdgeId e, Color c) {
  if (c < 1 || c > kNumColors || (blocked(e) & color_bit(c))) return false;
  colors_[e] = c;
  return true;
}

bool PartialColoring::is_total() const {
  return std::none_of(colors_.begin(), colors_.end(), [](Color c) { return c == kUncolored; });
}

std::optional<std::pair<VertexId, EdgeId>> PartialColoring::find_clash() const {
  for (VertexId v = 0; v < g_->num_vertices(); ++v) {
    const auto& inc = g_->incident(v);
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        const Color a = colors_[inc[i]];
        if (a != kUncolored && a == colors_[inc[j]] && inc[i] != inc[j]) return std::make_pair(v, inc[j]);
      }
    }
  }
  return std::nullopt;
}

int PartialColoring::colored_count() const {
  return static_cast<int>(std::count_if(colors_.begin(), colors_.end(), [](Color c) { return c != kUncolored; }));
}

const char* to_string(EdgeStatus s) {
  switch (s) {
    case EdgeStatus::Poor:
      return "poor";
    case EdgeStatus::Rich:
      return "rich";
    case EdgeStatus::Abnormal:
      return "abnormal";
    case EdgeStatus::Undetermined:
      return "undetermined";
  }
  return "?";
}

EdgeStatus edge_status(const PartialColoring& psi, EdgeId e) {
  ColorMask mask = 0;
  for (EdgeId f : psi.graph().closed_neighborhood(e)) {
    if (!psi.colored(f)) return EdgeStatus::Undetermined;
    mask |= color_bit(psi.color(f));
  }
  switch (std::popcount(mask)) {
    case 3:
      return EdgeStatus::Poor;
    case 5:
      return EdgeStatus::Rich;
    default:
      return EdgeStatus::Abnormal;
  }
}

bool is_inner(const PartialColoring& psi, EdgeId e) {
  for (EdgeId f : psi.graph().closed_neighborhood(e)) {
    if (!psi.colored(f)) return false;
  }
  return true;
}

int theta(const Core& core, const PartialColoring& psi, EdgeId e) {
  const bool in_e0 = core.class_of[e] == 0;
  if (!is_inner(psi, e)) return in_e0 ? 0 : -1;
  const bool normal = is_normal(edge_status(psi, e));
  if (in_e0 && normal) return 1;
  if (!in_e0 && !normal) return -1;
  return 0;
}

int theta_sum(const Core& core, const PartialColoring& psi, const EdgeList& edges) {
  int sum = 0;
  for (EdgeId e : edges) sum += theta(core, psi, e);
  return sum;
}

int theta_total(const Core& core, const PartialColoring& psi) {
  int sum = 0;
  for (EdgeId e = 0; e < psi.graph().num_edges(); ++e) sum += theta(core, psi, e);
  return sum;
}

int ThetaLedger::total(const EdgeList& edges) const {
  int sum = 0;
  for (EdgeId e : edges) sum += theta_of[e];
  return sum;
}

int ThetaLedger::total() const {
  int sum = 0;
  for (int t : theta_of) sum += t;
  return sum;
}

ThetaLedger make_theta_ledger(const Core& core, const PartialColoring& psi) {
  ThetaLedger ledger;
  ledger.theta_of.resize(psi.graph().num_edges());
  for (EdgeId e = 0; e < psi.graph().num_edges(); ++e) ledger.theta_of[e] = theta(core, psi, e);
  return ledger;
}

PartialColoring major_coloring(const CubicGraph& g, const Core& core) {
  PartialColoring phi(g);
  for (int i = 0; i < 3; ++i) {
    for (EdgeId e : core.matchings[i]) {
      if (core.class_of[e] == 1) phi.set(e, i + 1);
    }
  }
  return phi;
}

bool is_psi_good(const PartialColoring& psi, EdgeId h, VertexId v) {
  const CubicGraph& g = psi.graph();
  if (!g.has_endpoint(h, v)) throw GraphError("vertex is not an endpoint of the edge");
  if (psi.palette(v) == kLowColors) return true;
  // Both other edges must be colored, with 4 and 5.
  int others = 0;
  for (EdgeId f : g.incident(v)) others += f != h && psi.colored(f);
  if (others != 2 || psi.palette(v, h) != kHighColors) return false;
  return !psi.colored(h) || (color_bit(psi.color(h)) & kLowColors);
}

EdgeList script_e(const PartialColoring& psi, const EdgeList& h_edges) {
  const CubicGraph& g = psi.graph();
  const EdgeList own = sorted_unique(h_edges);
  std::vector<char> on_h(g.num_vertices(), 0);
  for (EdgeId e : own) on_h[g.edge(e).u] = on_h[g.edge(e).v] = 1;
  EdgeList out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!on_h[v]) continue;
    for (EdgeId f : g.incident(v)) {
      if (!contains(own, f) && !is_psi_good(psi, f, v)) out.push_back(f);
    }
  }
  return sorted_unique(std::move(out));
}

Region region_of(const CubicGraph& g, std::span<const Circuit> circuits, std::span<const PathSeg> paths) {
  Region r;
  for (const Circuit& c : circuits) r.body.insert(r.body.end(), c.edges.begin(), c.edges.end());
  for (const PathSeg& p : paths) r.body.insert(r.body.end(), p.edges.begin(), p.edges.end());
  r.rim = set_union(boundary(g, circuits), boundary(g, paths));
  return r;
}

Region region_of(const CubicGraph& g, const Circuit& c) { return {c.edges, boundary(g, c)}; }

Region region_of(const CubicGraph& g, const PathSeg& p) { return {p.edges, boundary(g, p)}; }

Region region_of_subgraph(const CubicGraph& g, const EdgeList& edges) {
  Region r;
  r.body = edges;
  const EdgeList own = sorted_unique(edges);
  EdgeList rim;
  for (EdgeId e : own) {
    for (VertexId w : {g.edge(e).u, g.edge(e).v}) {
      for (EdgeId f : g.incident(w)) {
        if (!contains(own, f)) rim.push_back(f);
      }
    }
  }
  r.rim = sorted_unique(std::move(rim));
  return r;
}

ExtendOutcome extend_123(const PartialColoring& psi, const Region& region, const Requirement& require,
                         long long max_solutions) {
  ExtendOutcome out;
  for (EdgeId e : region.body) {
    if (psi.colored(e)) {
      out.reason = "precondition";
      return out;
    }
  }
  const EdgeList body_sorted = sorted_unique(region.body);
  std::vector<EdgeId> vars;
  for (EdgeId e : region.body) {
    if (std::find(vars.begin(), vars.end(), e) == vars.end()) vars.push_back(e);
  }
  for (EdgeId e : region.rim) {
    if (contains(body_sorted, e)) continue;
    if (psi.colored(e)) {
      if (!(color_bit(psi.color(e)) & kLowColors)) {
        out.reason = "precondition";
        return out;
      }
    } else {
      vars.push_back(e);
    }
  }

  const CubicGraph& g = psi.graph();
  auto touching = [&](EdgeId x, EdgeId y) {
    const Edge& a = g.edge(x);
    const Edge& b = g.edge(y);
    return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
  };
  // Each body edge is followed by the rim edges that touch it, so that only a
  // few assigned edges ever constrain the unassigned ones.
  {
    std::vector<EdgeId> ordered;
    std::vector<char> placed(vars.size(), 0);
    const std::size_t n_body = std::min(vars.size(), body_sorted.size());
    for (std::size_t i = 0; i < n_body; ++i) {
      ordered.push_back(vars[i]);
      placed[i] = 1;
      for (std::size_t j = n_body; j < vars.size(); ++j) {
        if (!placed[j] && touching(vars[i], vars[j])) {
          ordered.push_back(vars[j]);
          placed[j] = 1;
        }
      }
    }
    for (std::size_t j = 0; j < vars.size(); ++j) {
      if (!placed[j]) ordered.push_back(vars[j]);
    }
    vars = std::move(ordered);
  }

  PartialColoring work = psi;
  bool stop = false;
  bool found = false;

  // Backtracking over one group of variables. A state is the position plus the
  // colors of earlier variables that touch later ones; states with no leaf
  // below them are remembered and skipped.
  auto solve = [&](const std::vector<EdgeId>& vs, const std::function<bool()>& leaf) {
    const std::size_t n = vs.size();
    std::vector<std::vector<std::size_t>> frontier(n + 1);
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t last = j;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (touching(vs[j], vs[k])) last = k;
      }
      for (std::size_t i = j + 1; i <= last; ++i) frontier[i].push_back(j);
    }
    std::unordered_set<std::string> dead;
    auto key = [&](std::size_t i) {
      std::string k = std::to_string(i) + ':';
      for (std::size_t j : frontier[i]) k += static_cast<char>('0' + work.color(vs[j]));
      return k;
    };
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
      if (i == n) {
        stop = leaf();
        return true;
      }
      const std::string k = key(i);
      if (dead.count(k)) return false;
      const EdgeId e = vs[i];
      const ColorMask bad = work.blocked(e);
      bool any = false;
      for (Color c = 1; c <= 3 && !stop; ++c) {
        if (bad & color_bit(c)) continue;
        work.assign_unchecked(e, c);
        any = rec(i + 1) || any;
      }
      if (!stop) work.unset(e);
      if (!any) dead.insert(k);
      return any;
    };
    rec(0);
  };

  if (!require) {
    // Variables interact only through shared endpoints; solve each group alone.
    std::vector<int> parent(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (std::size_t i = 0; i < vars.size(); ++i) {
      for (std::size_t j = i + 1; j < vars.size(); ++j) {
        if (touching(vars[i], vars[j])) parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
      }
    }
    std::vector<std::vector<EdgeId>> groups;
    std::vector<int> group_of(vars.size(), -1);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      const int r = find(static_cast<int>(i));
      if (group_of[r] < 0) {
        group_of[r] = static_cast<int>(groups.size());
        groups.emplace_back();
      }
      groups[group_of[r]].push_back(vars[i]);
    }
    for (const auto& group : groups) {
      stop = false;
      solve(group, [] { return true; });
      if (!stop) {
        out.reason = "infeasible";
        return out;
      }
    }
    out.plain_extendable = true;
    out.solutions_tried = 1;
    out.status = ExtendStatus::Extended;
    for (EdgeId e : vars) out.assignment.emplace_back(e, work.color(e));
    return out;
  }

  solve(vars, [&] {
    out.plain_extendable = true;
    ++out.solutions_tried;
    if (require(work)) {
      found = true;
      out.assignment.clear();
      for (EdgeId e : vars) out.assignment.emplace_back(e, work.color(e));
      return true;
    }
    return out.solutions_tried >= max_solutions;
  });

  if (found) {
    out.status = ExtendStatus::Extended;
  } else {
    out.reason = out.plain_extendable ? "requirement" : "infeasible";
  }
  return out;
}

void apply(PartialColoring& psi, const ExtendOutcome& outcome) {
  for (const auto& [e, c] : outcome.assignment) psi.set(e, c);
}

bool is_extendable(const PartialColoring& psi, const Region& region) {
  return extend_123(psi, region).ok();
}

namespace {

EdgeId unique_e3_boundary(const Core& core, const CubicGraph& g, const Circuit& c) {
  EdgeId found = -1;
  for (EdgeId e : boundary(g, c)) {
    if (core.class_of[e] != 3) continue;
    if (found >= 0) throw GraphError("circuit has more than one E3 boundary edge");
    found = e;
  }
  if (found < 0) throw GraphError("circuit has no E3 boundary edge");
  return found;
}

}  // namespace

bool psi_connected(const Core& core, const PartialColoring& psi, const Circuit& c1, const Circuit& c2) {
  const CubicGraph& g = psi.graph();
  const EdgeId e1 = unique_e3_boundary(core, g, c1);
  const EdgeId e2 = unique_e3_boundary(core, g, c2);
  const EdgeList n1 = g.adjacent_edges(e1);
  for (EdgeId f : set_intersection(n1, g.adjacent_edges(e2))) {
    if (psi.colored(f) && (color_bit(psi.color(f)) & kHighColors)) return true;
  }
  return false;
}

std::optional<PartialColoring> find_three_edge_coloring(const CubicGraph& g) {
  const int m = g.num_edges();
  PartialColoring psi(g);
  if (m == 0) return psi;

  // BFS edge order so that every edge after the first star touches a colored one.
  std::vector<EdgeId> order;
  std::vector<char> seen_e(m, 0), seen_v(g.num_vertices(), 0);
  for (VertexId root = 0; root < g.num_vertices(); ++root) {
    if (seen_v[root]) continue;
    std::queue<VertexId> q;
    q.push(root);
    seen_v[root] = 1;
    while (!q.empty()) {
      const VertexId v = q.front();
      q.pop();
      for (EdgeId e : g.incident(v)) {
        if (!seen_e[e]) {
          seen_e[e] = 1;
          order.push_back(e);
        }
        const VertexId w = g.other_end(e, v);
        if (!seen_v[w]) {
          seen_v[w] = 1;
          q.push(w);
        }
      }
    }
  }

  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == order.size()) return true;
    const EdgeId e = order[i];
    const ColorMask bad = psi.blocked(e);
    // The first edge is fixed to color 1 by symmetry.
    const Color last = i == 0 ? 1 : 3;
    for (Color c = 1; c <= last; ++c) {
      if (bad & color_bit(c)) continue;
      psi.assign_unchecked(e, c);
      if (rec(i + 1)) return true;
    }
    psi.unset(e);
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return psi;
}

}  // namespace pnc
