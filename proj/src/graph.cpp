#include "pnc/graph.hpp"

#include <algorithm>
#include <iterator>
#include <stack>
#include <string>

namespace pnc {

CubicGraph::CubicGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw GraphError("negative vertex count");
  std::vector<int> degree(n, 0);
  incidence_.assign(n, {-1, -1, -1});
  for (EdgeId e = 0; e < num_edges(); ++e) {
    const auto [u, v] = edges_[e];
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw GraphError("edge " + std::to_string(e) + " has an endpoint out of range");
    }
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
    for (VertexId w : {u, v}) {
      if (degree[w] == 3) throw GraphError("non-cubic: vertex " + std::to_string(w) + " has degree > 3");
      incidence_[w][degree[w]++] = e;
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (degree[v] != 3) {
      throw GraphError("non-cubic: vertex " + std::to_string(v) + " has degree " +
                       std::to_string(degree[v]));
    }
  }
}

EdgeList CubicGraph::adjacent_edges(EdgeId e) const {
  EdgeList out;
  out.reserve(4);
  for (VertexId w : {edges_[e].u, edges_[e].v}) {
    for (EdgeId f : incidence_[w]) {
      if (f != e) out.push_back(f);
    }
  }
  return sorted_unique(std::move(out));
}

EdgeList CubicGraph::closed_neighborhood(EdgeId e) const {
  EdgeList out = adjacent_edges(e);
  out.insert(std::upper_bound(out.begin(), out.end(), e), e);
  return out;
}

ValidationReport validate(const CubicGraph& g) {
  ValidationReport report;
  const int n = g.num_vertices();
  if (n == 0) return report;

  // Iterative lowpoint DFS; the tree edge is skipped by id so that parallel
  // edges count as back edges.
  std::vector<int> disc(n, -1), low(n, 0);
  int time = 0;
  int components = 0;
  struct Frame {
    VertexId v;
    EdgeId via;
    int next;
  };
  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    ++components;
    std::stack<Frame> st;
    disc[root] = low[root] = time++;
    st.push({root, -1, 0});
    while (!st.empty()) {
      Frame& f = st.top();
      if (f.next < 3) {
        const EdgeId e = g.incident(f.v)[f.next++];
        if (e == f.via) continue;
        const VertexId w = g.other_end(e, f.v);
        if (disc[w] == -1) {
          disc[w] = low[w] = time++;
          st.push({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        const Frame done = f;
        st.pop();
        if (!st.empty()) {
          Frame& parent = st.top();
          low[parent.v] = std::min(low[parent.v], low[done.v]);
          if (low[done.v] > disc[parent.v]) report.bridges.push_back(done.via);
        }
      }
    }
  }
  std::sort(report.bridges.begin(), report.bridges.end());
  report.is_connected = components == 1;
  report.is_bridgeless = report.bridges.empty();
  return report;
}

std::vector<Circuit> circuits_of(const CubicGraph& g, const EdgeList& edge_set) {
  const int n = g.num_vertices();
  std::vector<std::vector<EdgeId>> local(n);
  std::vector<char> in_set(g.num_edges(), 0);
  for (EdgeId e : edge_set) {
    if (in_set[e]) continue;
    in_set[e] = 1;
    local[g.edge(e).u].push_back(e);
    local[g.edge(e).v].push_back(e);
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!local[v].empty() && local[v].size() != 2) {
      throw GraphError("edge set has degree " + std::to_string(local[v].size()) + " at vertex " +
                       std::to_string(v));
    }
  }

  std::vector<Circuit> out;
  std::vector<char> seen(n, 0);
  for (VertexId start = 0; start < n; ++start) {
    if (seen[start] || local[start].empty()) continue;
    const EdgeId a = local[start][0], b = local[start][1];
    const VertexId na = g.other_end(a, start), nb = g.other_end(b, start);
    EdgeId first = (na < nb || (na == nb && a < b)) ? a : b;

    Circuit c;
    VertexId cur = start;
    EdgeId via = first;
    do {
      seen[cur] = 1;
      c.vertices.push_back(cur);
      c.edges.push_back(via);
      cur = g.other_end(via, cur);
      via = local[cur][0] == via ? local[cur][1] : local[cur][0];
    } while (cur != start);
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

void append_outside(const CubicGraph& g, VertexId v, const EdgeList& own_sorted, EdgeList& out) {
  for (EdgeId f : g.incident(v)) {
    if (!contains(own_sorted, f)) out.push_back(f);
  }
}

}  // namespace

EdgeList boundary(const CubicGraph& g, const Circuit& c) {
  const EdgeList own = sorted_unique(c.edges);
  EdgeList out;
  for (VertexId v : c.vertices) append_outside(g, v, own, out);
  return sorted_unique(std::move(out));
}

EdgeList boundary(const CubicGraph& g, const PathSeg& p) {
  const EdgeList own = sorted_unique(p.edges);
  EdgeList out;
  for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) append_outside(g, p.vertices[i], own, out);
  return sorted_unique(std::move(out));
}

EdgeList boundary(const CubicGraph& g, std::span<const Circuit> cs) {
  EdgeList out;
  for (const Circuit& c : cs) {
    EdgeList b = boundary(g, c);
    out.insert(out.end(), b.begin(), b.end());
  }
  return sorted_unique(std::move(out));
}

EdgeList boundary(const CubicGraph& g, std::span<const PathSeg> ps) {
  EdgeList out;
  for (const PathSeg& p : ps) {
    EdgeList b = boundary(g, p);
    out.insert(out.end(), b.begin(), b.end());
  }
  return sorted_unique(std::move(out));
}

EdgeList sorted_unique(EdgeList list) {
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
  return list;
}

EdgeList set_union(const EdgeList& a, const EdgeList& b) {
  EdgeList out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

EdgeList set_intersection(const EdgeList& a, const EdgeList& b) {
  EdgeList out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

EdgeList set_difference(const EdgeList& a, const EdgeList& b) {
  EdgeList out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains(const EdgeList& sorted, EdgeId e) {
  return std::binary_search(sorted.begin(), sorted.end(), e);
}

}  // namespace pnc
