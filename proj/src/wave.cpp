#include "pnc/wave.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace pnc {

std::vector<PathSeg> Wave::all_paths() const {
  std::vector<PathSeg> out;
  for (const WaveString& ws : strings) out.insert(out.end(), ws.paths.begin(), ws.paths.end());
  return out;
}

std::vector<int> Wave::circuits() const {
  std::vector<int> out;
  for (const WaveString& ws : strings) out.insert(out.end(), ws.circuits.begin(), ws.circuits.end());
  std::sort(out.begin(), out.end());
  return out;
}

EdgeList Wave::edges(const CoreStructure& s) const {
  EdgeList out;
  for (const WaveString& ws : strings) {
    for (int ci : ws.circuits) out.insert(out.end(), s.circuits[ci].edges.begin(), s.circuits[ci].edges.end());
    out.insert(out.end(), ws.connectors.begin(), ws.connectors.end());
  }
  return sorted_unique(std::move(out));
}

namespace {

// Path of `length` edges along circuit c from position `start`, walking
// forwards (dir = +1) or backwards (dir = -1).
PathSeg walk(const Circuit& c, int start, int dir, int length) {
  const int len = c.length();
  PathSeg p;
  int pos = start;
  p.vertices.push_back(c.vertices[pos]);
  for (int s = 0; s < length; ++s) {
    if (dir > 0) {
      p.edges.push_back(c.edges[pos]);
      pos = (pos + 1) % len;
    } else {
      pos = (pos - 1 + len) % len;
      p.edges.push_back(c.edges[pos]);
    }
    p.vertices.push_back(c.vertices[pos]);
  }
  return p;
}

int position_of(const Circuit& c, VertexId v) {
  auto it = std::find(c.vertices.begin(), c.vertices.end(), v);
  return it == c.vertices.end() ? -1 : static_cast<int>(it - c.vertices.begin());
}

// Anchored paths of one length in both directions, lexicographic by vertex
// sequence. A zero-length path appears once.
std::vector<PathSeg> anchored_paths(const Circuit& c, VertexId anchor, int length) {
  const int pos = position_of(c, anchor);
  std::vector<PathSeg> out;
  out.push_back(walk(c, pos, +1, length));
  if (length > 0) {
    PathSeg back = walk(c, pos, -1, length);
    if (back.edges != out.front().edges) out.push_back(std::move(back));
  }
  std::sort(out.begin(), out.end(),
            [](const PathSeg& a, const PathSeg& b) { return a.vertices < b.vertices; });
  return out;
}

bool family_extendable(const CubicGraph& g, const PartialColoring& phi, const std::vector<PathSeg>& family) {
  return extend_123(phi, region_of(g, {}, family)).ok();
}

struct SideResult {
  std::vector<int> circuits;  // starting with the anchor circuit
  std::vector<EdgeId> links;  // links[i] joins circuits[i] to circuits[i + 1]
  std::vector<VertexId> from; // endpoint of links[i] on circuits[i]
  std::vector<VertexId> to;   // endpoint of links[i] on circuits[i + 1]
  std::vector<PathSeg> paths; // paths[i] lies on circuits[i]
};

bool boundaries_share_e3(const CubicGraph& g, const Core& core, const PathSeg& a, const PathSeg& b) {
  for (EdgeId e : set_intersection(boundary(g, a), boundary(g, b))) {
    if (core.class_of[e] == 3) return true;
  }
  return false;
}

}  // namespace

std::vector<StringOfCore> find_strings(const CubicGraph& g, const Core& core, const CoreStructure& s) {
  const int nc = static_cast<int>(s.circuits.size());
  struct Link {
    int to;
    EdgeId edge;
    VertexId from_v, to_v;
  };
  std::vector<std::vector<Link>> links(nc);
  for (EdgeId e : core.E(3)) {
    const auto [a, b] = g.edge(e);
    const int ca = s.circuit_of_vertex[a], cb = s.circuit_of_vertex[b];
    if (ca < 0 || cb < 0 || ca == cb) continue;
    if (!s.circuits[ca].odd() || !s.circuits[cb].odd()) continue;
    links[ca].push_back({cb, e, a, b});
    links[cb].push_back({ca, e, b, a});
  }

  std::vector<char> used(nc, 0);
  std::vector<StringOfCore> out;
  constexpr long long kSearchBudget = 2'000'000;

  while (true) {
    StringOfCore best;
    StringOfCore cur;
    long long steps = 0;
    std::vector<char> on_path(nc, 0);
    std::function<void(int)> dfs = [&](int node) {
      if (++steps > kSearchBudget) return;
      if (cur.t() > best.t()) best = cur;
      for (const Link& l : links[node]) {
        if (used[l.to] || on_path[l.to]) continue;
        on_path[l.to] = 1;
        cur.circuits.push_back(l.to);
        cur.connectors.push_back(l.edge);
        cur.u.push_back(l.from_v);
        cur.v.push_back(l.to_v);
        dfs(l.to);
        cur.circuits.pop_back();
        cur.connectors.pop_back();
        cur.u.pop_back();
        cur.v.pop_back();
        on_path[l.to] = 0;
      }
    };
    for (int start = 0; start < nc; ++start) {
      if (used[start] || links[start].empty()) continue;
      cur = StringOfCore{};
      cur.circuits.push_back(start);
      on_path[start] = 1;
      dfs(start);
      on_path[start] = 0;
    }
    if (best.t() == 0) break;
    for (int ci : best.circuits) used[ci] = 1;
    out.push_back(std::move(best));
  }
  return out;
}

std::optional<Wave> build_wave(const CubicGraph& g, const Core& core, const CoreStructure& s,
                               const PartialColoring& phi_m) {
  const int nc = static_cast<int>(s.circuits.size());
  std::vector<char> in_w(nc, 0);
  std::vector<PathSeg> family;  // all paths chosen so far
  Wave wave;

  auto open_odd = [&](int ci) { return ci >= 0 && !in_w[ci] && s.circuits[ci].odd(); };

  // The family stays jointly extendable, so a candidate only has to be solved
  // together with the family paths whose variables it reaches.
  std::vector<std::vector<VertexId>> fam_vertices;
  std::vector<int> fam_parent;
  std::function<int(int)> root = [&](int x) { return fam_parent[x] == x ? x : fam_parent[x] = root(fam_parent[x]); };
  auto var_vertices = [&](const PathSeg& p) {
    std::vector<VertexId> vs(p.vertices.begin(), p.vertices.end());
    for (EdgeId f : boundary(g, p)) {
      if (!phi_m.colored(f)) {
        vs.push_back(g.edge(f).u);
        vs.push_back(g.edge(f).v);
      }
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
  };
  auto meets = [](const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return true;
      a[i] < b[j] ? ++i : ++j;
    }
    return false;
  };
  auto touched_roots = [&](const std::vector<VertexId>& vs) {
    std::vector<int> roots;
    for (std::size_t i = 0; i < fam_vertices.size(); ++i) {
      if (meets(fam_vertices[i], vs)) roots.push_back(root(static_cast<int>(i)));
    }
    return roots;
  };
  auto extendable_with = [&](const PathSeg& p) {
    const std::vector<int> roots = touched_roots(var_vertices(p));
    std::vector<PathSeg> part;
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (std::find(roots.begin(), roots.end(), root(static_cast<int>(i))) != roots.end()) part.push_back(family[i]);
    }
    part.push_back(p);
    return family_extendable(g, phi_m, part);
  };
  auto add_to_family = [&](const PathSeg& p) {
    std::vector<VertexId> vs = var_vertices(p);
    const std::vector<int> roots = touched_roots(vs);
    const int id = static_cast<int>(family.size());
    family.push_back(p);
    fam_vertices.push_back(std::move(vs));
    fam_parent.push_back(id);
    for (int r : roots) fam_parent[root(r)] = id;
  };

  // One side of a string, grown from `anchor` on circuit `ci`.
  auto grow = [&](VertexId anchor, int ci) {
    SideResult side;
    side.circuits.push_back(ci);
    while (true) {
      const Circuit& c = s.circuits[ci];
      std::optional<PathSeg> chosen;
      VertexId next_anchor = -1;
      int next_circuit = -1;
      EdgeId link = -1;
      for (int len = 1; len < c.length() && !chosen; ++len) {
        for (const PathSeg& p : anchored_paths(c, anchor, len)) {
          const VertexId w = p.back();
          const EdgeId wx = s.e3_at[w];
          if (wx < 0) continue;
          const VertexId x = g.other_end(wx, w);
          const int cx = s.circuit_of_vertex[x];
          if (cx == ci || !open_odd(cx)) continue;
          if (!extendable_with(p)) continue;
          chosen = p;
          next_anchor = x;
          next_circuit = cx;
          link = wx;
          break;
        }
      }
      if (chosen) {
        for (const PathSeg& earlier : side.paths) {
          if (boundaries_share_e3(g, core, earlier, *chosen)) {
            wave.notes.push_back("paths on one side share an E3 boundary edge");
          }
        }
        add_to_family(*chosen);
        side.paths.push_back(*chosen);
        side.links.push_back(link);
        side.from.push_back(chosen->back());
        side.to.push_back(next_anchor);
        side.circuits.push_back(next_circuit);
        in_w[next_circuit] = 1;
        anchor = next_anchor;
        ci = next_circuit;
        continue;
      }
      // Close this side with the longest extendable anchored path.
      for (int len = c.length() - 1; len >= 0 && !chosen; --len) {
        for (const PathSeg& p : anchored_paths(c, anchor, len)) {
          if (extendable_with(p)) {
            chosen = p;
            break;
          }
        }
      }
      add_to_family(*chosen);
      side.paths.push_back(*chosen);
      return side;
    }
  };

  while (true) {
    // Seed from the lowest E3 edge joining two odd circuits outside W.
    EdgeId e = -1;
    for (EdgeId f : core.E(3)) {
      const int ca = s.circuit_of_vertex[g.edge(f).u], cb = s.circuit_of_vertex[g.edge(f).v];
      if (ca != cb && open_odd(ca) && open_odd(cb)) {
        e = f;
        break;
      }
    }
    if (e < 0) break;
    const VertexId u = g.edge(e).u, v = g.edge(e).v;
    const int cu = s.circuit_of_vertex[u], cv = s.circuit_of_vertex[v];
    in_w[cu] = in_w[cv] = 1;

    const std::size_t family_before = family.size();
    SideResult side_u = grow(u, cu);
    const std::size_t family_mid = family.size();

    // Record whether side two also extends after side one has been colored.
    bool second_ok = true;
    {
      std::vector<PathSeg> first(family.begin() + family_before, family.begin() + family_mid);
      ExtendOutcome first_ext = extend_123(phi_m, region_of(g, {}, first));
      SideResult side_v = grow(v, cv);
      if (first_ext.ok()) {
        PartialColoring phi_prime = phi_m;
        apply(phi_prime, first_ext);
        second_ok = family_extendable(g, phi_prime, side_v.paths);
      }

      // Assemble C_0 ... C_t: side u reversed, then side v.
      WaveString ws;
      ws.second_side_extendable = second_ok;
      for (int i = static_cast<int>(side_u.circuits.size()) - 1; i >= 0; --i) {
        ws.circuits.push_back(side_u.circuits[i]);
        ws.paths.push_back(side_u.paths[i]);
        if (i > 0) {
          ws.connectors.push_back(side_u.links[i - 1]);
          ws.u.push_back(side_u.to[i - 1]);
          ws.v.push_back(side_u.from[i - 1]);
        }
      }
      ws.connectors.push_back(e);
      ws.u.push_back(u);
      ws.v.push_back(v);
      for (std::size_t i = 0; i < side_v.circuits.size(); ++i) {
        ws.circuits.push_back(side_v.circuits[i]);
        ws.paths.push_back(side_v.paths[i]);
        if (i < side_v.links.size()) {
          ws.connectors.push_back(side_v.links[i]);
          ws.u.push_back(side_v.from[i]);
          ws.v.push_back(side_v.to[i]);
        }
      }
      wave.strings.push_back(std::move(ws));
    }
  }

  if (wave.strings.empty()) return std::nullopt;
  for (int ci = 0; ci < nc; ++ci) {
    if (s.circuits[ci].odd() && !in_w[ci]) wave.q.push_back(ci);
  }
  return wave;
}

WaveReport verify_wave(const CubicGraph& g, const Core& core, const CoreStructure& s, const PartialColoring& phi_m,
                       const Wave& wave) {
  WaveReport report;
  auto fail = [&](bool& item, std::string what) {
    item = false;
    report.violations.push_back(std::move(what));
  };

  // Structure: disjoint strings of odd circuits, connectors in E3, paths on
  // their circuits with the stated ends.
  std::vector<int> seen;
  for (std::size_t si = 0; si < wave.strings.size(); ++si) {
    const WaveString& ws = wave.strings[si];
    const std::string tag = "string " + std::to_string(si) + ": ";
    if (ws.t() < 1 || ws.circuits.size() != static_cast<std::size_t>(ws.t() + 1) ||
        ws.paths.size() != ws.circuits.size() || ws.u.size() != ws.connectors.size() ||
        ws.v.size() != ws.connectors.size()) {
      fail(report.structure_ok, tag + "inconsistent sizes");
      continue;
    }
    for (int ci : ws.circuits) {
      if (ci < 0 || ci >= static_cast<int>(s.circuits.size()) || !s.circuits[ci].odd()) {
        fail(report.structure_ok, tag + "circuit is not an odd core circuit");
      }
      seen.push_back(ci);
    }
    for (int i = 0; i < ws.t(); ++i) {
      const EdgeId e = ws.connectors[i];
      if (core.class_of[e] != 3 || !g.has_endpoint(e, ws.u[i]) || !g.has_endpoint(e, ws.v[i]) ||
          s.circuit_of_vertex[ws.u[i]] != ws.circuits[i] || s.circuit_of_vertex[ws.v[i]] != ws.circuits[i + 1]) {
        fail(report.structure_ok, tag + "connector " + std::to_string(e) + " does not join its circuits");
      }
    }
    for (int j = 0; j <= ws.t(); ++j) {
      const PathSeg& p = ws.paths[j];
      const Circuit& c = s.circuits[ws.circuits[j]];
      bool on_c = !p.vertices.empty();
      for (EdgeId e : p.edges) on_c = on_c && std::find(c.edges.begin(), c.edges.end(), e) != c.edges.end();
      for (VertexId v : p.vertices) on_c = on_c && s.circuit_of_vertex[v] == ws.circuits[j];
      if (!on_c) {
        fail(report.structure_ok, tag + "path " + std::to_string(j) + " leaves its circuit");
        continue;
      }
      auto has_end = [&](VertexId x) { return p.front() == x || p.back() == x; };
      const bool ends_ok = (j == 0 ? has_end(ws.u[0]) : true) && (j == ws.t() ? has_end(ws.v[ws.t() - 1]) : true) &&
                           (j > 0 && j < ws.t() ? has_end(ws.v[j - 1]) && has_end(ws.u[j]) : true);
      if (!ends_ok) fail(report.structure_ok, tag + "path " + std::to_string(j) + " has wrong ends");
    }
  }
  std::vector<int> sorted_seen = seen;
  std::sort(sorted_seen.begin(), sorted_seen.end());
  if (std::adjacent_find(sorted_seen.begin(), sorted_seen.end()) != sorted_seen.end()) {
    fail(report.structure_ok, "a circuit lies in two strings");
  }
  if (!report.structure_ok) return report;

  const std::vector<PathSeg> family = wave.all_paths();

  // Item (1).
  if (!extend_123(phi_m, region_of(g, {}, family)).ok()) fail(report.item1, "item 1: path family not extendable");

  // Item (2): lengthening an end path by the far end-edge must break
  // extendability. For a zero-length path both edges at the anchor count.
  std::size_t offset = 0;
  for (std::size_t si = 0; si < wave.strings.size(); ++si) {
    const WaveString& ws = wave.strings[si];
    for (int j : {0, ws.t()}) {
      const PathSeg& p = ws.paths[j];
      const Circuit& c = s.circuits[ws.circuits[j]];
      const VertexId anchor = j == 0 ? ws.u[0] : ws.v[ws.t() - 1];
      if (p.length() > c.length() - 2) continue;
      std::vector<PathSeg> longer;
      if (p.length() == 0) {
        longer = anchored_paths(c, anchor, 1);
      } else {
        const VertexId far = p.front() == anchor ? p.back() : p.front();
        const VertexId near_far = p.front() == anchor ? p.vertices[p.vertices.size() - 2] : p.vertices[1];
        // Extend beyond `far`, away from the path.
        const int pos = position_of(c, far);
        const int len = c.length();
        const VertexId fwd = c.vertices[(pos + 1) % len];
        const int dir = fwd == near_far ? -1 : +1;
        PathSeg step = walk(c, pos, dir, 1);
        PathSeg ext = p.front() == anchor ? p : PathSeg{{p.vertices.rbegin(), p.vertices.rend()},
                                                        {p.edges.rbegin(), p.edges.rend()}};
        ext.vertices.push_back(step.vertices[1]);
        ext.edges.push_back(step.edges[0]);
        longer.push_back(std::move(ext));
      }
      for (const PathSeg& bar : longer) {
        std::vector<PathSeg> substituted = family;
        substituted[offset + j] = bar;
        if (extend_123(phi_m, region_of(g, {}, substituted)).ok()) {
          fail(report.item2, "item 2: end path " + std::to_string(j) + " of string " + std::to_string(si) +
                                 " can be lengthened");
        }
      }
    }
    offset += ws.paths.size();
  }

  // Item (3).
  auto e3_part = [&](EdgeList b) {
    EdgeList out;
    for (EdgeId e : b)
      if (core.class_of[e] == 3) out.push_back(e);
    return out;
  };
  std::vector<EdgeList> q_bounds;
  for (int ci : wave.q) q_bounds.push_back(e3_part(boundary(g, s.circuits[ci])));
  std::vector<EdgeList> p_bounds;
  for (const PathSeg& p : family) p_bounds.push_back(e3_part(boundary(g, p)));
  for (std::size_t a = 0; a < q_bounds.size(); ++a) {
    for (std::size_t b = a + 1; b < q_bounds.size(); ++b) {
      if (!set_intersection(q_bounds[a], q_bounds[b]).empty()) {
        fail(report.item3, "item 3: Q circuits " + std::to_string(wave.q[a]) + " and " +
                               std::to_string(wave.q[b]) + " share an E3 boundary edge");
      }
    }
    for (std::size_t b = 0; b < p_bounds.size(); ++b) {
      if (!set_intersection(q_bounds[a], p_bounds[b]).empty()) {
        fail(report.item3, "item 3: Q circuit " + std::to_string(wave.q[a]) + " shares an E3 boundary edge with path " +
                               std::to_string(b));
      }
    }
  }
  return report;
}

}  // namespace pnc
