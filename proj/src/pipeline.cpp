#include "pnc/pipeline.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <sstream>

namespace pnc {

int PncResult::repairs() const {
  int n = 0;
  for (const StageReport& s : stages) n += static_cast<int>(s.repairs.size());
  return n;
}

EdgeList abnormal_edges_of(const PartialColoring& psi) {
  EdgeList out;
  for (EdgeId e = 0; e < psi.graph().num_edges(); ++e) {
    if (edge_status(psi, e) == EdgeStatus::Abnormal) out.push_back(e);
  }
  return out;
}

const SevenCircuitTemplate& seven_circuit_template() {
  // Found by exhaustive search over the 7 circuit edges and f; reproduced in
  // tests/golden/seven_circuit_template.json.
  static const SevenCircuitTemplate t{{4, 2, 3, 1, 5, 4, 5}, 3};
  return t;
}

// ---------------------------------------------------------------------------
// Local search

namespace {

std::vector<EdgeId> dedup_in_order(const EdgeList& in) {
  std::vector<EdgeId> out;
  std::vector<EdgeId> seen;
  for (EdgeId e : in) {
    if (std::find(seen.begin(), seen.end(), e) != seen.end()) continue;
    seen.push_back(e);
    out.push_back(e);
  }
  return out;
}

}  // namespace

RepairOutcome repair_fallback(const Core& core, PartialColoring& psi, const EdgeList& component,
                              const EdgeList& free_edges, long long node_budget) {
  const CubicGraph& g = psi.graph();
  RepairOutcome out;
  auto met = [&] {
    return theta_sum(core, psi, component) >= static_cast<int>(script_e(psi, component).size());
  };
  out.charge_met_before = out.charge_met_after = met();
  const std::vector<EdgeId> vars = dedup_in_order(free_edges);
  bool all_colored = true;
  for (EdgeId e : vars) all_colored = all_colored && psi.colored(e);
  if (vars.empty() || (out.charge_met_before && all_colored && psi.is_proper())) {
    out.exhausted = true;
    return out;
  }
  const int n = static_cast<int>(vars.size());

  std::vector<int> var_index(g.num_edges(), -1);
  for (int i = 0; i < n; ++i) var_index[vars[i]] = i;

  EdgeList affected;
  for (EdgeId e : vars) {
    const EdgeList nb = g.closed_neighborhood(e);
    affected.insert(affected.end(), nb.begin(), nb.end());
  }
  affected = sorted_unique(std::move(affected));

  // An affected edge's theta is settled once the last free edge around it is.
  std::vector<std::vector<EdgeId>> settled_at(n);
  std::vector<int> ceiling(n + 1, 0);
  for (EdgeId a : affected) {
    int last = -1;
    for (EdgeId f : g.closed_neighborhood(a)) last = std::max(last, var_index[f]);
    settled_at[last].push_back(a);
    ceiling[last] += core.class_of[a] == 0 ? 1 : 0;
  }
  for (int i = n - 1; i >= 0; --i) ceiling[i] += ceiling[i + 1];

  out.value_before = 0;
  for (EdgeId a : affected) out.value_before += theta(core, psi, a);

  PartialColoring work = psi;
  for (EdgeId e : vars) work.unset(e);
  const bool start_proper = all_colored && psi.is_proper();
  int best = start_proper ? out.value_before : INT_MIN;
  std::vector<Color> best_colors;
  bool stopped = false;

  auto rec = [&](auto&& self, int i, int acc) -> void {
    if (stopped) return;
    if (++out.nodes > node_budget) {
      stopped = true;
      return;
    }
    if (i == n) {
      if (acc > best) {
        best = acc;
        best_colors.assign(n, kUncolored);
        for (int j = 0; j < n; ++j) best_colors[j] = work.color(vars[j]);
      }
      return;
    }
    if (best != INT_MIN && acc + ceiling[i] <= best) return;
    const EdgeId e = vars[i];
    const ColorMask bad = work.blocked(e);
    for (Color c = 1; c <= kNumColors; ++c) {
      if (bad & color_bit(c)) continue;
      work.assign_unchecked(e, c);
      int gain = 0;
      for (EdgeId a : settled_at[i]) gain += theta(core, work, a);
      self(self, i + 1, acc + gain);
      if (stopped) break;
    }
    work.unset(e);
  };
  rec(rec, 0, 0);
  out.exhausted = !stopped;

  if (!best_colors.empty()) {
    for (int j = 0; j < n; ++j) psi.assign_unchecked(vars[j], best_colors[j]);
    out.changed = true;
    out.value_after = best;
  } else {
    out.value_after = out.value_before;
  }
  out.charge_met_after = met();
  return out;
}

std::optional<std::vector<std::pair<EdgeId, Color>>> first_local_assignment(
    const PartialColoring& psi, const std::vector<EdgeId>& vars, ColorMask allowed,
    const std::function<bool(const PartialColoring&)>& accept, long long node_budget) {
  PartialColoring work = psi;
  for (EdgeId e : vars) work.unset(e);
  long long nodes = 0;
  bool found = false;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (found || ++nodes > node_budget) return;
    if (i == vars.size()) {
      found = accept(work);
      return;
    }
    const EdgeId e = vars[i];
    const ColorMask bad = work.blocked(e);
    for (Color c = 1; c <= kNumColors && !found; ++c) {
      if (!(allowed & color_bit(c)) || (bad & color_bit(c))) continue;
      work.assign_unchecked(e, c);
      self(self, i + 1);
    }
    if (!found) work.unset(e);
  };
  rec(rec, 0);
  if (!found) return std::nullopt;
  std::vector<std::pair<EdgeId, Color>> out;
  for (EdgeId e : vars) out.emplace_back(e, work.color(e));
  return out;
}

// ---------------------------------------------------------------------------
// Staged construction

namespace {

struct CircuitWalk {
  std::vector<VertexId> u;  // u[0] is the start
  EdgeList c;               // c[i] joins u[i] and u[i+1 mod k]
};

CircuitWalk walk_circuit(const Circuit& circ, VertexId start, int dir) {
  const int k = circ.length();
  int p = 0;
  while (circ.vertices[p] != start) ++p;
  CircuitWalk w;
  for (int j = 0; j < k; ++j) {
    if (dir > 0) {
      w.u.push_back(circ.vertices[(p + j) % k]);
      w.c.push_back(circ.edges[(p + j) % k]);
    } else {
      w.u.push_back(circ.vertices[((p - j) % k + k) % k]);
      w.c.push_back(circ.edges[((p - j - 1) % k + k) % k]);
    }
  }
  return w;
}

// The edge at v that is not an edge of the circuit.
EdgeId off_edge(const CubicGraph& g, const Circuit& circ, VertexId v) {
  for (EdgeId f : g.incident(v)) {
    if (std::find(circ.edges.begin(), circ.edges.end(), f) == circ.edges.end()) return f;
  }
  throw GraphError("vertex has no edge off the circuit");
}

int popcount(ColorMask m) { return __builtin_popcount(m); }

using Plan = std::vector<std::pair<EdgeId, Color>>;

// Writes the plan (recolorings included) and checks properness around it.
bool try_plan(PartialColoring& psi, const Plan& plan) {
  PartialColoring trial = psi;
  for (const auto& [e, c] : plan) trial.unset(e);
  for (const auto& [e, c] : plan) {
    if (!trial.try_set(e, c)) return false;
  }
  psi = std::move(trial);
  return true;
}

class Builder {
 public:
  Builder(const CubicGraph& g, const PncOptions& opt) : g_(g), opt_(opt), psi_(g) {}

  PncResult run();

 private:
  // bookkeeping
  void begin(const std::string& name, int targets);
  void end();
  StageReport& cur() { return stages_.back(); }
  int theta_of(const EdgeList& edges) const { return theta_sum(core_, psi_, edges); }
  ChargeRecord charge(const std::string& label, const EdgeList& edges) const;
  bool charge_met(const EdgeList& edges) const { return charge("", edges).met(); }
  void record_charge(const std::string& label, const EdgeList& edges) { cur().charges.push_back(charge(label, edges)); }
  void add_component(const std::string& label, const EdgeList& edges);
  void repair(const std::string& label, const std::string& reason, const EdgeList& charged, EdgeList free_edges);
  EdgeList uncolored_rim(const EdgeList& edges) const;
  // Repairs components whose charge fails once their surroundings are colored.
  void enforce_charges();

  // coloring helpers
  bool color_alternating(const std::vector<EdgeId>& seq);
  void greedy_fill(EdgeId e);
  void color_remainder(const EdgeList& edges);

  // stages
  bool stage_three_coloring();
  void stage_core();
  void stage_even();
  void stage_wave();
  void stage_h3_prime();
  void stage_omega_pairs();
  void stage_e3_fill();
  void stage_t();
  void stage_final();

  void h3_prime_circuit(int ci);
  bool seven_circuit(int ci, EdgeId f);
  bool psi_pair(int i, int j);
  bool gc_pair(int i, int j);
  void t_circuit(int ci);
  EdgeList outside_t() const;

  const CubicGraph& g_;
  PncOptions opt_;
  Core core_;
  int mu3_ = 0;
  bool mu3_exact_ = false;
  CoreStructure s_;
  PartialColoring psi_;
  PartialColoring phi_m_;
  std::optional<Wave> wave_;
  std::vector<StageReport> stages_;
  std::vector<KComponent> k_;
  std::vector<char> done_;
  std::vector<char> in_w_;
  std::vector<int> t_;
  int colored_before_ = 0;
};

ChargeRecord Builder::charge(const std::string& label, const EdgeList& edges) const {
  ChargeRecord r;
  r.component = label;
  r.theta = theta_of(edges);
  r.script_e = static_cast<int>(script_e(psi_, edges).size());
  return r;
}

void Builder::begin(const std::string& name, int targets) {
  StageReport r;
  r.stage = name;
  r.targets = targets;
  // Before a core exists there is nothing to charge.
  r.theta_before = core_.class_of.empty() ? 0 : theta_total(core_, psi_);
  stages_.push_back(std::move(r));
  colored_before_ = psi_.colored_count();
}

void Builder::enforce_charges() {
  for (const KComponent& kc : k_) {
    if (!charge_met(kc.edges)) repair(kc.label, "charge", kc.edges, kc.edges);
  }
}

void Builder::end() {
  if (auto clash = psi_.find_clash()) {
    throw std::logic_error("stage " + cur().stage + " left a clash at vertex " + std::to_string(clash->first));
  }
  cur().theta_after = core_.class_of.empty() ? 0 : theta_total(core_, psi_);
  cur().edges_colored = psi_.colored_count() - colored_before_;
}

void Builder::add_component(const std::string& label, const EdgeList& edges) {
  k_.push_back({label, sorted_unique(edges)});
}

EdgeList Builder::uncolored_rim(const EdgeList& edges) const {
  EdgeList out;
  for (EdgeId f : region_of_subgraph(g_, edges).rim) {
    if (psi_.colored(f)) continue;
    // Leave E3 edges into circuits that later stages still have to color.
    bool later = false;
    for (VertexId w : {g_.edge(f).u, g_.edge(f).v}) {
      const int ci = s_.circuit_of_vertex[w];
      if (ci >= 0 && !done_[ci] && !contains(sorted_unique(edges), s_.circuits[ci].edges.front())) later = true;
    }
    if (!later) out.push_back(f);
  }
  return out;
}

void Builder::repair(const std::string& label, const std::string& reason, const EdgeList& charged,
                     EdgeList free_edges) {
  if (!opt_.repair) throw PncError(cur().stage + ": " + label + ": " + reason, stages_);
  RepairRecord r;
  r.component = label;
  r.reason = reason;
  r.theta_before = theta_of(charged);
  repair_fallback(core_, psi_, charged, free_edges, opt_.repair_node_budget);
  for (EdgeId e : free_edges) {
    if (!psi_.colored(e)) greedy_fill(e);
  }
  r.theta_after = theta_of(charged);
  r.charge_met = charge_met(charged);
  cur().repairs.push_back(std::move(r));
}

bool Builder::color_alternating(const std::vector<EdgeId>& seq) {
  for (Color first : {4, 5}) {
    PartialColoring trial = psi_;
    Color c = first;
    bool ok = true;
    for (EdgeId e : seq) {
      if (!trial.try_set(e, c)) {
        ok = false;
        break;
      }
      c = 9 - c;
    }
    if (ok) {
      psi_ = std::move(trial);
      return true;
    }
  }
  return false;
}

void Builder::greedy_fill(EdgeId e) {
  const ColorMask bad = psi_.blocked(e);
  const EdgeList around = g_.closed_neighborhood(e);
  int best = INT_MIN;
  Color pick = kUncolored;
  for (Color c = 1; c <= kNumColors; ++c) {
    if (bad & color_bit(c)) continue;
    psi_.assign_unchecked(e, c);
    const int v = theta_of(around);
    if (v > best) {
      best = v;
      pick = c;
    }
  }
  psi_.assign_unchecked(e, pick);
}

// Colors uncolored edges of the set with 4/5 along paths and even cycles,
// falling back to the best admissible color edge by edge.
void Builder::color_remainder(const EdgeList& edges) {
  EdgeList todo;
  for (EdgeId e : sorted_unique(edges)) {
    if (!psi_.colored(e)) todo.push_back(e);
  }
  std::map<VertexId, std::vector<EdgeId>> at;
  for (EdgeId e : todo) {
    at[g_.edge(e).u].push_back(e);
    at[g_.edge(e).v].push_back(e);
  }
  std::vector<char> used(g_.num_edges(), 0);
  auto trace = [&](VertexId start, EdgeId first) {
    std::vector<EdgeId> seq;
    VertexId cur = start;
    EdgeId via = first;
    while (via >= 0 && !used[via]) {
      used[via] = 1;
      seq.push_back(via);
      cur = g_.other_end(via, cur);
      EdgeId next = -1;
      const auto& here = at[cur];
      if (here.size() == 2) next = here[0] == via ? here[1] : here[0];
      via = next;
    }
    return seq;
  };
  std::vector<std::vector<EdgeId>> pieces;
  // Paths first, from their lower end; then cycles.
  for (auto& [v, list] : at) {
    if (list.size() == 1 && !used[list[0]]) pieces.push_back(trace(v, list[0]));
  }
  for (auto& [v, list] : at) {
    if (list.size() == 2 && !used[list[0]]) pieces.push_back(trace(v, std::min(list[0], list[1])));
  }
  for (const auto& seq : pieces) {
    if (!color_alternating(seq)) {
      for (EdgeId e : seq) greedy_fill(e);
    }
  }
  for (EdgeId e : todo) {
    if (!psi_.colored(e)) greedy_fill(e);
  }
}

// ---------------------------------------------------------------------------

bool Builder::stage_three_coloring() {
  begin("three_coloring", 1);
  auto three = find_three_edge_coloring(g_);
  if (!three) {
    cur().cases.push_back("none");
    end();
    return false;
  }
  std::array<EdgeList, 3> classes;
  for (EdgeId e = 0; e < g_.num_edges(); ++e) classes[three->color(e) - 1].push_back(e);
  core_ = core_from_triple(g_, classes[0], classes[1], classes[2]);
  mu3_ = 0;
  mu3_exact_ = true;
  psi_ = *three;
  cur().cases.push_back("found");
  end();
  return true;
}

void Builder::stage_core() {
  if (opt_.core) {
    core_ = core_from_triple(g_, opt_.core->matchings[0], opt_.core->matchings[1], opt_.core->matchings[2]);
    mu3_ = core_.k;
    mu3_exact_ = false;
  } else {
    Mu3Result r = compute_mu3(g_, opt_.mu3_budget);
    core_ = std::move(r.witness);
    mu3_ = r.mu3;
    mu3_exact_ = r.exact;
  }
  s_ = analyze_core(g_, core_);
  done_.assign(s_.circuits.size(), 0);
  in_w_.assign(s_.circuits.size(), 0);
  phi_m_ = major_coloring(g_, core_);
  psi_ = PartialColoring(g_);
  begin("core", 1);
  cur().cases.push_back(opt_.core ? "supplied" : (mu3_exact_ ? "exact" : "budget"));
  psi_ = phi_m_;
  end();
}

void Builder::stage_even() {
  int targets = 0;
  for (const Circuit& c : s_.circuits) targets += !c.odd();
  begin("even_circuits", targets);
  for (std::size_t ci = 0; ci < s_.circuits.size(); ++ci) {
    const Circuit& c = s_.circuits[ci];
    if (c.odd()) continue;
    const std::string label = "H1[" + std::to_string(ci) + "]";
    if (!color_alternating(c.edges)) repair(label, "alternation", c.edges, c.edges);
    done_[ci] = 1;
    add_component(label, c.edges);
    record_charge(label, c.edges);
  }
  end();
}

void Builder::stage_wave() {
  wave_ = build_wave(g_, core_, s_, phi_m_);
  begin("wave", wave_ ? static_cast<int>(wave_->strings.size()) : 0);
  if (!wave_) {
    cur().cases.push_back("no_string");
    end();
    return;
  }
  const WaveReport report = verify_wave(g_, core_, s_, phi_m_, *wave_);
  if (!report.ok()) cur().cases.push_back("wave_invariant_breach");
  for (int ci : wave_->circuits()) in_w_[ci] = 1;

  const std::vector<PathSeg> paths = wave_->all_paths();
  const Region joint = region_of(g_, std::span<const Circuit>{}, std::span<const PathSeg>(paths));
  ExtendOutcome ext = extend_123(psi_, joint);
  if (ext.ok()) {
    apply(psi_, ext);
  } else {
    cur().cases.push_back("joint_extension_failed");
  }

  for (std::size_t si = 0; si < wave_->strings.size(); ++si) {
    const WaveString& ws = wave_->strings[si];
    const std::string label = "W[" + std::to_string(si) + "]";
    EdgeList own(ws.connectors.begin(), ws.connectors.end());
    for (int ci : ws.circuits) own.insert(own.end(), s_.circuits[ci].edges.begin(), s_.circuits[ci].edges.end());
    own = sorted_unique(own);

    EdgeList path_edges;
    for (const PathSeg& p : ws.paths) path_edges.insert(path_edges.end(), p.edges.begin(), p.edges.end());
    const EdgeList rest = set_difference(own, sorted_unique(path_edges));

    PartialColoring before = psi_;
    color_remainder(rest);
    if (!charge_met(own)) {
      // Re-extend this string's paths, keeping the others fixed, and take the
      // first extension whose finished string meets its charge.
      psi_ = before;
      PartialColoring base = psi_;
      const Region mine = region_of(g_, std::span<const Circuit>{}, std::span<const PathSeg>(ws.paths));
      for (const auto& [e, c] : ext.assignment) {
        if (contains(sorted_unique(mine.body), e) || contains(sorted_unique(mine.rim), e)) {
          bool shared = false;
          for (std::size_t sj = 0; sj < wave_->strings.size() && !shared; ++sj) {
            if (sj == si) continue;
            for (const PathSeg& p : wave_->strings[sj].paths) {
              const EdgeList b = boundary(g_, p);
              shared = shared || contains(b, e) || std::find(p.edges.begin(), p.edges.end(), e) != p.edges.end();
            }
          }
          if (!shared) base.unset(e);
        }
      }
      Region free_part = mine;
      free_part.body.clear();
      for (EdgeId e : mine.body) {
        if (!base.colored(e)) free_part.body.push_back(e);
      }
      auto requirement = [&](const PartialColoring& w) {
        PartialColoring saved = psi_;
        psi_ = w;
        color_remainder(rest);
        const bool ok = charge_met(own);
        psi_ = saved;
        return ok;
      };
      ExtendOutcome again = extend_123(base, free_part, requirement, 20000);
      if (again.ok()) {
        psi_ = base;
        apply(psi_, again);
        cur().cases.push_back(label + ":required");
      } else {
        psi_ = before;
      }
      color_remainder(rest);
    }
    for (int ci : ws.circuits) done_[ci] = 1;
    add_component(label, own);
    record_charge(label, own);
  }
  end();
}

void Builder::stage_h3_prime() {
  std::vector<int> todo;
  for (std::size_t ci = 0; ci < s_.circuits.size(); ++ci) {
    const Circuit& c = s_.circuits[ci];
    if (!c.odd() || in_w_[ci]) continue;
    if (s_.sigma[ci] == 1 && c.length() <= 5) continue;
    todo.push_back(static_cast<int>(ci));
  }
  begin("h3_prime", static_cast<int>(todo.size()));
  for (int ci : todo) h3_prime_circuit(ci);
  end();
}

void Builder::h3_prime_circuit(int ci) {
  const Circuit& circ = s_.circuits[ci];
  const std::string label = "H3'[" + std::to_string(ci) + "]";
  const int len = circ.length();
  done_[ci] = 1;
  add_component(label, circ.edges);

  ExtendOutcome whole = extend_123(psi_, region_of(g_, circ));
  if (whole.ok()) {
    apply(psi_, whole);
    cur().cases.push_back(label + ":extendable");
    record_charge(label, circ.edges);
    return;
  }

  // Longest extendable path on C whose boundary meets E3.
  std::optional<PathSeg> q;
  std::optional<ExtendOutcome> q_ext;
  for (int length = len - 1; length >= 2 && !q; --length) {
    std::vector<PathSeg> cands;
    for (VertexId start : circ.vertices) {
      for (int dir : {1, -1}) {
        const CircuitWalk w = walk_circuit(circ, start, dir);
        PathSeg p;
        p.vertices.assign(w.u.begin(), w.u.begin() + length + 1);
        p.edges.assign(w.c.begin(), w.c.begin() + length);
        cands.push_back(std::move(p));
      }
    }
    std::sort(cands.begin(), cands.end(), [](const PathSeg& a, const PathSeg& b) { return a.vertices < b.vertices; });
    for (const PathSeg& p : cands) {
      bool meets_e3 = false;
      for (EdgeId f : boundary(g_, p)) meets_e3 = meets_e3 || core_.class_of[f] == 3;
      if (!meets_e3) continue;
      ExtendOutcome o = extend_123(psi_, region_of(g_, p));
      if (o.ok()) {
        q = p;
        q_ext = std::move(o);
        break;
      }
    }
  }

  const int e0_count = static_cast<int>(set_intersection(sorted_unique(circ.edges), core_.E(0)).size());
  if (q && len - q->length() > 1) {
    apply(psi_, *q_ext);
    color_remainder(circ.edges);
    cur().cases.push_back(label + ":case1");
  } else if (q && e0_count >= 5) {
    apply(psi_, *q_ext);
    const EdgeId gap = set_difference(sorted_unique(circ.edges), sorted_unique(q->edges)).front();
    if (!psi_.try_set(gap, 4) && !psi_.try_set(gap, 5)) greedy_fill(gap);
    cur().cases.push_back(label + ":case2");
  } else if (len == 7 && s_.sigma[ci] == 1) {
    EdgeId f = -1;
    for (VertexId v : circ.vertices) {
      if (s_.e3_at[v] >= 0) f = s_.e3_at[v];
    }
    if (!seven_circuit(ci, f)) {
      repair(label, "case3", circ.edges, set_union(sorted_unique(circ.edges), uncolored_rim(circ.edges)));
    }
  } else {
    std::ostringstream why;
    why << (q ? "case_mismatch" : "no_path") << " len=" << len << " sigma=" << s_.sigma[ci] << " e0=" << e0_count
        << " q=" << (q ? q->length() : -1);
    repair(label, why.str(), circ.edges,
           set_union(sorted_unique(circ.edges), uncolored_rim(circ.edges)));
  }
  record_charge(label, circ.edges);
}

// sigma = 1, |C| = 7, no extendable path with a long enough gap.
bool Builder::seven_circuit(int ci, EdgeId f) {
  const Circuit& circ = s_.circuits[ci];
  const std::string label = "H3'[" + std::to_string(ci) + "]";
  const VertexId u1 = s_.circuit_of_vertex[g_.edge(f).u] == ci ? g_.edge(f).u : g_.edge(f).v;
  if (psi_.colored(f)) return false;
  auto accept = [&](const PartialColoring& w) {
    PartialColoring saved = psi_;
    psi_ = w;
    const ChargeRecord r = charge("", circ.edges);
    psi_ = saved;
    return r.theta >= 2 && r.met();
  };

  ColorMask rim = 0;
  for (VertexId v : circ.vertices) {
    if (v != u1) rim |= color_bit(psi_.color(off_edge(g_, circ, v)));
  }
  if (popcount(rim & kLowColors) <= 2) {
    // Subcase 3.1: f takes a missing low color, its circuit edges take 4 and 5.
    const CircuitWalk w = walk_circuit(circ, u1, 1);
    for (Color gamma = 1; gamma <= 3; ++gamma) {
      if (rim & color_bit(gamma)) continue;
      for (Color hi : {4, 5}) {
        PartialColoring saved = psi_;
        Plan plan{{f, gamma}, {w.c[0], hi}, {w.c.back(), 9 - hi}};
        if (try_plan(psi_, plan)) {
          Region r;
          r.body.assign(w.c.begin() + 1, w.c.end() - 1);
          ExtendOutcome o = extend_123(psi_, r, [&](const PartialColoring& x) { return accept(x); }, 5000);
          if (o.ok()) {
            apply(psi_, o);
            cur().cases.push_back(label + ":subcase3.1");
            return true;
          }
        }
        psi_ = saved;
      }
    }
  } else {
    // Subcase 3.2: boundary colors pair up as (a,a,b,b,c,c) from u2; apply the
    // template under the matching color permutation, in either direction.
    const SevenCircuitTemplate& t = seven_circuit_template();
    for (int dir : {1, -1}) {
      const CircuitWalk w = walk_circuit(circ, u1, dir);
      std::array<Color, 4> perm{0, 0, 0, 0};
      bool shape = true;
      for (int i = 1; i < 7; i += 2) {
        const Color a = psi_.color(off_edge(g_, circ, w.u[i]));
        const Color b = psi_.color(off_edge(g_, circ, w.u[i + 1]));
        if (a != b || a < 1 || a > 3) shape = false;
        else perm[(i + 1) / 2] = a;
      }
      if (!shape) continue;
      auto map = [&](Color c) { return c <= 3 ? perm[c] : c; };
      for (bool swap45 : {false, true}) {
        auto hi = [&](Color c) { return swap45 && c >= 4 ? 9 - c : c; };
        Plan plan{{f, map(t.f)}};
        for (int i = 0; i < 7; ++i) plan.emplace_back(w.c[i], hi(map(t.circuit[i])));
        PartialColoring saved = psi_;
        if (try_plan(psi_, plan) && accept(psi_)) {
          cur().cases.push_back(label + ":subcase3.2");
          return true;
        }
        psi_ = saved;
      }
    }
  }

  std::vector<EdgeId> vars(circ.edges.begin(), circ.edges.end());
  vars.push_back(f);
  if (auto found = first_local_assignment(psi_, vars, kLowColors | kHighColors, accept)) {
    for (const auto& [e, c] : *found) psi_.set(e, c);
    cur().cases.push_back(label + ":case3_search");
    return true;
  }
  return false;
}

void Builder::stage_omega_pairs() {
  std::vector<int> todo;
  for (std::size_t ci = 0; ci < s_.circuits.size(); ++ci) {
    if (done_[ci] || in_w_[ci]) continue;
    if (s_.sigma[ci] == 1 && s_.circuits[ci].length() <= 5) todo.push_back(static_cast<int>(ci));
  }
  begin("omega_pairs", static_cast<int>(todo.size()));
  for (std::size_t a = 0; a < todo.size(); ++a) {
    for (std::size_t b = a + 1; b < todo.size(); ++b) {
      if (done_[todo[a]] || done_[todo[b]]) continue;
      if (psi_pair(todo[a], todo[b])) break;
    }
  }
  for (std::size_t a = 0; a < todo.size(); ++a) {
    for (std::size_t b = a + 1; b < todo.size(); ++b) {
      if (done_[todo[a]] || done_[todo[b]]) continue;
      if (gc_pair(todo[a], todo[b])) break;
    }
  }
  for (int ci : todo) {
    if (!done_[ci]) t_.push_back(ci);
  }
  end();
}

VertexId e3_vertex(const CoreStructure& s, const Circuit& c) {
  for (VertexId v : c.vertices) {
    if (s.e3_at[v] >= 0) return v;
  }
  throw GraphError("circuit has no E3 edge");
}

bool Builder::psi_pair(int i, int j) {
  const Circuit& c1 = s_.circuits[i];
  const Circuit& c2 = s_.circuits[j];
  const VertexId u1 = e3_vertex(s_, c1), w1 = e3_vertex(s_, c2);
  const EdgeId ea = s_.e3_at[u1], eb = s_.e3_at[w1];
  if (ea == eb || psi_.colored(ea) || psi_.colored(eb)) return false;
  const VertexId xa = g_.other_end(ea, u1), xb = g_.other_end(eb, w1);
  if (xa == xb) return false;
  EdgeId f = -1;
  for (EdgeId h : g_.incident(xa)) {
    if (g_.has_endpoint(h, xb) && psi_.colored(h) && (color_bit(psi_.color(h)) & kHighColors)) f = h;
  }
  if (f < 0) return false;

  const std::string label = "pair[" + std::to_string(i) + "," + std::to_string(j) + "]";
  const Color gamma = psi_.color(f);
  EdgeList pair_edges = set_union(sorted_unique(c1.edges), sorted_unique(c2.edges));
  pair_edges = set_union(pair_edges, sorted_unique({ea, eb}));

  // Colors the circuit from u2 on: longest extendable path, then 4/5.
  auto finish = [&](const CircuitWalk& w) {
    const int k = static_cast<int>(w.u.size());
    for (int t = k - 1; t >= 1; --t) {
      Region r;
      r.body.assign(w.c.begin() + 1, w.c.begin() + t);
      for (int x = 1; x <= t - 1; ++x) r.rim.push_back(off_edge(g_, s_.circuits[s_.circuit_of_vertex[w.u[0]]], w.u[x]));
      ExtendOutcome o = extend_123(psi_, r);
      if (o.ok()) {
        apply(psi_, o);
        break;
      }
    }
    std::vector<EdgeId> arc;
    for (int x = k - 1; x >= 1; --x) {
      if (!psi_.colored(w.c[x])) arc.push_back(w.c[x]);
    }
    if (!arc.empty() && !color_alternating(arc)) return false;
    return true;
  };

  std::optional<PartialColoring> fallback;
  bool accepted = false;
  for (int d1 : {1, -1}) {
    for (int d2 : {1, -1}) {
      const CircuitWalk w1w = walk_circuit(c1, u1, d1);
      const CircuitWalk w2w = walk_circuit(c2, w1, d2);
      const Color y1 = psi_.color(off_edge(g_, c1, w1w.u[1]));
      const Color y2 = psi_.color(off_edge(g_, c2, w2w.u[1]));
      for (Color alpha = 1; alpha <= 3 && !accepted; ++alpha) {
        if (alpha == y1 || alpha == y2) continue;
        PartialColoring saved = psi_;
        Plan plan{{ea, gamma}, {eb, gamma}, {f, alpha}, {w1w.c[0], alpha}, {w2w.c[0], alpha}};
        const bool ok = try_plan(psi_, plan) && finish(w1w) && finish(w2w);
        if (ok && psi_.is_proper()) {
          if (theta_of(c1.edges) >= 1 && theta_of(c2.edges) >= 1) {
            accepted = true;
            break;
          }
          if (!fallback) fallback = psi_;
        }
        psi_ = saved;
      }
      if (accepted) break;
    }
    if (accepted) break;
  }
  if (accepted) {
    cur().cases.push_back(label + ":psi_connected");
  } else if (fallback) {
    psi_ = *fallback;
    cur().cases.push_back(label + ":psi_connected_weak");
  } else {
    return false;
  }
  done_[i] = done_[j] = 1;
  {
    auto it = std::find_if(k_.begin(), k_.end(), [&](const KComponent& kc) { return contains(kc.edges, f); });
    if (it != k_.end()) {
      it->label += "+" + label;
      it->edges = set_union(it->edges, pair_edges);
      record_charge(it->label, it->edges);
    } else {
      add_component(label, set_union(pair_edges, EdgeList{f}));
      record_charge(label, k_.back().edges);
    }
  }
  return true;
}

bool Builder::gc_pair(int i, int j) {
  const Circuit* a = &s_.circuits[i];
  const Circuit* b = &s_.circuits[j];
  EdgeId link = -1;
  for (VertexId v : a->vertices) {
    const EdgeId h = off_edge(g_, *a, v);
    if (core_.class_of[h] == 1 && s_.circuit_of_vertex[g_.other_end(h, v)] == j && (link < 0 || h < link)) link = h;
  }
  if (link < 0) return false;
  const std::string label = "pair[" + std::to_string(i) + "," + std::to_string(j) + "]";
  EdgeList own = set_union(sorted_unique(a->edges), sorted_unique(b->edges));
  own = set_union(own, EdgeList{link});
  const PartialColoring saved = psi_;

  if (a->length() == 3 && b->length() == 3) {
    psi_.unset(link);
    ExtendOutcome o = extend_123(psi_, region_of_subgraph(g_, own));
    if (o.ok()) {
      apply(psi_, o);
      cur().cases.push_back(label + ":triangles");
    } else {
      psi_ = saved;
      repair(label, "triangles", own, set_union(own, uncolored_rim(own)));
    }
  } else {
    if (a->length() == 3) std::swap(a, b);
    psi_.unset(link);
    Color hi = 4;
    if (!psi_.try_set(link, 4)) {
      hi = 5;
      psi_.set(link, 5);
    }
    bool ok = true;
    for (const Circuit* c : {a, b}) {
      ExtendOutcome whole = extend_123(psi_, region_of(g_, *c));
      if (whole.ok()) {
        apply(psi_, whole);
        continue;
      }
      const VertexId w = g_.has_endpoint(link, c->vertices[0]) ? c->vertices[0]
                         : std::find_if(c->vertices.begin(), c->vertices.end(),
                                        [&](VertexId v) { return g_.has_endpoint(link, v); })[0];
      bool placed = false;
      std::optional<PartialColoring> weak;
      for (int dir : {1, -1}) {
        // The path C - e' runs from w away from e'.
        const CircuitWalk cw = walk_circuit(*c, w, dir);
        const EdgeId e_prime = cw.c.back();
        PathSeg p;
        p.vertices = cw.u;
        p.edges.assign(cw.c.begin(), cw.c.end() - 1);
        PartialColoring before = psi_;
        ExtendOutcome o = extend_123(psi_, region_of(g_, p));
        if (o.ok()) {
          apply(psi_, o);
          if (psi_.try_set(e_prime, 9 - hi) || psi_.try_set(e_prime, hi)) {
            if (charge_met(c->edges)) {
              placed = true;
              break;
            }
            if (!weak) weak = psi_;
          }
        }
        psi_ = before;
      }
      if (!placed && weak) {
        psi_ = *weak;
        placed = true;
      }
      ok = ok && placed;
    }
    if (ok) {
      cur().cases.push_back(label + ":gc_connected");
    } else {
      psi_ = saved;
      repair(label, "gc_connected", own, set_union(own, uncolored_rim(own)));
    }
  }
  done_[i] = done_[j] = 1;
  add_component(label, own);
  record_charge(label, own);
  return true;
}

EdgeList Builder::outside_t() const {
  EdgeList blocked;
  for (int ci : t_) {
    if (done_[ci]) continue;
    const Circuit& c = s_.circuits[ci];
    blocked.insert(blocked.end(), c.edges.begin(), c.edges.end());
    const EdgeList b = boundary(g_, c);
    blocked.insert(blocked.end(), b.begin(), b.end());
  }
  blocked = sorted_unique(std::move(blocked));
  EdgeList out;
  for (EdgeId e = 0; e < g_.num_edges(); ++e) {
    if (!contains(blocked, e)) out.push_back(e);
  }
  return out;
}

void Builder::stage_e3_fill() {
  EdgeList near_t;
  for (int ci : t_) {
    const EdgeList b = boundary(g_, s_.circuits[ci]);
    near_t.insert(near_t.end(), b.begin(), b.end());
  }
  near_t = sorted_unique(std::move(near_t));
  int targets = 0;
  for (EdgeId e : core_.E(3)) targets += !psi_.colored(e) && !contains(near_t, e);
  begin("e3_fill", targets);
  for (EdgeId e : core_.E(3)) {
    if (!psi_.colored(e) && !contains(near_t, e)) greedy_fill(e);
  }
  // Anything an earlier stage left open outside the T circuits.
  for (EdgeId e : outside_t()) {
    if (!psi_.colored(e)) {
      cur().cases.push_back("late_fill:" + std::to_string(e));
      greedy_fill(e);
    }
  }
  enforce_charges();
  record_charge("outside_T", outside_t());
  end();
}

void Builder::stage_t() {
  begin("t_circuits", static_cast<int>(t_.size()));
  for (int ci : t_) t_circuit(ci);
  record_charge("all", [&] {
    EdgeList all(g_.num_edges());
    std::iota(all.begin(), all.end(), 0);
    return all;
  }());
  end();
}

void Builder::t_circuit(int ci) {
  const Circuit& circ = s_.circuits[ci];
  const std::string label = "T[" + std::to_string(ci) + "]";
  const int k = circ.length();
  const VertexId u1 = e3_vertex(s_, circ);
  const EdgeId e = s_.e3_at[u1];
  const VertexId v1 = g_.other_end(e, u1);
  EdgeList at_v1;
  for (EdgeId h : g_.incident(v1)) {
    if (h != e) at_v1.push_back(h);
  }
  const EdgeList own = set_union(sorted_unique(circ.edges), boundary(g_, circ));
  done_[ci] = 1;
  auto good_enough = [&] {
    EdgeList region = set_union(outside_t(), own);
    return theta_of(region) >= 0 || charge_met(circ.edges);
  };

  bool shape = !psi_.colored(e) && at_v1.size() == 2 && psi_.colored(at_v1[0]) && psi_.colored(at_v1[1]) &&
               (color_bit(psi_.color(at_v1[0])) | color_bit(psi_.color(at_v1[1]))) == kHighColors;
  for (EdgeId c : circ.edges) shape = shape && !psi_.colored(c);
  ColorMask rim = 0;
  for (VertexId v : circ.vertices) {
    if (v == u1) continue;
    const Color c = psi_.color(off_edge(g_, circ, v));
    shape = shape && c >= 1 && c <= 3;
    rim |= color_bit(c);
  }

  std::vector<std::pair<std::string, Plan>> plans;
  std::vector<std::pair<std::string, Color>> relabel_then_extend;  // recolor u2v2, extend C
  if (shape) {
    auto gamma_for = [&](EdgeId ei) -> Color {
      const EdgeId ej = ei == at_v1[0] ? at_v1[1] : at_v1[0];
      const VertexId w = g_.other_end(ei, v1);
      for (Color gm = 1; gm <= 3; ++gm) {
        const ColorMask m = color_bit(psi_.color(ei)) | color_bit(psi_.color(ej)) | color_bit(gm) | psi_.palette(w, ei);
        if (popcount(m) == 3 || popcount(m) == 5) return gm;
      }
      return kUncolored;
    };
    const Color g1 = gamma_for(at_v1[0]), g2 = gamma_for(at_v1[1]);
    const int distinct = popcount(rim);
    for (int dir : {1, -1}) {
      const CircuitWalk w = walk_circuit(circ, u1, dir);
      std::vector<EdgeId> third(k, -1);
      for (int x = 1; x < k; ++x) third[x] = off_edge(g_, circ, w.u[x]);
      for (Color h4 : {4, 5}) {
        const Color h5 = 9 - h4;
        if (distinct == 1) {
          const Color one = psi_.color(third[1]);
          std::vector<Color> others;
          for (Color c = 1; c <= 3; ++c) {
            if (c != one) others.push_back(c);
          }
          for (Color gm : {g1, g2}) {
            if (gm == kUncolored || gm == one) continue;
            const Color two = gm, three = others[0] == gm ? others[1] : others[0];
            if (k == 3) {
              plans.push_back({"case1.1", {{e, two}, {w.c[0], h4}, {w.c[1], three}, {w.c[2], h5}}});
            } else {
              plans.push_back({"case1.1", {{e, two}, {w.c[0], h4}, {w.c[1], three}, {w.c[2], two}, {w.c[3], three}, {w.c[4], h5}}});
            }
          }
          if (h4 == 4) {
            for (Color x : others) {
              if (!(psi_.palette(g_.other_end(third[1], w.u[1]), third[1]) & color_bit(x))) {
                relabel_then_extend.push_back({"case1.2", static_cast<Color>(third[1] * 8 + x)});
              }
            }
          }
          for (std::size_t o = 0; o < 2; ++o) {
            const Color two = others[o], three = others[1 - o];
            if (k == 3) {
              plans.push_back({"case1.3", {{third[1], h4}, {third[2], h5}, {e, one}, {w.c[0], h5}, {w.c[1], one}, {w.c[2], h4}}});
            } else {
              plans.push_back({"case1.3", {{third[1], h4}, {e, one}, {w.c[0], h5}, {w.c[1], three}, {w.c[2], two}, {w.c[3], three}, {w.c[4], two}}});
            }
          }
        } else if (distinct == 2 && k == 5) {
          Color x = 1;
          while (rim & color_bit(x)) ++x;
          plans.push_back({"case2", {{e, psi_.color(third[1])}, {w.c[0], h4}, {w.c[1], h5}, {w.c[2], h4}, {w.c[3], x}, {w.c[4], h5}}});
        }
      }
    }
  }

  std::optional<std::pair<std::string, PartialColoring>> weak;
  auto consider = [&](const std::string& name) {
    if (good_enough()) return true;
    if (!weak) weak = {{name, psi_}};
    return false;
  };
  // Recipe order: 1.1 plans come first, then 1.2, then 1.3 / case 2.
  std::stable_sort(plans.begin(), plans.end(), [](const auto& x, const auto& y) {
    auto rank = [](const std::string& s) { return s == "case1.1" ? 0 : s == "case1.3" ? 2 : 3; };
    return rank(x.first) < rank(y.first);
  });
  auto run_plans = [&](int lo, int hi) {
    for (const auto& [name, plan] : plans) {
      const std::string& nm = name;
      const int r = nm == "case1.1" ? 0 : nm == "case1.3" ? 2 : 3;
      if (r < lo || r > hi) continue;
      PartialColoring saved = psi_;
      if (try_plan(psi_, plan) && consider(nm)) {
        cur().cases.push_back(label + ":" + nm);
        return true;
      }
      psi_ = saved;
    }
    return false;
  };
  if (run_plans(0, 0)) return;
  for (const auto& [name, code] : relabel_then_extend) {
    const EdgeId third = code / 8;
    const Color x = code % 8;
    PartialColoring saved = psi_;
    if (try_plan(psi_, {{third, x}})) {
      ExtendOutcome o = extend_123(psi_, region_of(g_, circ));
      if (o.ok()) {
        apply(psi_, o);
        if (consider(name)) {
          cur().cases.push_back(label + ":" + name);
          return;
        }
      }
    }
    psi_ = saved;
  }
  if (run_plans(1, 3)) return;

  // Outside the recipe's shape: plain extension, then local search.
  {
    PartialColoring saved = psi_;
    ExtendOutcome o = extend_123(psi_, region_of(g_, circ));
    if (o.ok()) {
      apply(psi_, o);
      if (consider("extendable")) {
        cur().cases.push_back(label + ":extendable");
        return;
      }
    }
    psi_ = saved;
  }
  if (weak) {
    psi_ = weak->second;
    cur().cases.push_back(label + ":" + weak->first + "_weak");
    if (!opt_.repair) return;
  }
  EdgeList free_edges(circ.edges.begin(), circ.edges.end());
  free_edges.push_back(e);
  for (EdgeId f : own) {
    if (!psi_.colored(f)) free_edges.push_back(f);
  }
  repair(label, shape ? "charge" : "shape", circ.edges, free_edges);
}

void Builder::stage_final() {
  begin("final", 1);
  for (EdgeId e = 0; e < g_.num_edges(); ++e) {
    if (!psi_.colored(e)) {
      cur().cases.push_back("late_fill:" + std::to_string(e));
      greedy_fill(e);
    }
  }
  int total = theta_total(core_, psi_);
  if (total < 0) {
    if (!opt_.repair) throw PncError("final: theta(G) = " + std::to_string(total) + " < 0", stages_);
    // Local searches around components with a deficit, then around abnormal
    // edges, until theta(G) >= 0 or nothing improves. The charge of the whole
    // graph is theta(G) >= 0.
    EdgeList everything(g_.num_edges());
    std::iota(everything.begin(), everything.end(), 0);
    for (int pass = 0; pass < 6 && total < 0; ++pass) {
      const int before_pass = total;
      std::vector<std::pair<std::string, EdgeList>> groups;
      for (const KComponent& kc : k_) groups.push_back({kc.label, kc.edges});
      for (std::size_t ci = 0; ci < s_.circuits.size(); ++ci) {
        groups.push_back({"C[" + std::to_string(ci) + "]", sorted_unique(s_.circuits[ci].edges)});
      }
      for (EdgeId a : abnormal_edges_of(psi_)) {
        EdgeList ball;
        for (EdgeId b : g_.closed_neighborhood(a)) {
          const EdgeList nb = g_.closed_neighborhood(b);
          ball.insert(ball.end(), nb.begin(), nb.end());
        }
        groups.push_back({"ball[" + std::to_string(a) + "]", sorted_unique(ball)});
      }
      for (const auto& [label, edges] : groups) {
        if (total >= 0) break;
        if (pass < 2 && charge_met(edges)) continue;
        EdgeList free_edges = edges;
        for (EdgeId f : region_of_subgraph(g_, edges).rim) {
          if (free_edges.size() >= 16) break;
          if (core_.class_of[f] != 1) free_edges.push_back(f);
        }
        if (free_edges.size() > 18) free_edges.resize(18);
        RepairRecord r;
        r.component = label;
        r.reason = "theta(G) < 0";
        r.theta_before = theta_of(edges);
        RepairOutcome o = repair_fallback(core_, psi_, everything, free_edges, opt_.repair_node_budget);
        if (!o.changed || o.value_after <= o.value_before) continue;
        r.theta_after = theta_of(edges);
        r.charge_met = charge_met(edges);
        cur().repairs.push_back(std::move(r));
        total = theta_total(core_, psi_);
      }
      if (total == before_pass) break;
    }
  }
  for (const KComponent& kc : k_) record_charge(kc.label, kc.edges);
  end();
}

PncResult Builder::run() {
  const ValidationReport v = validate(g_);
  if (!v.is_connected) throw GraphError("graph is not connected");
  if (!v.is_bridgeless) throw GraphError("graph has a bridge: edge " + std::to_string(v.bridges.front()));

  bool three = false;
  if (!opt_.core && !opt_.skip_three_coloring) three = stage_three_coloring();
  if (!three) {
    stage_core();
    stage_even();
    stage_wave();
    stage_h3_prime();
    stage_omega_pairs();
    stage_e3_fill();
    stage_t();
    stage_final();
  }

  PncResult r;
  r.coloring = psi_;
  r.core = core_;
  r.mu3 = mu3_;
  r.mu3_exact = mu3_exact_;
  r.abnormal_edges = abnormal_edges_of(psi_);
  r.theta_total = theta_total(core_, psi_);
  r.stages = stages_;
  r.k_components = k_;
  r.wave = wave_;
  if (r.mu3_exact && 5 * core_.k > g_.num_edges()) {
    throw std::logic_error("mu3 exceeds |E|/5");
  }
  return r;
}

}  // namespace

PncResult color_partially_normal(const CubicGraph& g, const PncOptions& options) {
  Builder b(g, options);
  return b.run();
}

VerifyReport verify_pnc(const CubicGraph& g, const PncResult& result) {
  VerifyReport v;
  const PartialColoring& psi = result.coloring;
  v.k = result.core.k;
  v.normal_target = g.num_edges() - v.k;
  if (psi.colors().size() != static_cast<std::size_t>(g.num_edges())) {
    v.failures.push_back("coloring has the wrong number of edges");
    return v;
  }
  v.total = psi.is_total();
  if (!v.total) v.failures.push_back("coloring is not total");
  for (Color c : psi.colors()) {
    if (c < 0 || c > kNumColors) {
      v.failures.push_back("color out of range");
      return v;
    }
  }
  v.proper = psi.is_proper();
  if (!v.proper) {
    const auto clash = psi.find_clash();
    v.failures.push_back("clash at vertex " + std::to_string(clash->first));
  }
  // The core must be a genuine triple of perfect matchings.
  Core c;
  try {
    c = core_from_triple(g, result.core.matchings[0], result.core.matchings[1], result.core.matchings[2]);
    if (c.k != result.core.k) v.failures.push_back("core size mismatch");
  } catch (const std::exception& ex) {
    v.failures.push_back(std::string("core: ") + ex.what());
    return v;
  }
  const EdgeList abnormal = abnormal_edges_of(psi);
  v.abnormal = static_cast<int>(abnormal.size());
  v.normal_count = g.num_edges() - v.abnormal;
  v.abnormal_list_matches = abnormal == sorted_unique(result.abnormal_edges);
  if (!v.abnormal_list_matches) v.failures.push_back("reported abnormal edges differ");
  v.k = c.k;
  v.normal_target = g.num_edges() - v.k;
  v.theta = theta_total(c, psi);
  v.census_identity = v.total && v.abnormal == v.k - v.theta;
  if (v.total && !v.census_identity) v.failures.push_back("abnormal count differs from k - theta");
  v.within_k = v.abnormal <= v.k;
  if (!v.within_k) {
    v.failures.push_back(std::to_string(v.abnormal) + " abnormal edges exceed k = " + std::to_string(v.k));
  }
  if (result.mu3_exact) {
    v.within_fifth = 5 * v.abnormal <= g.num_edges();
    if (!v.within_fifth) v.failures.push_back("abnormal edges exceed |E|/5");
  }
  return v;
}

}  // namespace pnc
