// Acceptance run: one PASS/FAIL line per criterion. All checks are exact
// integer comparisons; the only tolerances are the runtime limits below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "pnc/oracles.hpp"
#include "pnc/pipeline.hpp"
#include "pnc/wave.hpp"
#include "support.hpp"

using namespace pnc;

namespace {

constexpr double kCorpusSeconds = 600.0;
constexpr double kPetersenSeconds = 1.0;
constexpr int kIdentityTrials = 1000;
constexpr int kIdentityGraphs = 50;
constexpr int kMaxCorpusN = 14;
constexpr int kOracleEquivalenceN = 12;
constexpr int kDominanceN = 10;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

int failed = 0;

void report(int id, bool pass, const std::string& detail) {
  std::printf("%s %d: %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failed;
}

std::vector<int> corpus_sizes() {
  std::vector<int> out;
  for (int n = 4; n <= kMaxCorpusN; n += 2) out.push_back(n);
  return out;
}

// Colorings point at their graph, so the graph lives on the heap.
struct CorpusRun {
  std::unique_ptr<CubicGraph> graph;
  PncResult r;
  VerifyReport v;
  const CubicGraph& g;
  CorpusRun(std::unique_ptr<CubicGraph> graph_in)
      : graph(std::move(graph_in)), r(color_partially_normal(*graph)), v(verify_pnc(*graph, r)), g(*graph) {}
};

}  // namespace

int main() {
  // Criteria 1, 2, 5 and 9 share one pass over the bridgeless corpus.
  std::vector<std::unique_ptr<CorpusRun>> owned;
  int bridged = 0;
  const auto t0 = Clock::now();
  for (int n : corpus_sizes()) {
    for (CubicGraph& g : support::corpus(n)) {
      const ValidationReport val = validate(g);
      if (!val.is_bridgeless) {
        ++bridged;
        continue;
      }
      owned.push_back(std::make_unique<CorpusRun>(std::make_unique<CubicGraph>(std::move(g))));
    }
  }
  std::vector<const CorpusRun*> runs;
  for (const auto& c : owned) runs.push_back(c.get());
  const double corpus_time = seconds_since(t0);

  {
    int bad = 0, inexact = 0;
    for (const CorpusRun* cp : runs) {
      const CorpusRun& c = *cp;
      inexact += c.r.mu3_exact ? 0 : 1;
      const bool ok = c.v.proper && c.v.total && c.r.mu3_exact &&
                      static_cast<int>(c.r.abnormal_edges.size()) <= c.r.mu3 &&
                      support::naive_abnormal_count(c.r.coloring) == static_cast<int>(c.r.abnormal_edges.size());
      bad += ok ? 0 : 1;
    }
    report(1, bad == 0 && inexact == 0 && corpus_time < kCorpusSeconds,
           std::to_string(runs.size()) + " bridgeless graphs n<=" + std::to_string(kMaxCorpusN) + " (" +
               std::to_string(bridged) + " bridged skipped), " + std::to_string(bad) + " violations of abnormal<=mu3, " +
               std::to_string(inexact) + " inexact mu3, " + std::to_string(corpus_time) + " s");
  }

  {
    int bad = 0;
    for (const CorpusRun* cp : runs) {
      const CorpusRun& c = *cp;
      const int m = c.g.num_edges();
      const int need = (4 * m + 4) / 5;  // ceil(4m/5)
      if (c.r.mu3_exact && c.r.normal_count() < need) ++bad;
    }
    report(2, bad == 0, std::to_string(bad) + " graphs with fewer than ceil(4|E|/5) normal edges");
  }

  {
    const auto t = Clock::now();
    const CubicGraph p = generate_graph(Family::Petersen);
    const std::size_t matchings = enumerate_perfect_matchings(p).size();
    const Mu3Result mu = compute_mu3(p);
    const PncResult r = color_partially_normal(p);
    const bool verified = verify_pnc(p, r).ok();
    const NormalSearch o = brute_force_normal(p);
    const double dt = seconds_since(t);
    const int oracle_normal = o.coloring ? p.num_edges() - support::naive_abnormal_count(*o.coloring) : 0;
    const bool pass = matchings == 6 && mu.exact && mu.mu3 == 3 && support::naive_mu3(p) == 3 &&
                      r.abnormal_edges.size() <= 3 && r.normal_count() >= 12 && verified &&
                      o.status == OracleStatus::Found && oracle_normal == 15 && dt < kPetersenSeconds;
    report(3, pass,
           "matchings=" + std::to_string(matchings) + " mu3=" + std::to_string(mu.mu3) +
               (mu.exact ? " exact" : " inexact") + " abnormal=" + std::to_string(r.abnormal_edges.size()) +
               " normal=" + std::to_string(r.normal_count()) + " oracle_normal=" + std::to_string(oracle_normal) +
               " " + std::to_string(dt) + " s");
  }

  {
    std::mt19937 rng(1);
    int trials = 0, graphs = 0, mismatches = 0;
    while (graphs < kIdentityGraphs || trials < kIdentityTrials) {
      const int n = 8 + 2 * static_cast<int>(rng() % 7);
      const auto g = support::random_cubic(n, rng, graphs % 5 != 0);
      if (!g) continue;
      ++graphs;
      const auto ms = enumerate_perfect_matchings(*g, 5000);
      for (int i = 0; i < 25; ++i) {
        const Core core = support::random_core(*g, ms, rng);
        const PartialColoring psi = support::random_total_coloring(*g, rng);
        if (support::naive_abnormal_count(psi) != core.k - theta_total(core, psi)) ++mismatches;
        ++trials;
      }
    }
    report(4, mismatches == 0 && trials >= kIdentityTrials && graphs >= kIdentityGraphs,
           std::to_string(trials) + " trials on " + std::to_string(graphs) + " graphs, " +
               std::to_string(mismatches) + " mismatches of abnormal = k - theta");
  }

  {
    int bad = 0, exact = 0;
    for (const CorpusRun* cp : runs) {
      const CorpusRun& c = *cp;
      if (!c.r.mu3_exact) continue;
      ++exact;
      if (5 * c.r.mu3 > c.g.num_edges()) ++bad;
    }
    report(5, bad == 0 && exact == static_cast<int>(runs.size()),
           std::to_string(exact) + " exact mu3 values, " + std::to_string(bad) + " above |E|/5");
  }

  {
    int compared = 0, skipped = 0, discrepancies = 0, normal_found = 0;
    for (int n = 4; n <= kOracleEquivalenceN; n += 2) {
      for (const CubicGraph& g : support::corpus(n)) {
        const NormalSearch a = brute_force_normal(g);
        const PetersenSearch b = petersen_coloring(g);
        if (a.status == OracleStatus::BudgetExceeded || b.status == OracleStatus::BudgetExceeded) {
          ++skipped;
          continue;
        }
        ++compared;
        normal_found += a.status == OracleStatus::Found;
        bool agree = a.status == b.status;
        if (a.coloring && support::naive_abnormal_count(*a.coloring) != 0) agree = false;
        if (b.mapping && (!is_petersen_coloring(g, *b.mapping) ||
                          support::naive_abnormal_count(normal_coloring_from(g, *b.mapping)) != 0)) {
          agree = false;
        }
        discrepancies += agree ? 0 : 1;
      }
    }
    report(6, discrepancies == 0 && compared > 0,
           std::to_string(compared) + " graphs n<=" + std::to_string(kOracleEquivalenceN) + " compared (" +
               std::to_string(normal_found) + " with a normal coloring, " + std::to_string(skipped) +
               " over budget), " + std::to_string(discrepancies) + " discrepancies");
  }

  {
    int compared = 0, bad = 0;
    for (const CorpusRun* cp : runs) {
      const CorpusRun& c = *cp;
      if (c.g.num_vertices() > kDominanceN) continue;
      const MaxNormalResult best = max_normal_brute(c.g);
      if (best.status != OracleStatus::Found) {
        ++bad;
        continue;
      }
      ++compared;
      if (best.count < c.g.num_edges() - c.r.mu3 || c.r.normal_count() > best.count) ++bad;
    }
    // Bridged graphs have no pipeline run; only the oracle side applies, and
    // only when a perfect matching exists.
    int bridged_compared = 0;
    for (int n = 4; n <= kDominanceN; n += 2) {
      for (const CubicGraph& g : support::corpus(n)) {
        if (validate(g).is_bridgeless || enumerate_perfect_matchings(g, 1).empty()) continue;
        const MaxNormalResult best = max_normal_brute(g);
        ++bridged_compared;
        if (best.status != OracleStatus::Found || best.count < g.num_edges() - compute_mu3(g).mu3) ++bad;
      }
    }
    report(7, bad == 0 && compared > 0,
           std::to_string(compared) + " bridgeless graphs n<=" + std::to_string(kDominanceN) + " and " +
               std::to_string(bridged_compared) + " bridged, " + std::to_string(bad) +
               " violations of |E|-mu3 <= pipeline normal <= max normal");
  }

  {
    // mu3-witness cores of the corpus plus random cores of the same graphs.
    std::mt19937 rng(8);
    int with_string = 0, bad = 0, mutations = 0, unflagged = 0;
    for (const CorpusRun* cp : runs) {
      const CorpusRun& c = *cp;
      std::vector<Core> cores{c.r.core};
      if (c.g.num_vertices() <= 12) {
        const auto ms = enumerate_perfect_matchings(c.g);
        for (int i = 0; i < 4; ++i) cores.push_back(support::random_core(c.g, ms, rng));
      }
      for (const Core& core : cores) {
        const CoreStructure s = analyze_core(c.g, core);
        const PartialColoring phi = major_coloring(c.g, core);
        const auto wave = build_wave(c.g, core, s, phi);
        if (!wave) continue;
        ++with_string;
        if (!verify_wave(c.g, core, s, phi, *wave).ok()) ++bad;

        // Shortened end path: drop the edge away from the anchor.
        const WaveString& ws = wave->strings.front();
        if (ws.paths.front().length() > 0) {
          Wave w = *wave;
          PathSeg& p = w.strings.front().paths.front();
          if (p.front() == ws.u[0]) {
            p.vertices.pop_back();
            p.edges.pop_back();
          } else {
            p.vertices.erase(p.vertices.begin());
            p.edges.erase(p.edges.begin());
          }
          ++mutations;
          if (verify_wave(c.g, core, s, phi, w).item2) ++unflagged;
        }
        // Q circuits sharing an E3 edge: dissolve a string into Q.
        {
          Wave w = *wave;
          w.q.insert(w.q.end(), ws.circuits.begin(), ws.circuits.end());
          w.strings.erase(w.strings.begin());
          ++mutations;
          if (verify_wave(c.g, core, s, phi, w).item3) ++unflagged;
        }
      }
    }
    report(8, bad == 0 && unflagged == 0 && with_string > 0,
           std::to_string(with_string) + " cores with a string, " + std::to_string(bad) + " failing items (1)-(3), " +
               std::to_string(mutations) + " mutations, " + std::to_string(unflagged) + " unflagged");
  }

  {
    int repairs = 0, repaired_graphs = 0, bad = 0;
    for (const CorpusRun* cp : runs) {
      const CorpusRun& c = *cp;
      const int k = c.r.repairs();
      if (k == 0) continue;
      repairs += k;
      ++repaired_graphs;
      const int need = (4 * c.g.num_edges() + 4) / 5;
      if (!c.v.ok() || static_cast<int>(c.r.abnormal_edges.size()) > c.r.mu3 || c.r.normal_count() < need) ++bad;
    }
    int failed_verify = 0;
    for (const CorpusRun* cp : runs) failed_verify += cp->v.ok() ? 0 : 1;
    report(9, bad == 0 && failed_verify == 0,
           std::to_string(repairs) + " repair_fallback invocations on " + std::to_string(repaired_graphs) + " of " +
               std::to_string(runs.size()) + " graphs, " + std::to_string(bad) + " repaired graphs out of bound, " +
               std::to_string(failed_verify) + " failed verification");
  }

  return failed == 0 ? 0 : 1;
}
