#include <string>

#include "pnc/graph.hpp"

namespace pnc {

Family family_from_name(std::string_view name) {
  if (name == "petersen") return Family::Petersen;
  if (name == "k4") return Family::K4;
  if (name == "k33") return Family::K33;
  if (name == "prism") return Family::Prism;
  if (name == "flower") return Family::Flower;
  if (name == "moebius_kantor") return Family::MoebiusKantor;
  throw GraphError("unknown family '" + std::string(name) + "'");
}

namespace {

// Generalized Petersen graph GP(n, k): outer cycle, spokes, inner star polygon.
CubicGraph generalized_petersen(int n, int k) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  for (int i = 0; i < n; ++i) edges.push_back({i, n + i});
  for (int i = 0; i < n; ++i) edges.push_back({n + i, n + (i + k) % n});
  return CubicGraph(2 * n, std::move(edges));
}

}  // namespace

CubicGraph generate_graph(Family family, int param) {
  switch (family) {
    case Family::Petersen:
      return generalized_petersen(5, 2);
    case Family::K4:
      return CubicGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    case Family::K33: {
      std::vector<Edge> edges;
      for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) edges.push_back({a, b});
      return CubicGraph(6, std::move(edges));
    }
    case Family::Prism: {
      if (param < 3) throw GraphError("prism needs n >= 3");
      return generalized_petersen(param, 1);
    }
    case Family::Flower: {
      if (param < 3 || param % 2 == 0) throw GraphError("flower snark needs odd k >= 3");
      // Vertex blocks: a (centres), b (k-cycle), c and d (joint 2k-cycle).
      const int k = param;
      auto a = [](int i) { return i; };
      auto b = [k](int i) { return k + i; };
      auto c = [k](int i) { return 2 * k + i; };
      auto d = [k](int i) { return 3 * k + i; };
      std::vector<Edge> edges;
      for (int i = 0; i < k; ++i) {
        edges.push_back({a(i), b(i)});
        edges.push_back({a(i), c(i)});
        edges.push_back({a(i), d(i)});
      }
      for (int i = 0; i < k; ++i) edges.push_back({b(i), b((i + 1) % k)});
      for (int i = 0; i + 1 < k; ++i) edges.push_back({c(i), c(i + 1)});
      edges.push_back({c(k - 1), d(0)});
      for (int i = 0; i + 1 < k; ++i) edges.push_back({d(i), d(i + 1)});
      edges.push_back({d(k - 1), c(0)});
      return CubicGraph(4 * k, std::move(edges));
    }
    case Family::MoebiusKantor:
      return generalized_petersen(8, 3);
  }
  throw GraphError("unknown family");
}

}  // namespace pnc
