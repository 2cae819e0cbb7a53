#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pnc {

using VertexId = int;
using EdgeId = int;
using EdgeList = std::vector<EdgeId>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  VertexId u;
  VertexId v;
};

// Immutable cubic multigraph. Loops are rejected; parallel edges are allowed.
// Edge ids are dense 0..m-1 and follow construction order.
class CubicGraph {
 public:
  CubicGraph() = default;
  // Throws GraphError naming the offending vertex or edge.
  CubicGraph(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  const std::array<EdgeId, 3>& incident(VertexId v) const { return incidence_[v]; }

  VertexId other_end(EdgeId e, VertexId v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }
  bool has_endpoint(EdgeId e, VertexId v) const {
    return edges_[e].u == v || edges_[e].v == v;
  }
  // Distinct edges sharing an endpoint with e, e itself excluded; ascending.
  EdgeList adjacent_edges(EdgeId e) const;
  // e together with adjacent_edges(e); ascending.
  EdgeList closed_neighborhood(EdgeId e) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::array<EdgeId, 3>> incidence_;
};

// ---------------------------------------------------------------------------
// Parsing and serialization

enum class GraphFormat { Graph6, EdgeList };

CubicGraph parse_graph(std::string_view text, GraphFormat format);
CubicGraph parse_graph6(std::string_view line);
CubicGraph parse_edgelist(std::string_view text);

// Simple graphs only; throws GraphError on parallel edges.
std::string to_graph6(const CubicGraph& g);
std::string to_edgelist(const CubicGraph& g);

// Reads every non-empty line of a graph6 stream (">>graph6<<" headers skipped).
std::vector<CubicGraph> parse_graph6_lines(std::string_view text);

// ---------------------------------------------------------------------------
// Standard families

enum class Family { Petersen, K4, K33, Prism, Flower, MoebiusKantor };

Family family_from_name(std::string_view name);
CubicGraph generate_graph(Family family, int param = 0);

// ---------------------------------------------------------------------------
// Structure

struct ValidationReport {
  bool is_cubic = true;
  bool is_connected = true;
  bool is_bridgeless = true;
  EdgeList bridges;
};

ValidationReport validate(const CubicGraph& g);

// Cyclic sequence: edges[i] joins vertices[i] and vertices[(i + 1) % size].
// A circuit of length 2 is a pair of parallel edges.
struct Circuit {
  std::vector<VertexId> vertices;
  EdgeList edges;

  int length() const { return static_cast<int>(edges.size()); }
  bool odd() const { return length() % 2 == 1; }
  bool operator==(const Circuit&) const = default;
};

// Open simple path; edges[i] joins vertices[i] and vertices[i + 1]. A path
// with no edges is a single vertex.
struct PathSeg {
  std::vector<VertexId> vertices;
  EdgeList edges;

  int length() const { return static_cast<int>(edges.size()); }
  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }
  bool operator==(const PathSeg&) const = default;
};

// Decomposes a subgraph whose degrees are all 0 or 2 into circuits. Each
// circuit starts at its lowest vertex and continues along the lower-id
// neighbour (lower edge id among parallel edges). Circuits are ordered by
// their first vertex. Throws GraphError if some vertex has degree 1 or 3.
std::vector<Circuit> circuits_of(const CubicGraph& g, const EdgeList& edge_set);

// Edges not on the circuit with at least one end on it.
EdgeList boundary(const CubicGraph& g, const Circuit& c);
// Edges not on the path with at least one end on an interior vertex.
EdgeList boundary(const CubicGraph& g, const PathSeg& p);
EdgeList boundary(const CubicGraph& g, std::span<const Circuit> cs);
EdgeList boundary(const CubicGraph& g, std::span<const PathSeg> ps);

// Small set helpers on sorted edge lists.
EdgeList sorted_unique(EdgeList list);
EdgeList set_union(const EdgeList& a, const EdgeList& b);
EdgeList set_intersection(const EdgeList& a, const EdgeList& b);
EdgeList set_difference(const EdgeList& a, const EdgeList& b);
bool contains(const EdgeList& sorted, EdgeId e);

}  // namespace pnc
