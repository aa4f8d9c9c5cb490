#pragma once

#include <algorithm>
#include <cstddef>
#include <compare>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace flatwall {

using Vertex = int;
using VertexSet = std::set<Vertex>;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  auto operator<=>(const Edge&) const = default;

  bool contains(Vertex x) const { return x == u || x == v; }
  Vertex other(Vertex x) const { return x == u ? v : u; }
};

/// Raised when an operation's precondition does not hold (unknown ids,
/// loops, wrong degree, ...).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exact search is asked to run beyond its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph over opaque integer vertex ids.
///
/// Immutable after construction. Vertices are kept sorted by id and each
/// adjacency list is sorted, so every iteration order in the library is
/// ascending by id.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on loops, repeated edges, duplicate vertices or an
  /// endpoint outside `vertices`.
  Graph(std::vector<Vertex> vertices, const std::vector<Edge>& edges);

  /// Graph on ids 0..n-1.
  static Graph on_range(int n, const std::vector<Edge>& edges);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  bool empty() const { return vertices_.empty(); }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  VertexSet vertex_set() const { return {vertices_.begin(), vertices_.end()}; }
  std::vector<Edge> edges() const;

  bool has_vertex(Vertex v) const;
  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  /// Position of `v` in vertices(); throws GraphError for unknown ids.
  std::size_t index_of(Vertex v) const;

  /// Smallest id strictly larger than every vertex id (0 for the empty graph).
  Vertex fresh_vertex() const { return vertices_.empty() ? 0 : vertices_.back() + 1; }

  bool operator==(const Graph&) const = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t num_edges_ = 0;
};

/// Hypergraph with hyperedges of any positive arity.
struct Hypergraph {
  VertexSet vertices;
  std::vector<VertexSet> hyperedges;

  /// Throws GraphError when a hyperedge is empty or leaves the vertex set.
  void check() const;
};

/// Bipartite incidence graph I(H); `edge_nodes[i]` is the fresh vertex that
/// stands for `hyperedges[i]`.
struct IncidenceGraph {
  Graph graph;
  std::vector<Vertex> edge_nodes;
};

Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph remove_vertices(const Graph& g, const VertexSet& vertices);
Graph remove_edges(const Graph& g, const std::vector<Edge>& edges);
/// Removes the given vertices (with their incident edges) and edges.
Graph remove_items(const Graph& g, const VertexSet& vertices, const std::vector<Edge>& edges);
Graph add_edges(const Graph& g, const std::vector<Edge>& edges);
Graph add_vertices(const Graph& g, const VertexSet& vertices);
/// Subgraph consisting of exactly the given edges and their endpoints.
Graph edge_subgraph(const Graph& g, const std::vector<Edge>& edges);
/// Union of two graphs on possibly overlapping vertex sets.
Graph graph_union(const Graph& a, const Graph& b);

/// Components ordered by their smallest vertex id.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
/// Whether g[s] is connected (the empty set counts as connected).
bool induces_connected(const Graph& g, const VertexSet& s);
bool is_tree(const Graph& g);

/// Shortest path from `from` to any vertex of `to`, only through vertices of
/// `allowed` (endpoints included). Ties resolve towards smaller ids.
std::optional<std::vector<Vertex>> shortest_path(const Graph& g, Vertex from, const VertexSet& to,
                                                 const VertexSet& allowed);

/// Whether `sub` is a subgraph of `g` (same ids).
bool is_subgraph(const Graph& sub, const Graph& g);

IncidenceGraph incidence_graph(const Hypergraph& h);
Hypergraph as_hypergraph(const Graph& g);

std::string describe(const Edge& e);
std::string describe(const VertexSet& s);

}  // namespace flatwall
