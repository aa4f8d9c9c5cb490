#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flatwall/graph.hpp"

namespace flatwall {

/// Tree decomposition (X, T) of `host`. Tree nodes are bag ids.
struct TreeDecomposition {
  Graph tree;
  std::map<Vertex, VertexSet> bags;
  Graph host;
};

class DecompositionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Outcome of validate(). `condition` is 0 when valid, otherwise the first
/// violated decomposition condition (1 cover, 2 edge, 3 connected trace).
struct TdVerdict {
  bool valid = true;
  int condition = 0;
  std::string message;
  std::optional<Vertex> vertex;
  std::optional<Edge> edge;
};

/// Throws DecompositionError when the tree is not a tree, a tree node has no
/// bag, or a bag names a vertex outside the host.
TdVerdict validate(const TreeDecomposition& td);

/// Max bag size minus one; throws DecompositionError on invalid input.
int width(const TreeDecomposition& td);

/// Closure of bag `bag`: host[X_i] plus a clique on X_i ∩ X_j for each tree
/// neighbour j.
Graph closure_bag(const TreeDecomposition& td, Vertex bag);

/// Contracts tree edges with nested bags (greedily, in ascending edge order,
/// keeping the larger bag) until no bag is contained in another.
TreeDecomposition make_small(const TreeDecomposition& td);

/// True iff no two distinct bags are nested.
bool is_small(const TreeDecomposition& td);

struct TreewidthResult {
  int treewidth = -1;
  TreeDecomposition decomposition;
  std::vector<Vertex> elimination_order;
};

inline constexpr std::size_t kDefaultTreewidthCap = 18;

/// Exact treewidth by dynamic programming over eliminated vertex subsets.
/// The witness comes from the lexicographically smallest optimal
/// elimination order. The empty graph has treewidth -1.
/// Throws CapExceeded when |V(g)| > cap.
TreewidthResult exact_treewidth(const Graph& g, std::size_t cap = kDefaultTreewidthCap);

/// Shorthand for exact_treewidth(g, cap).treewidth.
int treewidth(const Graph& g, std::size_t cap = kDefaultTreewidthCap);

/// Decomposition induced by an elimination order of all vertices of g.
TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<Vertex>& order);

struct WeightedTree {
  Graph tree;
  std::map<Vertex, std::uint64_t> weight;  // missing entries weigh 0
};

/// Vertex u such that at most one component of tree - u holds a vertex of
/// weight > k. Picks, among vertices of weight >= k, the one farthest from
/// the smallest-id vertex (ties to the smaller id).
/// Throws GraphError if no vertex has weight >= k or the graph is not a tree.
Vertex select_tree_vertex(const WeightedTree& wt, std::uint64_t k);

}  // namespace flatwall
