#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "flatwall/graph.hpp"

namespace flatwall {

using Coord = std::pair<int, int>;  // (x, y), both 1-based

/// Graph whose vertices carry grid coordinates.
struct CoordGraph {
  Graph graph;
  std::map<Vertex, Coord> coords;
  std::map<Coord, Vertex> ids;

  bool has(int x, int y) const { return ids.count({x, y}) != 0; }
  /// Throws GraphError when no vertex sits at (x, y).
  Vertex at(int x, int y) const;
};

/// (k × r)-grid: x in 1..k, y in 1..r, vertex id (y-1)*k + (x-1).
CoordGraph grid(int k, int r);

/// Degree-2 vertices of a grid.
std::vector<Vertex> grid_corners(const CoordGraph& g);
/// Degree-4 vertices of a grid.
std::vector<Vertex> grid_internal(const CoordGraph& g);

struct Gamma {
  CoordGraph grid;  // the graph is the full Γ_k, coordinates from its grid
  Vertex loaded = 0;
  int k = 0;
};

/// Γ_k: the (k × k)-grid with diagonal {(x,y),(x+1,y+1)} in every cell and
/// the corner (1,k) joined to every vertex of the outer face.
Gamma gamma(int k);

/// Γ*_k: Γ_k without the loaded corner's edges that are not grid edges.
Gamma gamma_star(int k);

/// Triangulated (k × k)-grid without any loading edges.
CoordGraph triangulated_grid(int k);

/// The wall W_k with coordinates, corners and named paths.
struct Wall {
  int height = 0;
  CoordGraph grid;  // vertices numbered row-major over (y, x)
  std::array<Vertex, 4> corners{};  // c1 NW, c2 NE, c3 SE, c4 SW

  const Graph& graph() const { return grid.graph; }
  /// Canonical edge order used by subdivided-wall certificates.
  std::vector<Edge> edges() const { return grid.graph.edges(); }
  /// Row path P^(h)_j from its westmost to its eastmost vertex, j in 1..k+1.
  std::vector<Vertex> horizontal_path(int j) const;
  /// Zigzag path P^(v)_i inside columns i and i+1 from row 1 to row k+1,
  /// i in 1..2k+1.
  std::vector<Vertex> vertical_path(int i) const;
  /// Boundary cycle c1 -> c2 -> c3 -> c4 (c1 not repeated).
  std::vector<Vertex> perimeter() const;
};

/// W_k from the ((k+1) × (2k+2))-grid: drop vertical edges {(x,y),(x,y+1)}
/// with x+y odd, then the degree-1 vertices.
Wall wall(int k);

/// Π_{k,l}: (k × k)-grid (ids 0..k²-1) fully joined to a clique K_l (ids k²..).
Graph pyramid(int k, int l);

/// The (k × k)-grid joined to K_{h-5}.
Graph lower_bound_graph(int k, int h);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

}  // namespace flatwall
