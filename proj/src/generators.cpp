#include "flatwall/generators.hpp"

#include <set>

namespace flatwall {
namespace {

CoordGraph from_coords(const std::vector<Coord>& coords_in, const std::vector<std::pair<Coord, Coord>>& edges) {
  // Row-major numbering over (y, x).
  std::vector<Coord> coords = coords_in;
  std::sort(coords.begin(), coords.end(), [](const Coord& a, const Coord& b) {
    return std::tie(a.second, a.first) < std::tie(b.second, b.first);
  });
  CoordGraph out;
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    auto id = static_cast<Vertex>(i);
    out.coords[id] = coords[i];
    out.ids[coords[i]] = id;
    vs.push_back(id);
  }
  std::vector<Edge> es;
  for (const auto& [a, b] : edges) es.emplace_back(out.ids.at(a), out.ids.at(b));
  out.graph = Graph(std::move(vs), es);
  return out;
}

}  // namespace

Vertex CoordGraph::at(int x, int y) const {
  auto it = ids.find({x, y});
  if (it == ids.end()) throw GraphError("no vertex at (" + std::to_string(x) + "," + std::to_string(y) + ")");
  return it->second;
}

CoordGraph grid(int k, int r) {
  if (k < 2 || r < 2) throw GraphError("grid dimensions must be at least 2");
  std::vector<Coord> coords;
  std::vector<std::pair<Coord, Coord>> edges;
  for (int y = 1; y <= r; ++y) {
    for (int x = 1; x <= k; ++x) {
      coords.emplace_back(x, y);
      if (x < k) edges.push_back({{x, y}, {x + 1, y}});
      if (y < r) edges.push_back({{x, y}, {x, y + 1}});
    }
  }
  return from_coords(coords, edges);
}

std::vector<Vertex> grid_corners(const CoordGraph& g) {
  std::vector<Vertex> out;
  for (Vertex v : g.graph.vertices()) {
    if (g.graph.degree(v) == 2) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> grid_internal(const CoordGraph& g) {
  std::vector<Vertex> out;
  for (Vertex v : g.graph.vertices()) {
    if (g.graph.degree(v) == 4) out.push_back(v);
  }
  return out;
}

CoordGraph triangulated_grid(int k) {
  if (k < 2) throw GraphError("triangulated grid needs k >= 2");
  CoordGraph g = grid(k, k);
  std::vector<Edge> diagonals;
  for (int y = 1; y < k; ++y) {
    for (int x = 1; x < k; ++x) diagonals.emplace_back(g.at(x, y), g.at(x + 1, y + 1));
  }
  g.graph = add_edges(g.graph, diagonals);
  return g;
}

Gamma gamma(int k) {
  if (k < 3) throw GraphError("gamma needs k >= 3");
  Gamma out;
  out.k = k;
  out.grid = triangulated_grid(k);
  out.loaded = out.grid.at(1, k);
  std::vector<Edge> loading;
  for (const auto& [c, v] : out.grid.ids) {
    auto [x, y] = c;
    bool external = x == 1 || y == 1 || x == k || y == k;
    if (external && v != out.loaded && !out.grid.graph.has_edge(v, out.loaded)) loading.emplace_back(v, out.loaded);
  }
  out.grid.graph = add_edges(out.grid.graph, loading);
  return out;
}

Gamma gamma_star(int k) {
  Gamma out = gamma(k);
  CoordGraph base = grid(k, k);
  std::vector<Edge> extra;
  for (Vertex w : out.grid.graph.neighbors(out.loaded)) {
    if (!base.graph.has_edge(out.loaded, w)) extra.emplace_back(out.loaded, w);
  }
  out.grid.graph = remove_edges(out.grid.graph, extra);
  return out;
}

Wall wall(int k) {
  if (k < 1) throw GraphError("wall height must be at least 1");
  const int width = 2 * k + 2;
  const int rows = k + 1;
  std::map<Coord, std::set<Coord>> adj;
  for (int y = 1; y <= rows; ++y) {
    for (int x = 1; x <= width; ++x) {
      adj[{x, y}];
      if (x < width) {
        adj[{x, y}].insert({x + 1, y});
        adj[{x + 1, y}].insert({x, y});
      }
      if (y < rows && (x + y) % 2 == 0) {
        adj[{x, y}].insert({x, y + 1});
        adj[{x, y + 1}].insert({x, y});
      }
    }
  }
  std::vector<Coord> pendant;
  for (const auto& [c, nb] : adj) {
    if (nb.size() == 1) pendant.push_back(c);
  }
  for (const auto& c : pendant) {
    for (const auto& d : adj[c]) adj[d].erase(c);
    adj.erase(c);
  }
  std::vector<Coord> coords;
  std::vector<std::pair<Coord, Coord>> edges;
  for (const auto& [c, nb] : adj) {
    coords.push_back(c);
    for (const auto& d : nb) {
      if (c < d) edges.push_back({c, d});
    }
  }
  Wall w;
  w.height = k;
  w.grid = from_coords(coords, edges);
  const int shift = (k + 1) % 2;
  w.corners = {w.grid.at(1, 1), w.grid.at(2 * k + 1, 1), w.grid.at(2 * k + 1 + shift, k + 1),
               w.grid.at(1 + shift, k + 1)};
  return w;
}

std::vector<Vertex> Wall::horizontal_path(int j) const {
  if (j < 1 || j > height + 1) throw GraphError("horizontal path index out of range");
  std::vector<Vertex> out;
  for (int x = 1; x <= 2 * height + 2; ++x) {
    if (grid.has(x, j)) out.push_back(grid.at(x, j));
  }
  return out;
}

std::vector<Vertex> Wall::vertical_path(int i) const {
  if (i < 1 || i > 2 * height + 1) throw GraphError("vertical path index out of range");
  std::vector<Vertex> out;
  int x = i;
  out.push_back(grid.at(x, 1));
  for (int y = 1; y <= height; ++y) {
    if ((x + y) % 2 != 0) {
      x = x == i ? i + 1 : i;
      out.push_back(grid.at(x, y));
    }
    out.push_back(grid.at(x, y + 1));
  }
  return out;
}

std::vector<Vertex> Wall::perimeter() const {
  const int k = height;
  std::vector<Vertex> out;
  for (int x = 1; x <= 2 * k + 1; ++x) out.push_back(grid.at(x, 1));
  auto east = vertical_path(2 * k + 1);
  out.insert(out.end(), east.begin() + 1, east.end());
  const int x3 = grid.coords.at(corners[2]).first;
  const int x4 = grid.coords.at(corners[3]).first;
  for (int x = x3 - 1; x >= x4; --x) out.push_back(grid.at(x, k + 1));
  auto west = vertical_path(1);
  for (auto it = west.rbegin() + 1; it + 1 != west.rend(); ++it) out.push_back(*it);
  return out;
}

Graph pyramid(int k, int l) {
  if (k < 2) throw GraphError("pyramid grid side must be at least 2");
  if (l < 0) throw GraphError("pyramid clique size must be non-negative");
  CoordGraph g = grid(k, k);
  std::vector<Edge> edges = g.graph.edges();
  const int base = k * k;
  std::vector<Vertex> vs = g.graph.vertices();
  for (int a = 0; a < l; ++a) {
    vs.push_back(base + a);
    for (int b = 0; b < a; ++b) edges.emplace_back(base + a, base + b);
    for (int v = 0; v < base; ++v) edges.emplace_back(base + a, v);
  }
  return Graph(std::move(vs), edges);
}

Graph lower_bound_graph(int k, int h) {
  if (k < 3) throw GraphError("lower bound graph needs k >= 3");
  if (h < 6) throw GraphError("lower bound graph needs h >= 6");
  return pyramid(k, h - 5);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return Graph::on_range(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) edges.emplace_back(a, (a + 1) % n);
  return Graph::on_range(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int a = 0; a + 1 < n; ++a) edges.emplace_back(a, a + 1);
  return Graph::on_range(n, edges);
}

}  // namespace flatwall
