#include "flatwall/graph.hpp"

#include <deque>
#include <map>
#include <numeric>

namespace flatwall {

Graph::Graph(std::vector<Vertex> vertices, const std::vector<Edge>& edges) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw GraphError("duplicate vertex id");
  }
  vertices_ = std::move(vertices);
  adjacency_.assign(vertices_.size(), {});
  for (const auto& e : edges) {
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
    std::size_t iu = index_of(e.u);
    std::size_t iv = index_of(e.v);
    adjacency_[iu].push_back(e.v);
    adjacency_[iv].push_back(e.u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw GraphError("multiple edges are not allowed");
    }
  }
  num_edges_ = edges.size();
}

Graph Graph::on_range(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw GraphError("negative vertex count");
  std::vector<Vertex> vs(static_cast<std::size_t>(n));
  std::iota(vs.begin(), vs.end(), 0);
  return Graph(std::move(vs), edges);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (Vertex w : adjacency_[i]) {
      if (vertices_[i] < w) out.emplace_back(vertices_[i], w);
    }
  }
  return out;
}

bool Graph::has_vertex(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (!has_vertex(a) || !has_vertex(b)) return false;
  const auto& list = adjacency_[index_of(a)];
  return std::binary_search(list.begin(), list.end(), b);
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  return adjacency_[index_of(v)];
}

std::size_t Graph::index_of(Vertex v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) {
    throw GraphError("unknown vertex " + std::to_string(v));
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

void Hypergraph::check() const {
  for (const auto& e : hyperedges) {
    if (e.empty()) throw GraphError("empty hyperedge");
    for (Vertex v : e) {
      if (!vertices.count(v)) throw GraphError("hyperedge vertex " + std::to_string(v) + " not in vertex set");
    }
  }
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    if (!g.has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v));
  }
  std::vector<Edge> edges;
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) {
      if (v < w && s.count(w)) edges.emplace_back(v, w);
    }
  }
  return Graph({s.begin(), s.end()}, edges);
}

Graph remove_items(const Graph& g, const VertexSet& vertices, const std::vector<Edge>& edges) {
  for (Vertex v : vertices) {
    if (!g.has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v));
  }
  std::set<Edge> dropped;
  for (const auto& e : edges) {
    if (!g.has_edge(e)) throw GraphError("unknown edge " + describe(e));
    dropped.insert(e);
  }
  std::vector<Vertex> keep;
  for (Vertex v : g.vertices()) {
    if (!vertices.count(v)) keep.push_back(v);
  }
  std::vector<Edge> kept_edges;
  for (const auto& e : g.edges()) {
    if (vertices.count(e.u) || vertices.count(e.v) || dropped.count(e)) continue;
    kept_edges.push_back(e);
  }
  return Graph(std::move(keep), kept_edges);
}

Graph remove_vertices(const Graph& g, const VertexSet& vertices) { return remove_items(g, vertices, {}); }

Graph remove_edges(const Graph& g, const std::vector<Edge>& edges) { return remove_items(g, {}, edges); }

Graph add_edges(const Graph& g, const std::vector<Edge>& edges) {
  std::set<Edge> all;
  for (const auto& e : g.edges()) all.insert(e);
  for (const auto& e : edges) all.insert(e);
  return Graph(g.vertices(), {all.begin(), all.end()});
}

Graph add_vertices(const Graph& g, const VertexSet& vertices) {
  VertexSet vs = g.vertex_set();
  vs.insert(vertices.begin(), vertices.end());
  return Graph({vs.begin(), vs.end()}, g.edges());
}

Graph edge_subgraph(const Graph& g, const std::vector<Edge>& edges) {
  VertexSet vs;
  std::set<Edge> es;
  for (const auto& e : edges) {
    if (!g.has_edge(e)) throw GraphError("unknown edge " + describe(e));
    vs.insert(e.u);
    vs.insert(e.v);
    es.insert(e);
  }
  return Graph({vs.begin(), vs.end()}, {es.begin(), es.end()});
}

Graph graph_union(const Graph& a, const Graph& b) {
  VertexSet vs = a.vertex_set();
  for (Vertex v : b.vertices()) vs.insert(v);
  std::set<Edge> es;
  for (const auto& e : a.edges()) es.insert(e);
  for (const auto& e : b.edges()) es.insert(e);
  return Graph({vs.begin(), vs.end()}, {es.begin(), es.end()});
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(g.num_vertices(), 0);
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    if (seen[i]) continue;
    VertexSet comp;
    std::deque<Vertex> queue{g.vertices()[i]};
    seen[i] = 1;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      comp.insert(v);
      for (Vertex w : g.neighbors(v)) {
        std::size_t j = g.index_of(w);
        if (!seen[j]) {
          seen[j] = 1;
          queue.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool induces_connected(const Graph& g, const VertexSet& s) {
  if (s.empty()) return true;
  VertexSet seen{*s.begin()};
  std::vector<Vertex> stack{*s.begin()};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (s.count(w) && seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen.size() == s.size();
}

bool is_tree(const Graph& g) {
  return !g.empty() && g.num_edges() + 1 == g.num_vertices() && is_connected(g);
}

std::optional<std::vector<Vertex>> shortest_path(const Graph& g, Vertex from, const VertexSet& to,
                                                 const VertexSet& allowed) {
  if (!allowed.count(from)) return std::nullopt;
  std::map<Vertex, Vertex> parent{{from, from}};
  std::deque<Vertex> queue{from};
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (to.count(v)) {
      std::vector<Vertex> path{v};
      while (path.back() != from) path.push_back(parent[path.back()]);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (Vertex w : g.neighbors(v)) {
      if (allowed.count(w) && !parent.count(w)) {
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  return std::nullopt;
}

bool is_subgraph(const Graph& sub, const Graph& g) {
  for (Vertex v : sub.vertices()) {
    if (!g.has_vertex(v)) return false;
  }
  for (const auto& e : sub.edges()) {
    if (!g.has_edge(e)) return false;
  }
  return true;
}

IncidenceGraph incidence_graph(const Hypergraph& h) {
  h.check();
  IncidenceGraph out;
  Vertex next = h.vertices.empty() ? 0 : *h.vertices.rbegin() + 1;
  std::vector<Vertex> vs(h.vertices.begin(), h.vertices.end());
  std::vector<Edge> edges;
  for (const auto& e : h.hyperedges) {
    Vertex node = next++;
    out.edge_nodes.push_back(node);
    vs.push_back(node);
    for (Vertex v : e) edges.emplace_back(v, node);
  }
  out.graph = Graph(std::move(vs), edges);
  return out;
}

Hypergraph as_hypergraph(const Graph& g) {
  Hypergraph h;
  h.vertices = g.vertex_set();
  for (const auto& e : g.edges()) h.hyperedges.push_back({e.u, e.v});
  return h;
}

std::string describe(const Edge& e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; }

std::string describe(const VertexSet& s) {
  std::string out = "{";
  for (Vertex v : s) {
    if (out.size() > 1) out += ",";
    out += std::to_string(v);
  }
  return out + "}";
}

}  // namespace flatwall
