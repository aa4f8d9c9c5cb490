#include "flatwall/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

#include <set>
#include <utility>

namespace flatwall {
namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(const Graph& g) {
  BoostGraph bg(g.num_vertices());
  for (const auto& e : g.edges()) {
    boost::add_edge(g.index_of(e.u), g.index_of(e.v), bg);
  }
  auto edge_index = boost::get(boost::edge_index, bg);
  int count = 0;
  for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(edge_index, *it, count++);
  return bg;
}

// Position of `w` in the rotation around `v`.
std::size_t position(const std::vector<Vertex>& rot, Vertex w) {
  return static_cast<std::size_t>(std::find(rot.begin(), rot.end(), w) - rot.begin());
}

}  // namespace

bool is_planar(const Graph& g) {
  if (g.num_vertices() >= 3 && g.num_edges() > 3 * g.num_vertices() - 6) return false;
  BoostGraph bg = to_boost(g);
  return boost::boyer_myrvold_planarity_test(bg);
}

std::optional<RotationEmbedding> embed_planar(const Graph& g) {
  BoostGraph bg = to_boost(g);
  std::vector<std::vector<BoostEdge>> storage(boost::num_vertices(bg));
  auto embedding = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, bg));
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                           boost::boyer_myrvold_params::embedding = embedding)) {
    return std::nullopt;
  }
  RotationEmbedding out;
  out.host = g;
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    auto& rot = out.rotation[vs[i]];
    for (const auto& e : storage[i]) {
      auto s = boost::source(e, bg);
      auto t = boost::target(e, bg);
      rot.push_back(vs[s == i ? t : s]);
    }
  }
  auto faces = trace_faces(out);
  if (!faces.empty()) out.outer_face = faces.front();
  return out;
}

bool rotation_is_consistent(const RotationEmbedding& emb) {
  if (emb.rotation.size() != emb.host.num_vertices()) return false;
  for (Vertex v : emb.host.vertices()) {
    auto it = emb.rotation.find(v);
    if (it == emb.rotation.end()) return false;
    std::vector<Vertex> sorted = it->second;
    std::sort(sorted.begin(), sorted.end());
    auto nb = emb.host.neighbors(v);
    if (!std::equal(sorted.begin(), sorted.end(), nb.begin(), nb.end())) return false;
  }
  return true;
}

std::vector<Face> trace_faces(const RotationEmbedding& emb) {
  std::vector<Face> faces;
  std::set<std::pair<Vertex, Vertex>> used;
  for (Vertex v : emb.host.vertices()) {
    const auto& rot = emb.rotation.at(v);
    if (rot.empty()) {
      faces.push_back({v});
      continue;
    }
    for (Vertex w : rot) {
      if (used.count({v, w})) continue;
      Face face;
      Vertex a = v;
      Vertex b = w;
      while (used.insert({a, b}).second) {
        face.push_back(a);
        // Next dart leaves b right after the reverse dart (b, a) in b's rotation.
        const auto& rb = emb.rotation.at(b);
        Vertex c = rb[(position(rb, a) + 1) % rb.size()];
        a = b;
        b = c;
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

std::vector<Edge> face_edges(const Face& face) {
  std::vector<Edge> out;
  if (face.size() < 2) return out;
  for (std::size_t i = 0; i < face.size(); ++i) out.emplace_back(face[i], face[(i + 1) % face.size()]);
  return out;
}

bool satisfies_euler(const RotationEmbedding& emb) {
  if (!rotation_is_consistent(emb)) return false;
  auto faces = trace_faces(emb);
  for (const auto& comp : connected_components(emb.host)) {
    std::size_t edges = 0;
    for (Vertex v : comp) edges += emb.host.degree(v);
    edges /= 2;
    std::size_t f = 0;
    for (const auto& face : faces) {
      if (comp.count(face.front())) ++f;
    }
    long long euler = static_cast<long long>(comp.size()) - static_cast<long long>(edges) + static_cast<long long>(f);
    if (euler != 2) return false;
  }
  return true;
}

}  // namespace flatwall
