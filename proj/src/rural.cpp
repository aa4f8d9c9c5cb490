#include "flatwall/rural.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/edmonds_karp_max_flow.hpp>
#include <map>

#include "flatwall/planarity.hpp"

namespace flatwall {
namespace {

RuralVerdict reject(int property, std::string message, std::vector<Vertex> witness) {
  return {false, property, std::move(message), std::move(witness)};
}

using FlowTraits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using FlowGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS, boost::no_property,
    boost::property<boost::edge_capacity_t, long,
                    boost::property<boost::edge_residual_capacity_t, long,
                                    boost::property<boost::edge_reverse_t, FlowTraits::edge_descriptor>>>>;

class Network {
 public:
  explicit Network(std::size_t n) : g_(n) {}

  void arc(std::size_t from, std::size_t to, long cap) {
    auto cap_map = boost::get(boost::edge_capacity, g_);
    auto rev = boost::get(boost::edge_reverse, g_);
    auto e = boost::add_edge(from, to, g_).first;
    auto r = boost::add_edge(to, from, g_).first;
    cap_map[e] = cap;
    cap_map[r] = 0;
    rev[e] = r;
    rev[r] = e;
  }

  long max_flow(std::size_t s, std::size_t t) { return boost::edmonds_karp_max_flow(g_, s, t); }

 private:
  FlowGraph g_;
};

}  // namespace

VertexSet boundary(const Compass& k, const Graph& j) {
  if (!is_subgraph(j, k.graph)) throw RuralError("flap is not a subgraph of the compass");
  auto cs = k.wall.corners();
  VertexSet out;
  for (Vertex v : j.vertices()) {
    bool is_corner = std::find(cs.begin(), cs.end(), v) != cs.end();
    bool external = false;
    for (Vertex w : k.graph.neighbors(v)) {
      if (!j.has_edge(v, w)) {
        external = true;
        break;
      }
    }
    if (is_corner || external) out.insert(v);
  }
  return out;
}

Hypergraph boundary_hypergraph(const RuralDivision& rd) {
  Hypergraph h;
  for (const auto& d : rd.flaps) {
    auto b = boundary(rd.compass, d);
    h.vertices.insert(b.begin(), b.end());
    h.hyperedges.push_back(std::move(b));
  }
  return h;
}

bool check_disk_embeddable(const Hypergraph& h, const std::array<Vertex, 4>& corners) {
  for (Vertex c : corners) {
    if (!h.vertices.count(c)) throw RuralError("corner " + std::to_string(c) + " is not a hypergraph vertex");
  }
  auto inc = incidence_graph(h);
  Vertex hub = inc.graph.fresh_vertex();
  std::vector<Edge> gadget;
  for (std::size_t i = 0; i < 4; ++i) {
    gadget.emplace_back(corners[i], hub);
    Edge rim(corners[i], corners[(i + 1) % 4]);
    if (!inc.graph.has_edge(rim)) gadget.push_back(rim);
  }
  return is_planar(add_edges(add_vertices(inc.graph, {hub}), gadget));
}

bool check_linkage(const Compass& k, const VertexSet& e) {
  if (e.size() > 4) throw RuralError("linkage set has more than four vertices");
  for (Vertex v : e) {
    if (!k.graph.has_vertex(v)) throw RuralError("vertex " + std::to_string(v) + " is not in the compass");
  }
  // Vertex i splits into in-node 2i and out-node 2i+1 with capacity one.
  const std::size_t n = k.graph.num_vertices();
  const std::size_t source = 2 * n;
  const std::size_t sink = 2 * n + 1;
  Network net(2 * n + 2);
  for (std::size_t i = 0; i < n; ++i) net.arc(2 * i, 2 * i + 1, 1);
  for (const auto& edge : k.graph.edges()) {
    std::size_t a = k.graph.index_of(edge.u);
    std::size_t b = k.graph.index_of(edge.v);
    net.arc(2 * a + 1, 2 * b, 1);
    net.arc(2 * b + 1, 2 * a, 1);
  }
  for (Vertex v : e) net.arc(source, 2 * k.graph.index_of(v), 1);
  for (Vertex c : k.wall.corners()) net.arc(2 * k.graph.index_of(c) + 1, sink, 1);
  return net.max_flow(source, sink) >= static_cast<long>(e.size());
}

RuralVerdict validate_rural(const RuralDivision& rd) {
  const Graph& k = rd.compass.graph;
  std::vector<VertexSet> bounds;
  for (const auto& d : rd.flaps) bounds.push_back(boundary(rd.compass, d));

  // Property 1: non-empty parts partitioning E(K).
  if (rd.flaps.empty()) return reject(1, "division has no flaps", {});
  std::map<Edge, std::size_t> owner;
  for (std::size_t i = 0; i < rd.flaps.size(); ++i) {
    if (rd.flaps[i].num_edges() == 0) return reject(1, "flap " + std::to_string(i) + " has no edges", {});
    for (const auto& e : rd.flaps[i].edges()) {
      auto [it, fresh] = owner.emplace(e, i);
      if (!fresh) {
        return reject(1, "edge " + describe(e) + " lies in flaps " + std::to_string(it->second) + " and " +
                             std::to_string(i),
                      {e.u, e.v});
      }
    }
  }
  for (const auto& e : k.edges()) {
    if (!owner.count(e)) return reject(1, "edge " + describe(e) + " lies in no flap", {e.u, e.v});
  }

  // Property 2: distinct boundaries; flaps meet only in shared boundary.
  for (std::size_t i = 0; i < rd.flaps.size(); ++i) {
    for (std::size_t j = i + 1; j < rd.flaps.size(); ++j) {
      if (bounds[i] == bounds[j]) {
        return reject(2, "flaps " + std::to_string(i) + " and " + std::to_string(j) + " have equal boundary " +
                             describe(bounds[i]),
                      {bounds[i].begin(), bounds[i].end()});
      }
      for (Vertex v : rd.flaps[i].vertices()) {
        if (!rd.flaps[j].has_vertex(v)) continue;
        if (!bounds[i].count(v) || !bounds[j].count(v)) {
          return reject(2,
                        "flaps " + std::to_string(i) + " and " + std::to_string(j) + " share non-boundary vertex " +
                            std::to_string(v),
                        {v});
        }
      }
    }
  }

  // Property 3: boundary pairs joined inside the flap, internally avoiding
  // the rest of the boundary.
  for (std::size_t i = 0; i < rd.flaps.size(); ++i) {
    const auto& b = bounds[i];
    for (auto a = b.begin(); a != b.end(); ++a) {
      for (auto c = std::next(a); c != b.end(); ++c) {
        VertexSet allowed;
        for (Vertex v : rd.flaps[i].vertices()) {
          if (!b.count(v) || v == *a || v == *c) allowed.insert(v);
        }
        if (!shortest_path(rd.flaps[i], *a, {*c}, allowed)) {
          return reject(3,
                        "flap " + std::to_string(i) + " has no path between boundary vertices " + std::to_string(*a) +
                            " and " + std::to_string(*c),
                        {*a, *c});
        }
      }
    }
  }

  // Property 4.
  for (std::size_t i = 0; i < rd.flaps.size(); ++i) {
    if (bounds[i].size() > 3) {
      return reject(4, "flap " + std::to_string(i) + " has boundary " + describe(bounds[i]) + " of size " +
                           std::to_string(bounds[i].size()),
                    {bounds[i].begin(), bounds[i].end()});
    }
  }

  // Property 5.
  auto h = boundary_hypergraph(rd);
  auto cs = rd.compass.wall.corners();
  for (Vertex c : cs) {
    if (!h.vertices.count(c)) return reject(5, "corner " + std::to_string(c) + " lies in no flap", {c});
  }
  if (!check_disk_embeddable(h, cs)) return reject(5, "boundary hypergraph does not embed in a disk", {});
  for (std::size_t i = 0; i < rd.flaps.size(); ++i) {
    if (!check_linkage(rd.compass, bounds[i])) {
      return reject(5, "boundary " + describe(bounds[i]) + " of flap " + std::to_string(i) +
                           " cannot be linked to the corners",
                    {bounds[i].begin(), bounds[i].end()});
    }
  }
  return {};
}

std::vector<Graph> internal_flaps(const RuralDivision& rd) {
  auto per = perimeter(rd.compass.wall);
  VertexSet p(per.begin(), per.end());
  std::vector<Graph> out;
  for (const auto& d : rd.flaps) {
    const auto& vs = d.vertices();
    if (std::none_of(vs.begin(), vs.end(), [&](Vertex v) { return p.count(v) != 0; })) out.push_back(d);
  }
  return out;
}

RuralDivision per_edge_division(const Compass& k) {
  RuralDivision rd{k, {}};
  for (const auto& e : k.graph.edges()) rd.flaps.push_back(Graph({e.u, e.v}, {e}));
  return rd;
}

}  // namespace flatwall
