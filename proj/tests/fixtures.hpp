#pragma once

// Fixtures shared by the unit and acceptance tests.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "flatwall/generators.hpp"
#include "flatwall/planarity.hpp"
#include "flatwall/rural.hpp"
#include "flatwall/structure.hpp"
#include "flatwall/wall.hpp"

namespace fixtures {

using namespace flatwall;

// Smooth-contraction witness for gamma(n) inside `host`, where `phi` maps
// host vertices to gamma vertices. The disk is every face of the embedding
// of host minus the model of the loaded corner except the longest one.
inline SmoothContractionWitness gamma_witness(const Graph& host, const Gamma& gm, std::map<Vertex, Vertex> phi) {
  SmoothContractionWitness wit;
  wit.model = ContractionModel{host, gm.grid.graph, std::move(phi)};
  wit.v = gm.loaded;
  VertexSet outside;
  for (const auto& [x, p] : wit.model.phi) {
    if (p == gm.loaded) outside.insert(x);
  }
  wit.embedding = *embed_planar(remove_vertices(host, outside));
  auto faces = trace_faces(wit.embedding);
  std::size_t outer = 0;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i].size() > faces[outer].size()) outer = i;
  }
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (i != outer) wit.disk_faces.push_back(i);
  }
  return wit;
}

inline SmoothContractionWitness identity_gamma_witness(const Gamma& gm) {
  std::map<Vertex, Vertex> phi;
  for (Vertex v : gm.grid.graph.vertices()) phi[v] = v;
  return gamma_witness(gm.grid.graph, gm, phi);
}

// gamma(n) with every edge subdivided once. Subdivision vertices map to the
// loaded corner when they sit on one of its edges, otherwise to the smaller end.
struct SubdividedGamma {
  Graph host;
  SmoothContractionWitness witness;
};

inline SubdividedGamma subdivided_gamma(const Gamma& gm) {
  const Graph& g = gm.grid.graph;
  std::vector<Vertex> vs = g.vertices();
  std::vector<Edge> es;
  std::map<Vertex, Vertex> phi;
  for (Vertex v : vs) phi[v] = v;
  Vertex next = g.fresh_vertex();
  for (const auto& e : g.edges()) {
    Vertex s = next++;
    vs.push_back(s);
    es.emplace_back(e.u, s);
    es.emplace_back(s, e.v);
    phi[s] = e.contains(gm.loaded) ? gm.loaded : e.u;
  }
  Graph host(vs, es);
  return {host, gamma_witness(host, gm, phi)};
}

struct NonFlatFixture {
  std::string name;
  Graph graph;
  SubdividedWall wall;
};

// Walls wired with extra edges so that disjoint (c1,c3)- and (c2,c4)-paths
// exist by construction.
inline std::vector<NonFlatFixture> non_flat_fixtures() {
  std::vector<NonFlatFixture> out;
  for (int h = 1; h <= 3; ++h) {
    auto w = plain_wall(h);
    auto c = w.corners();
    out.push_back({"both-chords-h" + std::to_string(h), add_edges(w.host, {Edge(c[0], c[2]), Edge(c[1], c[3])}), w});
    if (h == 1) continue;
    // The wall interior carries a (c1,c3)-path avoiding c2 and c4.
    out.push_back({"chord-24-h" + std::to_string(h), add_edges(w.host, {Edge(c[1], c[3])}), w});
    out.push_back({"chord-13-h" + std::to_string(h), add_edges(w.host, {Edge(c[0], c[2])}), w});
    // A new vertex joined to c2, c4 and one interior wall vertex.
    auto per = perimeter(w);
    VertexSet pset(per.begin(), per.end());
    Vertex inner = -1;
    for (Vertex v : w.host.vertices()) {
      if (!pset.count(v)) {
        inner = v;
        break;
      }
    }
    Vertex x = w.host.fresh_vertex();
    out.push_back({"hub-24-h" + std::to_string(h),
                   add_edges(add_vertices(w.host, {x}), {Edge(x, c[1]), Edge(x, c[3]), Edge(x, inner)}), w});
  }
  // Subdivided wall: every perimeter edge carries one extra vertex.
  {
    auto w = plain_wall(2);
    Compass k{w, w.host};
    auto per = perimeter(w);
    std::vector<TransformOp> ops;
    for (std::size_t i = 0; i < per.size(); ++i) ops.push_back(TransformOp::subdivide(Edge(per[i], per[(i + 1) % per.size()])));
    auto sw = refind_after_transform(k, ops);
    auto c = sw.corners();
    out.push_back({"subdivided-both-chords-h2", add_edges(sw.host, {Edge(c[0], c[2]), Edge(c[1], c[3])}), sw});
  }
  return out;
}

struct BrokenDivision {
  int property;
  RuralDivision division;
};

// One deliberately broken division per rural property.
inline std::vector<BrokenDivision> broken_divisions() {
  std::vector<BrokenDivision> out;
  auto w = plain_wall(2);
  auto k = compass(w.host, w);
  auto edges = k.graph.edges();
  auto per = perimeter(w);
  VertexSet pset(per.begin(), per.end());

  // 1: an edge in two flaps.
  {
    auto rd = per_edge_division(k);
    rd.flaps[0] = add_edges(add_vertices(rd.flaps[0], {edges[1].u, edges[1].v}), {edges[1]});
    out.push_back({1, rd});
  }
  // 2: two flaps with equal boundary (an edge and a parallel 2-path).
  {
    // The new vertex must reach the wall interior to join the compass.
    Edge e = *std::find_if(edges.begin(), edges.end(),
                           [&](const Edge& f) { return !pset.count(f.u) || !pset.count(f.v); });
    Vertex t = k.graph.fresh_vertex();
    auto g = add_edges(add_vertices(w.host, {t}), {Edge(e.u, t), Edge(t, e.v)});
    auto kk = compass(g, w);
    RuralDivision rd{kk, {}};
    for (const auto& f : kk.graph.edges()) {
      if (f.contains(t)) continue;
      rd.flaps.push_back(Graph({f.u, f.v}, {f}));
    }
    rd.flaps.push_back(Graph({e.u, t, e.v}, {Edge(e.u, t), Edge(t, e.v)}));
    out.push_back({2, rd});
  }
  // 3: a flap made of two far-apart edges.
  {
    auto rd = per_edge_division(k);
    Edge a = edges.front();
    Edge b = edges.back();
    rd.flaps.clear();
    for (const auto& f : edges) {
      if (f != a && f != b) rd.flaps.push_back(Graph({f.u, f.v}, {f}));
    }
    rd.flaps.push_back(Graph({a.u, a.v, b.u, b.v}, {a, b}));
    out.push_back({3, rd});
  }
  // 4: a star on a new vertex with four boundary leaves.
  {
    auto b = bricks(w).cycles.front();
    Vertex t = k.graph.fresh_vertex();
    std::vector<Edge> spokes{Edge(t, b[0]), Edge(t, b[1]), Edge(t, b[3]), Edge(t, b[4])};
    auto g = add_edges(add_vertices(w.host, {t}), spokes);
    auto kk = compass(g, w);
    RuralDivision rd{kk, {}};
    for (const auto& f : w.host.edges()) rd.flaps.push_back(Graph({f.u, f.v}, {f}));
    rd.flaps.push_back(Graph({t, b[0], b[1], b[3], b[4]}, spokes));
    out.push_back({4, rd});
  }
  // 5: crossing chords between opposite corners.
  {
    auto c = w.corners();
    auto g = add_edges(w.host, {Edge(c[0], c[2]), Edge(c[1], c[3])});
    out.push_back({5, per_edge_division(compass(g, w))});
  }
  return out;
}

struct ApexFixture {
  Graph graph;
  VertexSet apices;
  SubdividedWall wall;  // lives in graph minus apices
};

// wall(3) plus apices, windowed into four height-1 subwalls. Apex t touches
// window j unless (j, t) is in `zeros`; every apex also touches the first wall vertex outside the windows.
inline ApexFixture apex_fixture(int apex_count, const std::set<std::pair<int, int>>& zeros) {
  auto w = plain_wall(3);
  auto windows = disjoint_subwalls(w, 4, 1);
  VertexSet used;
  for (const auto& win : windows) {
    auto vv = win.vertices();
    used.insert(vv.begin(), vv.end());
  }
  Vertex anchor = 0;
  while (used.count(anchor)) ++anchor;
  Vertex first = w.host.fresh_vertex();
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  VertexSet apices;
  for (int t = 0; t < apex_count; ++t) {
    Vertex a = first + t;
    vs.push_back(a);
    apices.insert(a);
    es.emplace_back(a, anchor);
    for (int j = 0; j < 4; ++j) {
      if (zeros.count({j, t})) continue;
      es.emplace_back(a, windows[static_cast<std::size_t>(j)].original[static_cast<std::size_t>(1 + t % 4)]);
    }
  }
  auto g = add_edges(add_vertices(w.host, VertexSet(vs.begin(), vs.end())), es);
  return {g, apices, w};
}

// Twenty fixtures with at least one zero flag each.
inline std::vector<ApexFixture> apex_fixtures() {
  std::vector<ApexFixture> out;
  for (int i = 0; i < 20; ++i) {
    int count = 1 + i % 3;
    std::set<std::pair<int, int>> zeros{{i % 4, i % count}};
    if (i % 5 == 0) zeros.insert({(i + 1) % 4, (i + 1) % count});
    out.push_back(apex_fixture(count, zeros));
  }
  return out;
}

struct TrichotomyCase {
  std::string name;
  Graph g;
  Graph h;
  int k;
  int threshold;
  int expected_clause;  // 0 for undetermined
};

inline Graph wheel_graph(int rim) {
  std::vector<Edge> es;
  for (int i = 0; i < rim; ++i) {
    es.emplace_back(i, (i + 1) % rim);
    es.emplace_back(i, rim);
  }
  return Graph::on_range(rim + 1, es);
}

// Expected clauses by hand:
//  - clause 1 where H is visibly a minor (subgraph or contraction);
//  - clause 2 where H is excluded (planarity or too few vertices / cycles)
//    and treewidth (path 1, cycle 2, 3x3 grid 3) meets the threshold;
//  - clause 3 where treewidth exceeds the threshold and a 6-cycle (k = 1)
//    or the graph itself (k = 2) is a flat wall with an empty apex set;
//  - undetermined where the graph is too small for a wall or H is planar.
inline std::vector<TrichotomyCase> trichotomy_corpus() {
  return {
      {"k5-k4", complete_graph(5), complete_graph(4), 1, 3, 1},
      {"k6-k5", complete_graph(6), complete_graph(5), 1, 3, 1},
      {"wall2-c4", wall(2).graph(), cycle_graph(4), 1, 1, 1},
      {"path8-k5", path_graph(8), complete_graph(5), 1, 1, 2},
      {"cycle8-k4", cycle_graph(8), complete_graph(4), 1, 2, 2},
      {"grid3-k5", grid(3, 3).graph, complete_graph(5), 1, 3, 2},
      {"lower-bound-3-6-k6", lower_bound_graph(3, 6), complete_graph(6), 1, 3, 3},
      {"cycle6-k5", cycle_graph(6), complete_graph(5), 1, 1, 3},
      {"wheel7-k5", wheel_graph(7), complete_graph(5), 1, 2, 3},
      {"wall2-k5", wall(2).graph(), complete_graph(5), 2, 1, 3},
      {"k4-k5", complete_graph(4), complete_graph(5), 1, 2, 0},
      {"k3-c4", complete_graph(3), cycle_graph(4), 1, 1, 0},
  };
}

}  // namespace fixtures
