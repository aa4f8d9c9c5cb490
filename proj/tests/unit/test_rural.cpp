#include <functional>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "flatwall/rural.hpp"

using namespace flatwall;

namespace {

// Exhaustive search for |e| vertex-disjoint paths from e to distinct corners.
bool linkage_oracle(const Compass& k, const VertexSet& e) {
  std::vector<Vertex> starts(e.begin(), e.end());
  auto cs = k.wall.corners();
  VertexSet corners(cs.begin(), cs.end());
  VertexSet used;
  std::function<bool(std::size_t)> route;
  std::function<bool(Vertex, std::size_t)> walk = [&](Vertex v, std::size_t i) {
    if (corners.count(v) && route(i + 1)) return true;
    for (Vertex w : k.graph.neighbors(v)) {
      if (used.count(w) || (e.count(w) && w != starts[i])) continue;
      used.insert(w);
      if (walk(w, i)) return true;
      used.erase(w);
    }
    return false;
  };
  route = [&](std::size_t i) {
    if (i == starts.size()) return true;
    if (used.count(starts[i])) return false;
    used.insert(starts[i]);
    bool ok = walk(starts[i], i);
    if (!ok) used.erase(starts[i]);
    return ok;
  };
  return route(0);
}

}  // namespace

TEST_CASE("boundary operator") {
  auto w = plain_wall(2);
  auto k = compass(w.host, w);
  auto cs = w.corners();
  CHECK(boundary(k, k.graph) == VertexSet(cs.begin(), cs.end()));
  auto e = k.graph.edges()[3];
  CHECK(boundary(k, Graph({e.u, e.v}, {e})) == VertexSet{e.u, e.v});
  CHECK_THROWS_AS(boundary(k, Graph({0, 100}, {Edge(0, 100)})), RuralError);
}

TEST_CASE("per-edge divisions of plane walls validate") {
  for (int h = 1; h <= 3; ++h) {
    auto w = plain_wall(h);
    auto rd = per_edge_division(compass(w.host, w));
    auto v = validate_rural(rd);
    CHECK_MESSAGE(v.valid, v.message);
    std::size_t total = 0;
    for (const auto& f : rd.flaps) total += f.num_edges();
    CHECK(total == rd.compass.graph.num_edges());
    // Sub-oracles run on their own.
    CHECK(check_disk_embeddable(boundary_hypergraph(rd), w.corners()));
    for (const auto& f : rd.flaps) CHECK(check_linkage(rd.compass, boundary(rd.compass, f)));
  }
}

TEST_CASE("broken divisions name their property") {
  for (const auto& b : fixtures::broken_divisions()) {
    auto v = validate_rural(b.division);
    CHECK_FALSE(v.valid);
    CHECK_MESSAGE(v.property == b.property, v.message);
  }
}

TEST_CASE("disk embeddability") {
  Hypergraph h;
  h.vertices = {0, 1, 2, 3};
  h.hyperedges = {{0, 1}};
  CHECK(check_disk_embeddable(h, {0, 1, 2, 3}));
  Hypergraph k5;
  k5.vertices = {0, 1, 2, 3, 10, 11, 12, 13, 14};
  for (Vertex a = 10; a < 15; ++a) {
    for (Vertex b = a + 1; b < 15; ++b) k5.hyperedges.push_back({a, b});
  }
  k5.hyperedges.push_back({0, 1});
  k5.hyperedges.push_back({2, 3});
  CHECK_FALSE(check_disk_embeddable(k5, {0, 1, 2, 3}));
  CHECK_THROWS_AS(check_disk_embeddable(h, {0, 1, 2, 9}), RuralError);
}

TEST_CASE("linkage") {
  auto w = plain_wall(2);
  auto k = compass(w.host, w);
  CHECK(check_linkage(k, {w.corners()[0]}));
  CHECK_THROWS_AS(check_linkage(k, {0, 1, 2, 3, 4}), RuralError);
  // Three vertices behind a cut vertex.
  Vertex cut = k.graph.fresh_vertex();
  std::vector<Edge> extra{Edge(cut, w.corners()[0])};
  for (Vertex x = cut + 1; x <= cut + 3; ++x) extra.emplace_back(cut, x);
  auto g = add_edges(add_vertices(k.graph, {cut, cut + 1, cut + 2, cut + 3}), extra);
  Compass kk{k.wall, g};
  kk.wall.host = g;
  CHECK_FALSE(check_linkage(kk, {cut + 1, cut + 2, cut + 3}));
}

TEST_CASE("linkage agrees with exhaustive search") {
  std::mt19937 rng(7);
  for (int round = 0; round < 60; ++round) {
    int h = 1 + round % 2;
    auto w = plain_wall(h);
    auto g = w.host;
    auto vs = g.vertices();
    std::uniform_int_distribution<std::size_t> pick(0, vs.size() - 1);
    // Thin the graph by a few random edges.
    auto es = g.edges();
    std::shuffle(es.begin(), es.end(), rng);
    es.resize(std::min<std::size_t>(es.size(), static_cast<std::size_t>(round % 4)));
    g = remove_edges(g, es);
    Compass k{w, g};
    k.wall.host = g;
    VertexSet e;
    std::size_t size = 1 + static_cast<std::size_t>(round % 3);
    while (e.size() < size) e.insert(vs[pick(rng)]);
    CHECK(check_linkage(k, e) == linkage_oracle(k, e));
  }
}

TEST_CASE("internal flaps") {
  auto w = plain_wall(3);
  auto rd = per_edge_division(compass(w.host, w));
  auto inner = internal_flaps(rd);
  auto per = perimeter(w);
  VertexSet p(per.begin(), per.end());
  std::size_t expected = 0;
  for (const auto& e : w.host.edges()) expected += !p.count(e.u) && !p.count(e.v);
  CHECK(inner.size() == expected);
  RuralDivision whole{compass(w.host, w), {w.host}};
  CHECK(internal_flaps(whole).empty());
}
