#include <cmath>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "flatwall/structure.hpp"

using namespace flatwall;

TEST_CASE("apex number") {
  CHECK(apex_number(grid(3, 3).graph).number == 0);
  CHECK(apex_number(complete_graph(5)).number == 1);
  // K6 minus one vertex is K5; minus two it is K4.
  CHECK(apex_number(complete_graph(6)).number == 2);
  auto lb = apex_number(lower_bound_graph(3, 6));
  CHECK(lb.number == 1);
  CHECK(is_planar(remove_vertices(lower_bound_graph(3, 6), lb.apices)));
  CHECK_THROWS_AS(apex_number(complete_graph(17)), CapExceeded);
}

TEST_CASE("ceil sqrt") {
  for (std::int64_t n = 0; n < 2000; ++n) {
    auto r = ceil_sqrt(n);
    CHECK(r * r >= n);
    CHECK((r == 0 || (r - 1) * (r - 1) < n));
  }
}

TEST_CASE("structure constants match the formulas") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> small(0, 9);
  int checked = 0;
  while (checked < 100) {
    StructureConstants c{6 + small(rng), small(rng) % 5, 0, small(rng), small(rng)};
    c.a_size = c.an_h + small(rng) % 3;
    long double f5 = 14.0L * static_cast<long double>(c.h - c.an_h) +
                     std::ceil(std::sqrt(static_cast<long double>(c.an_h))) - 24.0L;
    CHECK(static_cast<long double>(c.f5()) == f5);
    CHECK(c.g() == c.f5());
    if (f5 < 1) {
      CHECK_THROWS_AS(c.f4(), std::domain_error);
      ++checked;
      continue;
    }
    long double f4 = std::pow(f5, static_cast<long double>(c.a_size - c.an_h + 1));
    CHECK(static_cast<long double>(c.f4()) == f4);
    for (int k = 1; k <= 3; ++k) {
      long double f3 = static_cast<long double>(c.f2_value) * (4.0L * k * f4 + 12.0L) + c.f1_value;
      CHECK(static_cast<long double>(c.f3(k)) == f3);
    }
    ++checked;
  }
  StructureConstants huge{1000, 1, 60, 1, 1};
  CHECK_THROWS_AS(huge.f4(), std::overflow_error);
}

TEST_CASE("pyramid minor models") {
  for (auto [k, h] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {2, 4}}) {
    auto m = pyramid_minor_model(k, h);
    auto v = verify_minor(m);
    CHECK_MESSAGE(v.valid, v.message);
    CHECK(m.pattern == pyramid(k, h));
  }
  CHECK_THROWS_AS(pyramid_minor_model(1, 1), StructureError);
}

TEST_CASE("pyramid existence agrees with exhaustive search") {
  auto m = pyramid_minor_model(2, 1);
  auto found = find_minor(m.host, m.pattern, SearchLimits{10, 30, {}});
  REQUIRE(found);
  CHECK(verify_minor(*found).valid);
}

TEST_CASE("merge flaps") {
  Graph g = Graph::on_range(6, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(4, 5)});
  auto one = merge_flaps({Graph({1, 2}, {Edge(1, 2)})}, {}, g);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Graph({1, 2}, {Edge(1, 2)}));
  // Two components whose trace is {3} merge.
  std::vector<Graph> fam{Graph({3, 10}, {Edge(3, 10)}), Graph({3, 11}, {Edge(3, 11)})};
  auto merged = merge_flaps(fam, {}, g);
  REQUIRE(merged.size() == 1);
  CHECK(merged[0].num_vertices() == 3);
  // A component that only meets s is dropped.
  auto dropped = merge_flaps({Graph({4, 20}, {Edge(4, 20)}), Graph({21, 22}, {Edge(21, 22)})}, {4}, g);
  CHECK(dropped.empty());
}

TEST_CASE("apex reduction drops one apex") {
  StructureConstants consts{6, 1, 3, 1, 1};
  for (const auto& f : fixtures::apex_fixtures()) {
    auto r = apex_reduce(f.graph, complete_graph(6), f.apices, f.wall, 1, consts, 4);
    CHECK(r.a_prime.size() + 1 == f.apices.size());
    CHECK(f.apices.count(r.dropped));
    CHECK(r.w_prime.height == 1);
    CHECK(validate_wall(r.w_prime).valid);
    auto c = compass(remove_vertices(f.graph, r.a_prime), r.w_prime);
    for (Vertex a : f.apices) CHECK_FALSE(c.graph.has_vertex(a));
  }
}

TEST_CASE("apex reduction all-ones evidence") {
  StructureConstants consts{6, 1, 3, 1, 1};
  auto f = fixtures::apex_fixture(2, {});
  try {
    apex_reduce(f.graph, complete_graph(6), f.apices, f.wall, 1, consts, 4);
    FAIL("expected HMinorFound");
  } catch (const HMinorFound& e) {
    auto v = verify_minor(e.evidence);
    CHECK_MESSAGE(v.valid, v.message);
    // 2x2 grid of windows plus two apices.
    CHECK(e.evidence.pattern.num_vertices() == 6);
    CHECK(e.evidence.pattern.num_edges() == 4 + 8);
  }
  StructureConstants strict{6, 3, 3, 1, 1};
  CHECK_THROWS_AS(apex_reduce(f.graph, complete_graph(6), f.apices, f.wall, 1, strict, 4), StructureError);
}

TEST_CASE("trichotomy on small inputs") {
  auto minor = trichotomy_check(complete_graph(5), complete_graph(4), 1, 3);
  REQUIRE(minor.certificate);
  CHECK(minor.certificate->clause == 1);
  auto tree = trichotomy_check(path_graph(6), complete_graph(5), 1, 1);
  REQUIRE(tree.certificate);
  CHECK(tree.certificate->clause == 2);
  CHECK(width(*tree.certificate->decomposition) == 1);
  CHECK(verify_certificate(path_graph(6), complete_graph(5), 1, *tree.certificate).valid);
  auto none = trichotomy_check(complete_graph(3), cycle_graph(4), 1, 1);
  CHECK_FALSE(none.certificate);
  CHECK_THROWS_AS(trichotomy_check(complete_graph(17), complete_graph(4), 1, 1), CapExceeded);
}

TEST_CASE("certificate corruption") {
  auto g = cycle_graph(6);
  auto h = complete_graph(5);
  auto out = trichotomy_check(g, h, 1, 1);
  REQUIRE(out.certificate);
  REQUIRE(out.certificate->clause == 3);
  CHECK(verify_certificate(g, h, 1, *out.certificate).valid);
  auto bad = *out.certificate;
  bad.apices = {0};
  CHECK(verify_certificate(g, h, 1, bad).condition == "apex:size");
  bad = *out.certificate;
  bad.flap_bound = 0;
  // Height-1 walls have no internal flaps, so the bound is vacuous here.
  CHECK(verify_certificate(g, h, 1, bad).valid);
  bad = *out.certificate;
  bad.division->flaps.pop_back();
  CHECK(verify_certificate(g, h, 1, bad).condition == "rural:1");
  CHECK(verify_certificate(g, h, 2, *out.certificate).condition == "wall:height");
  bad.clause = 7;
  CHECK_THROWS_AS(verify_certificate(g, h, 1, bad), StructureError);
}

TEST_CASE("trichotomy corpus") {
  for (const auto& tc : fixtures::trichotomy_corpus()) {
    CAPTURE(tc.name);
    auto out = trichotomy_check(tc.g, tc.h, tc.k, tc.threshold);
    if (tc.expected_clause == 0) {
      CHECK_FALSE(out.certificate);
      CHECK_FALSE(out.note.empty());
      continue;
    }
    REQUIRE(out.certificate);
    CHECK(out.certificate->clause == tc.expected_clause);
    auto v = verify_certificate(tc.g, tc.h, tc.k, *out.certificate);
    CHECK_MESSAGE(v.valid, v.condition << " " << v.message);
    auto bad = *out.certificate;
    if (bad.clause == 1) {
      auto& sets = bad.minor->branch_sets;
      sets[1].insert(*sets[0].begin());
      CHECK(verify_certificate(tc.g, tc.h, tc.k, bad).condition == "minor:1");
    } else if (bad.clause == 2) {
      bad.width_bound -= 1;
      CHECK(verify_certificate(tc.g, tc.h, tc.k, bad).condition == "td:width");
    } else {
      auto extra = VertexSet(tc.g.vertices().begin(), tc.g.vertices().end());
      bad.apices = VertexSet(extra.begin(), std::next(extra.begin(), 2 + static_cast<long>(bad.apices.size())));
      CHECK(verify_certificate(tc.g, tc.h, tc.k, bad).condition == "apex:size");
    }
  }
}

TEST_CASE("K6 is not a minor of the lower-bound graph") {
  CHECK_FALSE(find_minor(lower_bound_graph(3, 6), complete_graph(6), SearchLimits{6, 16, {}}));
}
