#include "doctest.h"
#include "fixtures.hpp"
#include "flatwall/json_io.hpp"

using namespace flatwall;
using io::Json;

TEST_CASE("graph round trip") {
  auto g = wall(2).graph();
  auto j = io::graph_to_json(g);
  CHECK(j["n"] == 16);
  CHECK(io::graph_from_json(Json::parse(j.dump())) == g);
  auto labelled = Json::parse(R"({"n": 2, "edges": [[0, 1]], "labels": {"0": "a"}})");
  CHECK(io::graph_from_json(labelled).num_edges() == 1);
}

TEST_CASE("malformed graphs") {
  CHECK_THROWS_AS(io::graph_from_json(Json::parse(R"({"edges": []})")), io::FormatError);
  CHECK_THROWS_AS(io::graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 2]]})")), io::FormatError);
  CHECK_THROWS_AS(io::graph_from_json(Json::parse(R"({"n": 2, "edges": [[0]]})")), io::FormatError);
  CHECK_THROWS_AS(io::graph_from_json(Json::parse(R"({"n": "x", "edges": []})")), io::FormatError);
  CHECK_THROWS_AS(io::graph_to_json(Graph({1, 3}, {Edge(1, 3)})), io::FormatError);
}

TEST_CASE("decomposition round trip") {
  auto g = grid(3, 3).graph;
  auto td = exact_treewidth(g).decomposition;
  auto back = io::decomposition_from_json(Json::parse(io::decomposition_to_json(td).dump()), g);
  CHECK(back.bags == td.bags);
  CHECK(back.tree == td.tree);
  CHECK(validate(back).valid);
  auto dangling = Json::parse(R"({"tree_edges": [[0, 5]], "bags": {"0": [0]}})");
  CHECK_THROWS_AS(io::decomposition_from_json(dangling, g), io::FormatError);
}

TEST_CASE("minor round trip and host reference") {
  auto m = *find_minor(complete_graph(5), complete_graph(4));
  auto j = io::minor_to_json(m);
  auto back = io::minor_from_json(j, m.host);
  CHECK(back.branch_sets == m.branch_sets);
  CHECK(verify_minor(back).valid);
  CHECK_THROWS_AS(io::minor_from_json(j, complete_graph(6)), io::FormatError);
}

TEST_CASE("wall and division round trip") {
  auto w = plain_wall(2);
  auto j = io::wall_to_json(w);
  auto back = io::wall_from_json(j, w.host);
  CHECK(back.original == w.original);
  CHECK(back.branch_paths == w.branch_paths);
  j["corners"][0] = 99;
  CHECK_THROWS_AS(io::wall_from_json(j, w.host), io::FormatError);
  auto c = compass(w.host, w);
  auto rd = per_edge_division(c);
  auto rd2 = io::division_from_json(io::division_to_json(rd), c);
  CHECK(rd2.flaps == rd.flaps);
  CHECK(validate_rural(rd2).valid);
}

TEST_CASE("certificate round trip over the corpus") {
  for (const auto& tc : fixtures::trichotomy_corpus()) {
    auto out = trichotomy_check(tc.g, tc.h, tc.k, tc.threshold);
    if (!out.certificate) continue;
    CAPTURE(tc.name);
    auto text = io::certificate_to_json(*out.certificate).dump();
    auto back = io::certificate_from_json(Json::parse(text), tc.g);
    CHECK(back.clause == out.certificate->clause);
    CHECK(verify_certificate(tc.g, tc.h, tc.k, back).valid);
    CHECK(io::certificate_to_json(back).dump() == text);
  }
  CHECK_THROWS_AS(io::certificate_from_json(Json::parse(R"({"clause": 4})"), complete_graph(3)), io::FormatError);
}
