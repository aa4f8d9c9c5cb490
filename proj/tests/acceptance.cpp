// Acceptance run: one PASS/FAIL line per criterion, with its time limit.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "flatwall/decomposition.hpp"
#include "flatwall/generators.hpp"
#include "flatwall/minors.hpp"
#include "flatwall/planarity.hpp"
#include "flatwall/rural.hpp"
#include "flatwall/structure.hpp"
#include "flatwall/wall.hpp"
#include "random_graphs.hpp"

using namespace flatwall;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few failures of a criterion.
struct Tally {
  int failures = 0;
  std::ostringstream first;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ < 3) first << (failures > 1 ? "; " : "") << what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failures == 0) return {true, summary};
    return {false, std::to_string(failures) + " failure(s): " + first.str()};
  }
};

bool run(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= limit_s) {
    out.pass = false;
    out.detail += " (over the time limit)";
  }
  std::cout << "criterion " << std::setw(2) << id << ": " << (out.pass ? "PASS" : "FAIL") << "  " << std::fixed
            << std::setprecision(2) << secs << " s / " << std::setprecision(0) << limit_s << " s  " << name << ": "
            << out.detail << std::endl;
  return out.pass;
}

Outcome tightness() {
  auto g = lower_bound_graph(3, 6);
  int tw = exact_treewidth(g).treewidth;
  bool k6 = find_minor(g, complete_graph(6)).has_value();
  int an = apex_number(g).number;
  std::ostringstream s;
  s << "tw=" << tw << " K6-minor=" << (k6 ? "yes" : "no") << " an=" << an;
  return {tw == 4 && !k6 && an == 1, s.str()};
}

Outcome apex_lemma() {
  std::mt19937 rng(101);
  Tally t;
  for (int i = 0; i < 200; ++i) {
    int n = 3 + static_cast<int>(rng() % 8);
    auto g = fixtures::random_graph(rng, n, 0.2 + 0.1 * (rng() % 6));
    auto x = fixtures::random_subset(rng, g.vertices(), rng() % 4);
    int before = treewidth(g);
    int after = treewidth(remove_vertices(g, x));
    t.expect(after >= before - static_cast<int>(x.size()), "sample " + std::to_string(i));
  }
  return t.outcome("200 samples, no violations");
}

Outcome small_decompositions() {
  std::mt19937 rng(202);
  Tally t;
  for (int i = 0; i < 200; ++i) {
    int n = 2 + static_cast<int>(rng() % 9);
    auto g = fixtures::random_graph(rng, n, 0.35);
    auto td = fixtures::random_decomposition(rng, g, 1 + static_cast<int>(rng() % 10));
    auto small = make_small(td);
    t.expect(validate(small).valid, "invalid output " + std::to_string(i));
    t.expect(is_small(small), "not small " + std::to_string(i));
    t.expect(small.tree.num_vertices() <= g.num_vertices(), "too many nodes " + std::to_string(i));
  }
  return t.outcome("200 decompositions small with |V(T)| <= |V(G)|");
}

Outcome closure_bags() {
  std::mt19937 rng(303);
  Tally t;
  for (int i = 0; i < 50; ++i) {
    int n = 3 + static_cast<int>(rng() % 8);
    auto g = fixtures::random_graph(rng, n, 0.3 + 0.05 * (rng() % 6));
    auto td = fixtures::random_decomposition(rng, g, static_cast<int>(rng() % 6));
    t.expect(validate(td).valid, "invalid input " + std::to_string(i));
    int target = treewidth(g);
    bool found = false;
    for (Vertex node : td.tree.vertices()) {
      if (treewidth(closure_bag(td, node)) >= target) {
        found = true;
        break;
      }
    }
    t.expect(found, "decomposition " + std::to_string(i));
  }
  return t.outcome("50 decompositions each with a closure bag of full treewidth");
}

Outcome flatness_suite() {
  Tally t;
  for (int h = 1; h <= 3; ++h) {
    auto w = plain_wall(h);
    t.expect(is_flat(compass(w.host, w)).verdict == Flatness::Flat, "wall " + std::to_string(h) + " not flat");
  }
  auto fx = fixtures::non_flat_fixtures();
  for (const auto& f : fx) {
    auto c = compass(f.graph, f.wall);
    auto r = is_flat(c);
    t.expect(r.verdict == Flatness::NotFlat, f.name + " not refuted");
    t.expect(r.verdict != Flatness::NotFlat || valid_flatness_witness(c, r.path13, r.path24), f.name + " bad witness");
  }
  return t.outcome("3 plane walls flat, " + std::to_string(fx.size()) + " fixtures refuted with valid witnesses");
}

// wall(2) with a chord across two wall edges at an interior vertex and,
// for odd i, a vertex stacked on a wall edge with an interior endpoint.
Graph transform_fixture(const SubdividedWall& w, int i) {
  auto per = perimeter(w);
  VertexSet pset(per.begin(), per.end());
  std::vector<Vertex> interior;
  for (Vertex v : w.host.vertices()) {
    if (!pset.count(v)) interior.push_back(v);
  }
  Vertex x = interior[static_cast<std::size_t>(i) % interior.size()];
  auto nb = w.host.neighbors(x);
  std::size_t pick = static_cast<std::size_t>(i / static_cast<int>(interior.size())) % nb.size();
  Vertex a = nb[pick], b = nb[(pick + 1) % nb.size()];
  Graph g = add_edges(w.host, {Edge(a, b)});
  if (i % 2 == 1) {
    Vertex y = interior[static_cast<std::size_t>(i + 1) % interior.size()];
    Vertex z = w.host.neighbors(y)[0];
    Vertex t = g.fresh_vertex();
    g = add_edges(add_vertices(g, {t}), {Edge(t, y), Edge(t, z)});
  }
  return g;
}

std::vector<std::array<Vertex, 3>> triangles(const Graph& g) {
  std::vector<std::array<Vertex, 3>> out;
  for (const auto& e : g.edges()) {
    for (Vertex z : g.neighbors(e.u)) {
      if (z > e.u && z > e.v && g.has_edge(e.v, z)) out.push_back({e.u, e.v, z});
    }
  }
  return out;
}

Outcome transformations() {
  std::mt19937 rng(404);
  auto w = plain_wall(2);
  auto base = wall(2).graph();
  Tally t;
  int delta_ys = 0;
  for (int run = 0; run < 100; ++run) {
    auto c = compass(transform_fixture(w, run), w);
    std::vector<TransformOp> ops;
    Graph current = c.graph;
    int length = 1 + static_cast<int>(rng() % 10);
    for (int step = 0; step < length; ++step) {
      auto tris = triangles(current);
      if (!tris.empty() && rng() % 2 == 0) {
        auto tri = tris[rng() % tris.size()];
        std::shuffle(tri.begin(), tri.end(), rng);
        ops.push_back(TransformOp::delta_y(tri[0], tri[1], tri[2]));
        ++delta_ys;
      } else {
        auto es = current.edges();
        ops.push_back(TransformOp::subdivide(es[rng() % es.size()]));
      }
      current = refind_after_transform(c, ops).host;
    }
    auto out = refind_after_transform(c, ops);
    std::string tag = "run " + std::to_string(run);
    t.expect(validate_wall(out).valid, tag + " invalid wall");
    t.expect(is_flat(compass(out.host, out)).verdict == Flatness::Flat, tag + " not flat");
    t.expect(is_subdivision_of(wall_subgraph(out), base), tag + " not a subdivision of wall(2)");
  }
  return t.outcome("100 sequences (" + std::to_string(delta_ys) + " delta-Y steps) stay flat subdivisions");
}

Outcome pyramids() {
  Tally t;
  for (auto [k, h] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {2, 4}}) {
    auto m = pyramid_minor_model(k, h);
    std::string tag = "(" + std::to_string(k) + "," + std::to_string(h) + ")";
    t.expect(verify_minor(m).valid, tag + " model invalid");
    if ((k == 2 && h == 1) || (k == 3 && h == 1)) {
      auto found = find_minor(m.host, m.pattern, SearchLimits{10, 30, {}});
      t.expect(found.has_value() && verify_minor(*found).valid, tag + " exhaustive search disagrees");
    }
  }
  return t.outcome("4 models validate; (2,1) and (3,1) confirmed by search");
}

Outcome apex_reduction() {
  Tally t;
  StructureConstants consts{6, 1, 3, 1, 1};
  auto fx = fixtures::apex_fixtures();
  for (std::size_t i = 0; i < fx.size(); ++i) {
    const auto& f = fx[i];
    std::string tag = "fixture " + std::to_string(i);
    auto r = apex_reduce(f.graph, complete_graph(6), f.apices, f.wall, 1, consts, 4);
    t.expect(r.a_prime.size() + 1 == f.apices.size() && f.apices.count(r.dropped) && !r.a_prime.count(r.dropped),
             tag + " did not drop exactly one apex");
    t.expect(r.w_prime.height == 1 && validate_wall(r.w_prime).valid, tag + " bad subwall");
    auto wv = f.wall.vertices();
    for (Vertex v : r.w_prime.vertices()) t.expect(wv.count(v) > 0, tag + " subwall leaves the wall");
    auto c = compass(remove_vertices(f.graph, r.a_prime), r.w_prime);
    for (Vertex a : f.apices) t.expect(!c.graph.has_vertex(a), tag + " compass meets an apex");
  }
  auto all = fixtures::apex_fixture(2, {});
  bool raised = false;
  try {
    apex_reduce(all.graph, complete_graph(6), all.apices, all.wall, 1, consts, 4);
  } catch (const HMinorFound& e) {
    raised = true;
    t.expect(verify_minor(e.evidence).valid, "all-ones evidence invalid");
  }
  t.expect(raised, "all-ones fixture did not report an H-minor");
  return t.outcome("20 reductions; all-ones case gives a valid minor model");
}

Outcome trichotomy() {
  Tally t;
  std::map<int, int> clauses;
  int corruptions = 0;
  for (const auto& tc : fixtures::trichotomy_corpus()) {
    auto out = trichotomy_check(tc.g, tc.h, tc.k, tc.threshold);
    int got = out.certificate ? out.certificate->clause : 0;
    ++clauses[got];
    t.expect(got == tc.expected_clause, tc.name + " gave clause " + std::to_string(got));
    if (!out.certificate) continue;
    const auto& cert = *out.certificate;
    auto v = verify_certificate(tc.g, tc.h, tc.k, cert);
    t.expect(v.valid, tc.name + " rejected: " + v.condition);
    auto expect_condition = [&](WeakStructureCertificate bad, const std::string& condition, int k) {
      auto r = verify_certificate(tc.g, tc.h, k, bad);
      ++corruptions;
      t.expect(!r.valid && r.condition == condition,
               tc.name + " corruption expected " + condition + ", got " + (r.valid ? "valid" : r.condition));
    };
    if (cert.clause == 1) {
      auto bad = cert;
      auto& sets = bad.minor->branch_sets;
      Vertex p1 = std::next(sets.begin())->first;
      sets[p1].insert(*sets.begin()->second.begin());
      expect_condition(bad, "minor:1", tc.k);
      bad = cert;
      bad.minor->host = add_vertices(tc.g, {tc.g.fresh_vertex()});
      expect_condition(bad, "minor:host", tc.k);
    } else if (cert.clause == 2) {
      auto bad = cert;
      bad.width_bound -= 1;
      expect_condition(bad, "td:width", tc.k);
      bad = cert;
      bad.decomposition->bags.begin()->second.clear();
      auto r = verify_certificate(tc.g, tc.h, tc.k, bad);
      ++corruptions;
      t.expect(!r.valid && r.condition.rfind("td:", 0) == 0, tc.name + " emptied bag accepted");
    } else {
      expect_condition(cert, "wall:height", tc.k + 1);
      auto bad = cert;
      bad.division->flaps.pop_back();
      expect_condition(bad, "rural:1", tc.k);
      bad = cert;
      auto vs = tc.g.vertices();
      bad.apices = VertexSet(vs.begin(), vs.begin() + static_cast<long>(cert.apices.size()) + 2);
      expect_condition(bad, "apex:size", tc.k);
    }
  }
  std::ostringstream s;
  s << "12 instances (clause1=" << clauses[1] << " clause2=" << clauses[2] << " clause3=" << clauses[3]
    << " undetermined=" << clauses[0] << "), " << corruptions << " corruptions named";
  t.expect(clauses[1] > 0 && clauses[2] > 0 && clauses[3] > 0 && clauses[0] > 0, "an outcome is not covered");
  return t.outcome(s.str());
}

Outcome rural() {
  Tally t;
  for (int h = 1; h <= 3; ++h) {
    auto w = plain_wall(h);
    auto v = validate_rural(per_edge_division(compass(w.host, w)));
    t.expect(v.valid, "height " + std::to_string(h) + ": " + v.message);
  }
  auto broken = fixtures::broken_divisions();
  for (const auto& b : broken) {
    auto v = validate_rural(b.division);
    t.expect(!v.valid && v.property == b.property,
             "property " + std::to_string(b.property) + " reported as " + std::to_string(v.property));
  }
  return t.outcome("3 per-edge divisions valid, " + std::to_string(broken.size()) + " broken ones named");
}

}  // namespace

int main() {
  int failed = 0;
  failed += !run(1, "tightness example", 60, tightness);
  failed += !run(2, "treewidth under vertex deletion", 30, apex_lemma);
  failed += !run(3, "small decompositions", 10, small_decompositions);
  failed += !run(4, "closure bags", 60, closure_bags);
  failed += !run(5, "flatness suite", 30, flatness_suite);
  failed += !run(6, "subdivision and delta-Y invariance", 60, transformations);
  failed += !run(7, "pyramid minor models", 120, pyramids);
  failed += !run(8, "apex reduction", 30, apex_reduction);
  failed += !run(9, "trichotomy round trip", 120, trichotomy);
  failed += !run(10, "rural division axioms", 20, rural);
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
  return failed == 0 ? 0 : 1;
}
