#include "flatwall/structure.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

#include "flatwall/planarity.hpp"

namespace flatwall {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("constant overflows 64 bits");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("constant overflows 64 bits");
  return out;
}

// Visits the size-s subsets of `items` in lexicographic order until `visit`
// returns true.
bool for_each_subset(const std::vector<Vertex>& items, std::size_t s,
                     const std::function<bool(const VertexSet&)>& visit) {
  std::vector<std::size_t> idx(s);
  for (std::size_t i = 0; i < s; ++i) idx[i] = i;
  if (s > items.size()) return false;
  while (true) {
    VertexSet chosen;
    for (std::size_t i : idx) chosen.insert(items[i]);
    if (visit(chosen)) return true;
    std::size_t i = s;
    while (i > 0 && idx[i - 1] == items.size() - s + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Shortest path from any vertex of `from` to any vertex of `to` through
// `allowed`; ties resolve towards smaller ids.
std::optional<std::vector<Vertex>> bridge(const Graph& g, const VertexSet& from, const VertexSet& to,
                                          const VertexSet& allowed) {
  std::map<Vertex, Vertex> parent;
  std::deque<Vertex> q;
  for (Vertex v : from) {
    parent[v] = v;
    q.push_back(v);
  }
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop_front();
    if (to.count(v)) {
      std::vector<Vertex> path{v};
      while (parent[path.back()] != path.back()) path.push_back(parent[path.back()]);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (Vertex w : g.neighbors(v)) {
      if (parent.count(w) || !(allowed.count(w) || to.count(w))) continue;
      parent[w] = v;
      q.push_back(w);
    }
  }
  return std::nullopt;
}

bool touches(const Graph& g, Vertex a, const VertexSet& s) {
  for (Vertex w : g.neighbors(a)) {
    if (s.count(w)) return true;
  }
  return false;
}

// Evidence for the all-ones case: window compasses arranged as the grid of
// window positions, joined by host paths, plus every apex. Falls back to the
// bipartite pattern (no grid edges) when the paths cannot be routed.
MinorModel all_ones_evidence(const Graph& g, const Graph& g_minus_a, const std::vector<Vertex>& apices,
                             const std::vector<SubwallWindow>& windows, const std::vector<VertexSet>& compasses) {
  const auto m = static_cast<Vertex>(windows.size());
  std::map<int, std::vector<std::size_t>> rows;
  for (std::size_t j = 0; j < windows.size(); ++j) rows[windows[j].y0].push_back(j);
  std::size_t cols = windows.size();
  for (auto& [y, js] : rows) {
    std::sort(js.begin(), js.end(), [&](std::size_t a, std::size_t b) { return windows[a].x0 < windows[b].x0; });
    cols = std::min(cols, js.size());
  }
  std::vector<std::pair<std::size_t, std::size_t>> grid_edges;
  std::vector<std::vector<std::size_t>> layout;
  for (const auto& [y, js] : rows) layout.emplace_back(js.begin(), js.begin() + static_cast<std::ptrdiff_t>(cols));
  for (std::size_t r = 0; r < layout.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) grid_edges.emplace_back(layout[r][c], layout[r][c + 1]);
      if (r + 1 < layout.size()) grid_edges.emplace_back(layout[r][c], layout[r + 1][c]);
    }
  }

  auto build = [&](bool with_grid) {
    MinorModel model;
    model.host = g;
    std::vector<Vertex> pvs;
    std::vector<Edge> pes;
    for (Vertex j = 0; j < m; ++j) {
      pvs.push_back(j);
      model.branch_sets[j] = compasses[static_cast<std::size_t>(j)];
    }
    for (std::size_t i = 0; i < apices.size(); ++i) {
      Vertex p = m + static_cast<Vertex>(i);
      pvs.push_back(p);
      model.branch_sets[p] = {apices[i]};
      for (Vertex j = 0; j < m; ++j) pes.emplace_back(p, j);
    }
    if (with_grid) {
      VertexSet taken;
      for (const auto& c : compasses) taken.insert(c.begin(), c.end());
      for (auto [a, b] : grid_edges) {
        VertexSet allowed;
        for (Vertex v : g_minus_a.vertices()) {
          if (!taken.count(v)) allowed.insert(v);
        }
        auto& from = model.branch_sets[static_cast<Vertex>(a)];
        auto path = bridge(g_minus_a, from, model.branch_sets[static_cast<Vertex>(b)], allowed);
        if (!path) return std::optional<MinorModel>{};
        for (std::size_t i = 1; i + 1 < path->size(); ++i) {
          from.insert((*path)[i]);
          taken.insert((*path)[i]);
        }
        pes.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
      }
    }
    model.pattern = Graph(pvs, pes);
    return std::optional<MinorModel>(model);
  };
  if (auto model = build(true); model && verify_minor(*model).valid) return *model;
  return *build(false);
}

SubdividedWall wall_from_model(const TopologicalModel& m, int k) {
  Wall base = wall(k);
  SubdividedWall w;
  w.host = m.host;
  w.height = k;
  for (Vertex u : base.graph().vertices()) w.original.push_back(m.branch_vertices.at(u));
  for (const auto& e : base.edges()) w.branch_paths.push_back(m.paths.at(e));
  return w;
}

CertificateVerdict fail(std::string condition, std::string message) {
  return {false, std::move(condition), std::move(message)};
}

}  // namespace

std::int64_t ceil_sqrt(std::int64_t n) {
  if (n < 0) throw std::domain_error("square root of a negative number");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r >= n) --r;
  while (r * r < n) ++r;
  return r;
}

std::int64_t StructureConstants::f5() const {
  return checked_add(checked_add(checked_mul(14, checked_add(h, -an_h)), ceil_sqrt(an_h)), -24);
}

std::int64_t StructureConstants::f4() const {
  std::int64_t base = f5();
  if (base < 1) throw std::domain_error("f5 = " + std::to_string(base) + " is below 1");
  std::int64_t exponent = checked_add(checked_add(a_size, -an_h), 1);
  if (exponent < 0) throw std::domain_error("negative exponent for f4");
  std::int64_t out = 1;
  for (std::int64_t i = 0; i < exponent; ++i) out = checked_mul(out, base);
  return out;
}

std::int64_t StructureConstants::f3(std::int64_t k) const {
  return checked_add(checked_mul(f2_value, checked_add(checked_mul(checked_mul(4, k), f4()), 12)), f1_value);
}

ApexResult apex_number(const Graph& g, std::size_t cap) {
  if (g.num_vertices() > cap) {
    throw CapExceeded("apex number needs at most " + std::to_string(cap) + " vertices, got " +
                      std::to_string(g.num_vertices()));
  }
  for (std::size_t s = 0; s <= g.num_vertices(); ++s) {
    ApexResult out;
    if (for_each_subset(g.vertices(), s, [&](const VertexSet& chosen) {
          if (!is_planar(remove_vertices(g, chosen))) return false;
          out.apices = chosen;
          return true;
        })) {
      out.number = static_cast<int>(s);
      return out;
    }
  }
  throw std::logic_error("the empty graph is planar");
}

Graph apex_grid(int n, int h) {
  if (h < 0) throw GraphError("apex count must be non-negative");
  CoordGraph base = grid(n, n);
  std::vector<Vertex> vs = base.graph.vertices();
  std::vector<Edge> es = base.graph.edges();
  for (int t = 0; t < h; ++t) {
    Vertex a = n * n + t;
    vs.push_back(a);
    for (int v = 0; v < n * n; ++v) es.emplace_back(a, v);
  }
  return Graph(vs, es);
}

MinorModel pyramid_minor_model(int k, int h) {
  if (k < 2) throw StructureError("pyramid grid side must be at least 2");
  if (h < 1) throw StructureError("pyramid clique size must be at least 1");
  const int alpha = static_cast<int>(ceil_sqrt(h));
  const int n = k + alpha;
  MinorModel model;
  model.host = apex_grid(n, h);
  model.pattern = pyramid(k, h);
  CoordGraph host_grid = grid(n, n);
  for (int y = 1; y <= k; ++y) {
    for (int x = 1; x <= k; ++x) model.branch_sets[(y - 1) * k + (x - 1)] = {host_grid.at(x, y)};
  }
  // G2: the bottom-right alpha × alpha block, row-major.
  std::vector<Vertex> g2;
  for (int y = n - alpha + 1; y <= n; ++y) {
    for (int x = n - alpha + 1; x <= n; ++x) g2.push_back(host_grid.at(x, y));
  }
  for (int t = 0; t < h; ++t) model.branch_sets[k * k + t] = {n * n + t, g2[static_cast<std::size_t>(t)]};
  return model;
}

ApexReduction apex_reduce(const Graph& g, const Graph& h_graph, const VertexSet& a, const SubdividedWall& w, int k,
                          const StructureConstants& consts, std::optional<int> window_count) {
  (void)h_graph;
  if (static_cast<std::int64_t>(a.size()) < consts.an_h) {
    throw StructureError("apex set has " + std::to_string(a.size()) + " vertices, fewer than an(H) = " +
                         std::to_string(consts.an_h));
  }
  for (Vertex v : a) {
    if (!g.has_vertex(v)) throw StructureError("apex " + std::to_string(v) + " is not in the graph");
  }
  Graph g_minus_a = remove_vertices(g, a);
  if (!is_subgraph(wall_subgraph(w), g_minus_a)) throw StructureError("wall does not live in G minus A");
  int count = 0;
  if (window_count) {
    count = *window_count;
  } else {
    std::int64_t gh = consts.g();
    std::int64_t squared = checked_mul(gh, gh);
    if (gh < 1 || squared > std::numeric_limits<int>::max()) {
      throw StructureError("g(h)^2 = " + std::to_string(squared) + " windows cannot be placed");
    }
    count = static_cast<int>(squared);
  }
  auto windows = disjoint_subwall_windows(w, count, k);

  std::vector<Vertex> apices(a.begin(), a.end());
  ApexReduction out;
  std::vector<VertexSet> compasses;
  for (const auto& win : windows) {
    auto c = compass(g_minus_a, win.wall);
    compasses.push_back(c.graph.vertex_set());
    std::vector<int> row;
    for (Vertex x : apices) row.push_back(touches(g, x, compasses.back()) ? 1 : 0);
    out.q.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < windows.size(); ++j) {
    for (std::size_t i = 0; i < apices.size(); ++i) {
      if (out.q[j][i] != 0) continue;
      out.dropped = apices[i];
      out.a_prime = a;
      out.a_prime.erase(apices[i]);
      out.w_prime = windows[j].wall;
      out.w_prime.host = remove_vertices(g, out.a_prime);
      return out;
    }
  }
  throw HMinorFound("every apex touches every window compass",
                    all_ones_evidence(g, g_minus_a, apices, windows, compasses));
}

std::vector<Graph> merge_flaps(const std::vector<Graph>& family, const VertexSet& s, const Graph& g) {
  std::map<VertexSet, Graph> classes;
  for (const auto& f : family) {
    VertexSet cut;
    for (Vertex v : s) {
      if (f.has_vertex(v)) cut.insert(v);
    }
    Graph rest = remove_vertices(f, cut);
    for (const auto& comp : connected_components(rest)) {
      VertexSet trace;
      for (Vertex v : comp) {
        if (g.has_vertex(v) && !s.count(v)) trace.insert(v);
      }
      if (trace.empty()) continue;
      Graph part = induced_subgraph(rest, comp);
      auto it = classes.find(trace);
      if (it == classes.end()) {
        classes.emplace(trace, part);
      } else {
        it->second = graph_union(it->second, part);
      }
    }
  }
  // std::map orders traces lexicographically, hence by smallest vertex first.
  std::vector<Graph> out;
  for (auto& [trace, graph] : classes) out.push_back(std::move(graph));
  return out;
}

TrichotomyOutcome trichotomy_check(const Graph& g, const Graph& h_graph, int k, int width_threshold,
                                   const TrichotomyLimits& limits) {
  if (g.num_vertices() > limits.max_host) {
    throw CapExceeded("graph has " + std::to_string(g.num_vertices()) + " vertices, cap is " +
                      std::to_string(limits.max_host));
  }
  if (h_graph.num_vertices() > limits.max_pattern) {
    throw CapExceeded("H has " + std::to_string(h_graph.num_vertices()) + " vertices, cap is " +
                      std::to_string(limits.max_pattern));
  }
  if (k < 1 || k > 2) throw CapExceeded("wall height must be 1 or 2");
  std::string note;

  SearchLimits minor_limits{limits.max_pattern, limits.max_host, limits.budget};
  try {
    if (auto model = find_minor(g, h_graph, minor_limits)) {
      WeakStructureCertificate cert;
      cert.clause = 1;
      cert.minor = *model;
      return {cert, "H is a minor"};
    }
  } catch (const BudgetExceeded&) {
    note += "minor search ran out of budget; ";
  }

  auto tw = exact_treewidth(g);
  if (tw.treewidth <= width_threshold) {
    WeakStructureCertificate cert;
    cert.clause = 2;
    cert.decomposition = tw.decomposition;
    cert.width_bound = width_threshold;
    return {cert, note + "treewidth " + std::to_string(tw.treewidth)};
  }

  int an = apex_number(h_graph).number;
  if (an == 0) return {std::nullopt, note + "H is planar; the apex clause needs an(H) >= 1"};

  Graph pattern = wall(k).graph();
  SearchLimits wall_limits{pattern.num_vertices(), std::max<std::size_t>(limits.max_host, 64), limits.budget};
  std::size_t candidates = 0;
  bool capped = false;
  std::optional<WeakStructureCertificate> found;
  std::vector<Vertex> vs = g.vertices();
  try {
    for (int s = 0; s <= an - 1 && !found && !capped; ++s) {
      for_each_subset(vs, static_cast<std::size_t>(s), [&](const VertexSet& apex_set) {
        Graph rest = remove_vertices(g, apex_set);
        if (rest.num_vertices() < pattern.num_vertices()) return false;
        enumerate_topological_minors(rest, pattern, wall_limits, [&](const TopologicalModel& m) {
          if (++candidates > limits.max_wall_candidates) {
            capped = true;
            return false;
          }
          SubdividedWall w = wall_from_model(m, k);
          Compass c;
          try {
            c = compass(rest, w);
          } catch (const WallError&) {
            return true;
          }
          if (is_flat(c, limits.budget).verdict != Flatness::Flat) return true;
          RuralDivision rd = per_edge_division(c);
          if (!validate_rural(rd).valid) return true;
          for (const auto& flap : internal_flaps(rd)) {
            if (treewidth(flap) > width_threshold) return true;
          }
          WeakStructureCertificate cert;
          cert.clause = 3;
          cert.apices = apex_set;
          w.host = rest;
          cert.wall = w;
          cert.division = rd;
          cert.flap_bound = width_threshold;
          found = cert;
          return false;
        });
        return found.has_value() || capped;
      });
    }
  } catch (const BudgetExceeded&) {
    return {std::nullopt, note + "wall search ran out of budget"};
  }
  if (found) return {found, note + "flat wall after removing " + std::to_string(found->apices.size()) + " apices"};
  if (capped) return {std::nullopt, note + "wall candidate cap reached"};
  return {std::nullopt, note + "no clause holds within the searched bounds"};
}

CertificateVerdict verify_certificate(const Graph& g, const Graph& h_graph, int k,
                                      const WeakStructureCertificate& cert) {
  switch (cert.clause) {
    case 1: {
      if (!cert.minor) throw StructureError("clause 1 certificate has no minor model");
      if (!(cert.minor->host == g)) return fail("minor:host", "model host is not the graph");
      if (!(cert.minor->pattern == h_graph)) return fail("minor:pattern", "model pattern is not H");
      auto v = verify_minor(*cert.minor);
      if (!v.valid) return fail("minor:" + std::to_string(v.condition), v.message);
      return {};
    }
    case 2: {
      if (!cert.decomposition) throw StructureError("clause 2 certificate has no decomposition");
      if (!(cert.decomposition->host == g)) return fail("td:host", "decomposition is not of the graph");
      TdVerdict v;
      try {
        v = validate(*cert.decomposition);
      } catch (const DecompositionError& e) {
        return fail("td:structure", e.what());
      }
      if (!v.valid) return fail("td:" + std::to_string(v.condition), v.message);
      int wd = width(*cert.decomposition);
      if (wd > cert.width_bound) {
        return fail("td:width", "width " + std::to_string(wd) + " exceeds bound " + std::to_string(cert.width_bound));
      }
      return {};
    }
    case 3: {
      if (!cert.wall || !cert.division) throw StructureError("clause 3 certificate needs a wall and a division");
      int an = apex_number(h_graph).number;
      if (static_cast<int>(cert.apices.size()) > an - 1) {
        return fail("apex:size", std::to_string(cert.apices.size()) + " apices, an(H) - 1 = " + std::to_string(an - 1));
      }
      for (Vertex v : cert.apices) {
        if (!g.has_vertex(v)) return fail("apex:membership", "apex " + std::to_string(v) + " is not in the graph");
      }
      Graph rest = remove_vertices(g, cert.apices);
      SubdividedWall w = *cert.wall;
      w.host = rest;
      if (cert.wall->height != k) {
        return fail("wall:height", "wall height " + std::to_string(cert.wall->height) + ", expected " + std::to_string(k));
      }
      auto wv = validate_wall(w);
      if (!wv.valid) return fail("wall:valid", wv.message);
      Compass c;
      try {
        c = compass(rest, w);
      } catch (const WallError& e) {
        return fail("wall:compass", e.what());
      }
      auto flat = is_flat(c);
      if (flat.verdict != Flatness::Flat) return fail("wall:flat", "compass has crossing corner paths");
      if (!(cert.division->compass.graph == c.graph)) return fail("rural:compass", "division is not of the compass");
      RuralVerdict rv;
      try {
        RuralDivision rd{c, cert.division->flaps};
        rv = validate_rural(rd);
      } catch (const RuralError& e) {
        return fail("rural:structure", e.what());
      }
      if (!rv.valid) return fail("rural:" + std::to_string(rv.property), rv.message);
      for (const auto& flap : internal_flaps(RuralDivision{c, cert.division->flaps})) {
        int t = treewidth(flap);
        if (t > cert.flap_bound) {
          return fail("flap:treewidth",
                      "internal flap of treewidth " + std::to_string(t) + " exceeds " + std::to_string(cert.flap_bound));
        }
      }
      return {};
    }
    default:
      throw StructureError("certificate clause must be 1, 2 or 3");
  }
}

}  // namespace flatwall
