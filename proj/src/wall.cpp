#include "flatwall/wall.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "flatwall/planarity.hpp"
#include "search_clock.hpp"

namespace flatwall {
namespace {

std::map<Edge, std::size_t> edge_indices(const Wall& w) {
  std::map<Edge, std::size_t> out;
  auto es = w.edges();
  for (std::size_t i = 0; i < es.size(); ++i) out[es[i]] = i;
  return out;
}

// Host path for wall edge {a, b}, oriented from the image of a.
std::vector<Vertex> oriented(const SubdividedWall& w, const std::map<Edge, std::size_t>& idx, Vertex a, Vertex b) {
  auto it = idx.find(Edge(a, b));
  if (it == idx.end()) throw WallError("no wall edge " + describe(Edge(a, b)));
  auto path = w.branch_paths[it->second];
  if (a > b) std::reverse(path.begin(), path.end());
  return path;
}

// Walks a closed sequence of wall vertices through the branch paths.
std::vector<Vertex> trace_cycle(const SubdividedWall& w, const std::map<Edge, std::size_t>& idx,
                                const std::vector<Vertex>& cycle) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    auto path = oriented(w, idx, cycle[i], cycle[(i + 1) % cycle.size()]);
    out.insert(out.end(), path.begin(), path.end() - 1);
  }
  return out;
}

// Wall over `local` whose vertices sit on the wall vertices `image` of w.
SubdividedWall compose(const SubdividedWall& w, const Wall& parent, const Wall& local,
                       const std::vector<Vertex>& image) {
  auto idx = edge_indices(parent);
  SubdividedWall out;
  out.host = w.host;
  out.height = local.height;
  for (Vertex u : local.graph().vertices()) out.original.push_back(w.original[image[u]]);
  for (const auto& e : local.edges()) out.branch_paths.push_back(oriented(w, idx, image[e.u], image[e.v]));
  return out;
}

std::vector<Vertex> tree_path(const Graph& tree, Vertex from, Vertex to) {
  return *shortest_path(tree, from, {to}, tree.vertex_set());
}

}  // namespace

std::array<Vertex, 4> SubdividedWall::corners() const {
  Wall base = wall(height);
  std::array<Vertex, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) out[i] = original.at(base.corners[i]);
  return out;
}

VertexSet SubdividedWall::vertices() const {
  VertexSet out(original.begin(), original.end());
  for (const auto& p : branch_paths) out.insert(p.begin(), p.end());
  return out;
}

SubdividedWall plain_wall(int k) {
  Wall base = wall(k);
  SubdividedWall out;
  out.host = base.graph();
  out.height = k;
  out.original = base.graph().vertices();
  for (const auto& e : base.edges()) out.branch_paths.push_back({e.u, e.v});
  return out;
}

WallVerdict validate_wall(const SubdividedWall& w) {
  if (w.height < 1) return {false, "wall height must be at least 1"};
  Wall base = wall(w.height);
  if (w.original.size() != base.graph().num_vertices()) return {false, "original vertex map has the wrong size"};
  auto es = base.edges();
  if (w.branch_paths.size() != es.size()) return {false, "branch path list has the wrong size"};
  VertexSet originals;
  for (Vertex v : w.original) {
    if (!w.host.has_vertex(v)) return {false, "original vertex " + std::to_string(v) + " not in host"};
    if (!originals.insert(v).second) return {false, "original vertex " + std::to_string(v) + " used twice"};
  }
  VertexSet interior;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const auto& p = w.branch_paths[i];
    std::string name = "path for wall edge " + describe(es[i]);
    if (p.size() < 2 || p.front() != w.original[es[i].u] || p.back() != w.original[es[i].v]) {
      return {false, name + " does not join the images of its ends"};
    }
    for (std::size_t j = 0; j + 1 < p.size(); ++j) {
      if (!w.host.has_edge(p[j], p[j + 1])) return {false, name + " uses non-edge " + describe(Edge(p[j], p[j + 1]))};
    }
    for (std::size_t j = 1; j + 1 < p.size(); ++j) {
      if (originals.count(p[j]) || !interior.insert(p[j]).second) {
        return {false, name + " meets another path at " + std::to_string(p[j])};
      }
    }
  }
  return {};
}

Graph wall_subgraph(const SubdividedWall& w) {
  std::vector<Edge> edges;
  for (const auto& p : w.branch_paths) {
    for (std::size_t j = 0; j + 1 < p.size(); ++j) edges.emplace_back(p[j], p[j + 1]);
  }
  auto vs = w.vertices();
  return Graph(std::vector<Vertex>(vs.begin(), vs.end()), edges);
}

std::vector<Vertex> perimeter(const SubdividedWall& w) {
  Wall base = wall(w.height);
  return trace_cycle(w, edge_indices(base), base.perimeter());
}

std::vector<std::vector<Vertex>> layers(const SubdividedWall& w) {
  std::vector<std::vector<Vertex>> out{perimeter(w)};
  for (int i = 2; i <= w.height / 2; ++i) out.push_back(perimeter(subwall(w, w.height - 2 * (i - 1), 2 * i - 1, i)));
  return out;
}

Bricks bricks(const SubdividedWall& w) {
  Wall base = wall(w.height);
  auto idx = edge_indices(base);
  const auto& g = base.grid;
  Bricks out;
  std::vector<std::set<Edge>> brick_edges;
  for (int y = 1; y <= w.height; ++y) {
    for (int x = 1; x + 2 <= 2 * w.height + 2; ++x) {
      if ((x + y) % 2 != 0) continue;
      std::vector<Coord> cs{{x, y}, {x + 1, y}, {x + 2, y}, {x + 2, y + 1}, {x + 1, y + 1}, {x, y + 1}};
      if (!std::all_of(cs.begin(), cs.end(), [&](const Coord& c) { return g.has(c.first, c.second); })) continue;
      std::vector<Vertex> cycle;
      for (const auto& c : cs) cycle.push_back(g.at(c.first, c.second));
      std::set<Edge> es;
      for (std::size_t i = 0; i < cycle.size(); ++i) es.insert(Edge(cycle[i], cycle[(i + 1) % cycle.size()]));
      out.cycles.push_back(trace_cycle(w, idx, cycle));
      brick_edges.push_back(std::move(es));
    }
  }
  for (std::size_t a = 0; a < brick_edges.size(); ++a) {
    for (std::size_t b = a + 1; b < brick_edges.size(); ++b) {
      bool share = std::any_of(brick_edges[a].begin(), brick_edges[a].end(),
                               [&](const Edge& e) { return brick_edges[b].count(e) != 0; });
      if (share) out.neighbours.emplace_back(a, b);
    }
  }
  return out;
}

Compass compass(const Graph& g, const SubdividedWall& w) {
  if (!is_subgraph(wall_subgraph(w), g)) throw WallError("wall does not live in the graph");
  auto per = perimeter(w);
  VertexSet p(per.begin(), per.end());
  VertexSet inner;
  for (Vertex v : w.vertices()) {
    if (!p.count(v)) inner.insert(v);
  }
  VertexSet keep = p;
  if (!inner.empty()) {
    for (const auto& comp : connected_components(remove_vertices(g, p))) {
      if (!comp.count(*inner.begin())) continue;
      for (Vertex v : inner) {
        if (!comp.count(v)) throw WallError("wall interior is split across components of G minus the perimeter");
      }
      keep.insert(comp.begin(), comp.end());
    }
  }
  Compass out{w, induced_subgraph(g, keep)};
  out.wall.host = out.graph;
  return out;
}

bool compass_disk_embeddable(const Compass& c) {
  Vertex hub = c.graph.fresh_vertex();
  std::vector<Edge> spokes;
  for (Vertex v : perimeter(c.wall)) spokes.emplace_back(v, hub);
  return is_planar(add_edges(add_vertices(c.graph, {hub}), spokes));
}

namespace {

class FlatSearch {
 public:
  FlatSearch(const Graph& g, std::array<Vertex, 4> corners, std::chrono::milliseconds budget)
      : g_(g), clock_(budget), used_(g.num_vertices(), 0) {
    for (std::size_t i = 0; i < 4; ++i) c_[i] = g.index_of(corners[i]);
    for (Vertex v : g.vertices()) {
      std::vector<std::size_t> nb;
      for (Vertex w : g.neighbors(v)) nb.push_back(g.index_of(w));
      adj_.push_back(std::move(nb));
    }
  }

  FlatnessResult run() {
    FlatnessResult out;
    used_[c_[0]] = 1;
    path_.push_back(c_[0]);
    bool found = false;
    try {
      found = extend();
      out.verdict = found ? Flatness::NotFlat : Flatness::Flat;
    } catch (const BudgetExceeded&) {
      out.verdict = Flatness::Unknown;
    }
    if (found) {
      for (std::size_t i : path_) out.path13.push_back(g_.vertices()[i]);
      for (std::size_t i : other_) out.path24.push_back(g_.vertices()[i]);
    }
    out.transcript_hash = hash_;
    out.nodes = nodes_;
    return out;
  }

 private:
  void record(std::size_t v) {
    // FNV-1a over the visit sequence.
    for (int s = 0; s < 64; s += 8) {
      hash_ ^= (static_cast<std::uint64_t>(v) >> s) & 0xff;
      hash_ *= 0x100000001b3ULL;
    }
  }

  // BFS from `from` to `to` avoiding used vertices and `skip`; fills `route`.
  bool reach(std::size_t from, std::size_t to, std::size_t skip_a, std::size_t skip_b,
             std::vector<std::size_t>* route) const {
    std::vector<std::size_t> parent(adj_.size(), adj_.size());
    std::deque<std::size_t> q{from};
    parent[from] = from;
    while (!q.empty()) {
      std::size_t v = q.front();
      q.pop_front();
      if (v == to) {
        if (route) {
          route->clear();
          for (std::size_t x = to; x != from; x = parent[x]) route->push_back(x);
          route->push_back(from);
          std::reverse(route->begin(), route->end());
        }
        return true;
      }
      for (std::size_t w : adj_[v]) {
        if (parent[w] != adj_.size() || used_[w] || w == skip_a || w == skip_b) continue;
        parent[w] = v;
        q.push_back(w);
      }
    }
    return false;
  }

  bool extend() {
    ++nodes_;
    clock_.tick();
    std::size_t tip = path_.back();
    record(tip);
    if (tip == c_[2]) return reach(c_[1], c_[3], adj_.size(), adj_.size(), &other_);
    for (std::size_t w : adj_[tip]) {
      if (used_[w] || w == c_[1] || w == c_[3]) continue;
      used_[w] = 1;
      path_.push_back(w);
      bool viable = (w == c_[2] || reach(w, c_[2], c_[1], c_[3], nullptr)) &&
                    reach(c_[1], c_[3], adj_.size(), adj_.size(), nullptr);
      if (viable && extend()) return true;
      path_.pop_back();
      used_[w] = 0;
    }
    return false;
  }

  const Graph& g_;
  detail::SearchClock clock_;
  std::array<std::size_t, 4> c_{};
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<char> used_;
  std::vector<std::size_t> path_;
  std::vector<std::size_t> other_;
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
  std::uint64_t nodes_ = 0;
};

}  // namespace

FlatnessResult is_flat(const Compass& c, std::chrono::milliseconds budget) {
  return FlatSearch(c.graph, c.wall.corners(), budget).run();
}

bool valid_flatness_witness(const Compass& c, const std::vector<Vertex>& path13, const std::vector<Vertex>& path24) {
  auto cs = c.wall.corners();
  VertexSet seen;
  auto check = [&](const std::vector<Vertex>& p, Vertex from, Vertex to) {
    if (p.empty() || p.front() != from || p.back() != to) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!c.graph.has_vertex(p[i]) || !seen.insert(p[i]).second) return false;
      if (i + 1 < p.size() && !c.graph.has_edge(p[i], p[i + 1])) return false;
    }
    return true;
  };
  return check(path13, cs[0], cs[2]) && check(path24, cs[1], cs[3]);
}

SubdividedWall subwall(const SubdividedWall& w, int sub_height, int x0, int y0) {
  if (sub_height < 1) throw WallError("subwall height must be at least 1");
  Wall parent = wall(w.height);
  Wall local = wall(sub_height);
  const bool flip = (x0 + y0) % 2 != 0;
  std::vector<Vertex> image(local.graph().num_vertices());
  for (const auto& [u, c] : local.grid.coords) {
    int lx = flip ? 2 * sub_height + 3 - c.first : c.first;
    int x = x0 - 1 + lx;
    int y = y0 - 1 + c.second;
    if (!parent.grid.has(x, y)) {
      throw WallError("window (" + std::to_string(x0) + "," + std::to_string(y0) + ") of height " +
                      std::to_string(sub_height) + " leaves the wall");
    }
    image[u] = parent.grid.at(x, y);
  }
  return compose(w, parent, local, image);
}

std::vector<SubwallWindow> disjoint_subwall_windows(const SubdividedWall& w, int count, int sub_height,
                                                    const VertexSet& avoid) {
  if (count < 0) throw WallError("negative subwall count");
  std::vector<SubwallWindow> out;
  VertexSet taken = avoid;
  for (int y0 = 1; y0 + sub_height <= w.height + 1 && static_cast<int>(out.size()) < count; ++y0) {
    for (int x0 = 1; x0 + 2 * sub_height + 1 <= 2 * w.height + 2 && static_cast<int>(out.size()) < count; ++x0) {
      SubdividedWall sub;
      try {
        sub = subwall(w, sub_height, x0, y0);
      } catch (const WallError&) {
        continue;
      }
      auto vs = sub.vertices();
      if (std::any_of(vs.begin(), vs.end(), [&](Vertex v) { return taken.count(v) != 0; })) continue;
      taken.insert(vs.begin(), vs.end());
      out.push_back({x0, y0, std::move(sub)});
    }
  }
  if (static_cast<int>(out.size()) < count) {
    throw WallError("only " + std::to_string(out.size()) + " disjoint subwalls of height " +
                    std::to_string(sub_height) + " fit, " + std::to_string(count) + " requested");
  }
  return out;
}

std::vector<SubdividedWall> disjoint_subwalls(const SubdividedWall& w, int count, int sub_height,
                                              const VertexSet& avoid) {
  std::vector<SubdividedWall> out;
  for (auto& win : disjoint_subwall_windows(w, count, sub_height, avoid)) out.push_back(std::move(win.wall));
  return out;
}

SubdividedWall extract_wall_from_gamma_contraction(const Graph& g, const SmoothContractionWitness& witness, int k) {
  if (k < 1) throw WallError("wall height must be at least 1");
  const int n = 2 * k + 8;
  Gamma gm = gamma(n);
  if (!(witness.model.pattern == gm.grid.graph)) throw ModelError("witness pattern is not the expected gamma graph");
  if (witness.v != gm.loaded) throw ModelError("witness v is not the loaded corner");
  if (!(witness.model.host == g)) throw ModelError("witness host differs from the graph");
  auto verdict = verify_smooth_contraction(witness);
  if (!verdict.valid) throw ModelError("invalid smooth contraction: " + verdict.message);

  std::map<Vertex, VertexSet> branch;
  for (const auto& [x, p] : witness.model.phi) branch[p].insert(x);

  Wall base = wall(k);
  auto es = base.edges();
  // Try interior placements of W_k inside the triangulated grid until the
  // lifted wall's compass sits in a disk.
  for (int oy = 2; oy + k + 1 <= n - 1; ++oy) {
    for (int ox = 2; ox + 2 * k + 2 <= n - 1; ++ox) {
      auto image = [&](Vertex u) {
        const auto& c = base.grid.coords.at(u);
        return gm.grid.at(c.first + ox - 1, c.second + oy - 1);
      };
      // Host edge realising each wall edge; the smallest such pair.
      std::vector<std::pair<Vertex, Vertex>> links;
      std::map<Vertex, std::vector<Vertex>> terminals;
      for (const auto& e : es) {
        const auto& a = branch.at(image(e.u));
        const auto& b = branch.at(image(e.v));
        std::optional<std::pair<Vertex, Vertex>> link;
        for (Vertex s : a) {
          for (Vertex t : g.neighbors(s)) {
            if (b.count(t)) {
              link = std::make_pair(s, t);
              break;
            }
          }
          if (link) break;
        }
        if (!link) throw ModelError("no host edge realises pattern edge " + describe(Edge(image(e.u), image(e.v))));
        links.push_back(*link);
        terminals[e.u].push_back(link->first);
        terminals[e.v].push_back(link->second);
      }
      // Inside each branch set, join the terminals by a tree; its branching
      // point becomes the original vertex.
      SubdividedWall sw;
      sw.host = g;
      sw.height = k;
      std::map<Vertex, Graph> trees;
      for (Vertex u : base.graph().vertices()) {
        const auto& ts = terminals.at(u);
        const auto& b = branch.at(image(u));
        auto p12 = *shortest_path(g, ts[0], {ts[1]}, b);
        std::vector<Edge> tree_edges;
        for (std::size_t i = 0; i + 1 < p12.size(); ++i) tree_edges.emplace_back(p12[i], p12[i + 1]);
        VertexSet tree_vs(p12.begin(), p12.end());
        Vertex centre = ts[0];
        if (ts.size() == 3) {
          auto p3 = *shortest_path(g, ts[2], tree_vs, b);
          for (std::size_t i = 0; i + 1 < p3.size(); ++i) tree_edges.emplace_back(p3[i], p3[i + 1]);
          tree_vs.insert(p3.begin(), p3.end());
          centre = p3.back();
        }
        sw.original.push_back(centre);
        trees[u] = Graph(std::vector<Vertex>(tree_vs.begin(), tree_vs.end()), tree_edges);
      }
      for (std::size_t i = 0; i < es.size(); ++i) {
        auto left = tree_path(trees.at(es[i].u), sw.original[es[i].u], links[i].first);
        auto right = tree_path(trees.at(es[i].v), links[i].second, sw.original[es[i].v]);
        left.insert(left.end(), right.begin(), right.end());
        sw.branch_paths.push_back(std::move(left));
      }
      if (!validate_wall(sw).valid) continue;
      try {
        if (compass_disk_embeddable(compass(g, sw))) return sw;
      } catch (const WallError&) {
      }
    }
  }
  throw WallError("no lifted wall has a disk-embedded compass");
}

SubdividedWall refind_after_transform(const Compass& c, const std::vector<TransformOp>& ops) {
  SubdividedWall w = c.wall;
  Graph cur = c.graph;
  auto is_wall_edge = [&](Vertex a, Vertex b) {
    for (const auto& p : w.branch_paths) {
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (Edge(p[i], p[i + 1]) == Edge(a, b)) return true;
      }
    }
    return false;
  };
  auto wall_degree = [&](Vertex x) {
    int d = 0;
    for (const auto& p : w.branch_paths) {
      for (std::size_t i = 0; i + 1 < p.size(); ++i) d += (p[i] == x) + (p[i + 1] == x);
    }
    return d;
  };
  auto insert_between = [&](Vertex a, Vertex b, Vertex s) {
    for (auto& p : w.branch_paths) {
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (Edge(p[i], p[i + 1]) == Edge(a, b)) {
          p.insert(p.begin() + static_cast<std::ptrdiff_t>(i) + 1, s);
          break;
        }
      }
    }
  };

  for (const auto& op : ops) {
    if (op.kind == TransformOp::Kind::Subdivide) {
      if (!cur.has_edge(op.edge)) throw WallError("cannot subdivide non-edge " + describe(op.edge));
      auto res = subdivide(cur, op.edge);
      insert_between(op.edge.u, op.edge.v, res.vertex);
      cur = std::move(res.graph);
      continue;
    }
    auto [x, y, z] = op.triangle;
    if (x == y || y == z || x == z || !cur.has_edge(x, y) || !cur.has_edge(y, z) || !cur.has_edge(x, z)) {
      throw WallError("delta-Y target {" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) +
                      "} is not a triangle");
    }
    std::vector<Edge> on_wall;
    for (const auto& e : {Edge(x, y), Edge(y, z), Edge(x, z)}) {
      if (is_wall_edge(e.u, e.v)) on_wall.push_back(e);
    }
    auto res = delta_y(cur, x, y, z);
    Vertex hub = res.hub;
    if (on_wall.size() == 1) {
      insert_between(on_wall[0].u, on_wall[0].v, hub);
    } else if (on_wall.size() == 2) {
      Vertex shared = on_wall[0].contains(on_wall[1].u) ? on_wall[1].u : on_wall[1].v;
      Vertex a = on_wall[0].other(shared);
      Vertex b = on_wall[1].other(shared);
      if (wall_degree(shared) == 2) {
        for (auto& p : w.branch_paths) std::replace(p.begin(), p.end(), shared, hub);
        std::replace(w.original.begin(), w.original.end(), shared, hub);
      } else {
        // Branch vertex of degree 3: the hub takes its place and the third
        // path is extended through the old vertex.
        std::replace(w.original.begin(), w.original.end(), shared, hub);
        for (auto& p : w.branch_paths) {
          if (p.front() == shared) {
            if (p[1] == a || p[1] == b) {
              p.front() = hub;
            } else {
              p.insert(p.begin(), hub);
            }
          } else if (p.back() == shared) {
            if (p[p.size() - 2] == a || p[p.size() - 2] == b) {
              p.back() = hub;
            } else {
              p.push_back(hub);
            }
          }
        }
      }
    } else if (on_wall.size() == 3) {
      throw WallError("wall contains a triangle");
    }
    cur = std::move(res.graph);
  }
  w.host = cur;
  auto verdict = validate_wall(w);
  if (!verdict.valid) throw WallError("tracked wall is invalid: " + verdict.message);
  return w;
}

}  // namespace flatwall
