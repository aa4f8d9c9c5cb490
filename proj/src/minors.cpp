#include "flatwall/minors.hpp"

#include <deque>
#include <numeric>

#include "dense.hpp"
#include "search_clock.hpp"

namespace flatwall {
namespace {

using detail::bit;
using detail::DenseGraph;
using detail::Mask;

ModelVerdict reject(int condition, std::string message, std::vector<Vertex> witness = {}) {
  return {false, condition, std::move(message), std::move(witness)};
}

// Pattern placement order: first the highest degree vertex, then always a
// vertex with a placed neighbour if one exists, again by degree.
std::vector<std::size_t> placement_order(const DenseGraph& p) {
  std::vector<std::size_t> order;
  Mask placed = 0;
  while (order.size() < p.n) {
    std::size_t best = p.n;
    auto key = [&](std::size_t v) {
      return std::make_tuple((p.adj[v] & placed) != 0, std::popcount(p.adj[v]), std::popcount(p.adj[v] & placed));
    };
    for (std::size_t v = 0; v < p.n; ++v) {
      if (placed & bit(v)) continue;
      if (best == p.n || key(v) > key(best)) best = v;
    }
    order.push_back(best);
    placed |= bit(best);
  }
  return order;
}

class MinorSearch {
 public:
  MinorSearch(const Graph& host, const Graph& pattern, const SearchLimits& limits)
      : host_(host), pattern_(pattern), clock_(limits.budget) {
    order_ = placement_order(pattern_);
    branch_.assign(pattern_.n, 0);
    twin_before_.assign(pattern_.n, pattern_.n);
    // Twins (equal neighbourhoods apart from each other) are interchangeable,
    // so their branch-set roots may be forced into increasing order.
    for (std::size_t i = 0; i < order_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        std::size_t a = order_[i];
        std::size_t b = order_[j];
        if ((pattern_.adj[a] & ~bit(b)) == (pattern_.adj[b] & ~bit(a))) twin_before_[a] = b;
      }
    }
  }

  std::optional<std::vector<Mask>> run() {
    const std::size_t p = pattern_.n;
    const std::size_t n = host_.n;
    if (p == 0) return std::vector<Mask>{};
    if (p > n) return std::nullopt;
    std::size_t pattern_edges = 0;
    for (auto m : pattern_.adj) pattern_edges += static_cast<std::size_t>(std::popcount(m));
    std::size_t host_edges = 0;
    for (auto m : host_.adj) host_edges += static_cast<std::size_t>(std::popcount(m));
    if (pattern_edges > host_edges) return std::nullopt;
    for (total_cap_ = p; total_cap_ <= n; ++total_cap_) {
      if (place(0, 0, 0)) return branch_;
      if (!exceeded_) break;  // the bound never bit; the search was exhaustive
      exceeded_ = false;
    }
    return std::nullopt;
  }

 private:
  bool place(std::size_t idx, Mask used, std::size_t total) {
    if (idx == order_.size()) return true;
    clock_.tick();
    std::size_t u = order_[idx];
    std::size_t remaining_after = order_.size() - idx - 1;
    if (total + remaining_after + 1 > total_cap_) {
      exceeded_ = true;
      return false;
    }
    std::size_t size_cap = total_cap_ - total - remaining_after;
    std::size_t min_root = 0;
    if (twin_before_[u] != pattern_.n) {
      min_root = static_cast<std::size_t>(std::countr_zero(branch_[twin_before_[u]])) + 1;
    }
    Mask placed_nb = 0;
    for (std::size_t j = 0; j < idx; ++j) {
      if (pattern_.adj[u] & bit(order_[j])) placed_nb |= bit(order_[j]);
    }
    Mask free = host_.all() & ~used;
    for (std::size_t r = min_root; r < host_.n; ++r) {
      if (!(free & bit(r))) continue;
      // Candidate vertices: free and larger than the root.
      Mask allowed = free & ~(bit(r + 1) - 1);
      if (grow(idx, u, used, total, bit(r), host_.adj[r] & allowed, allowed, size_cap, placed_nb, r)) return true;
    }
    return false;
  }

  // ESU-style enumeration of connected sets with minimum vertex `root`.
  bool grow(std::size_t idx, std::size_t u, Mask used, std::size_t total, Mask set, Mask ext, Mask allowed,
            std::size_t size_cap, Mask placed_nb, std::size_t root) {
    if (try_set(idx, u, used, total, set, placed_nb)) return true;
    if (static_cast<std::size_t>(std::popcount(set)) >= size_cap) {
      if (ext) exceeded_ = true;
      return false;
    }
    Mask closed = set | host_.neighbors_of(set);
    while (ext) {
      std::size_t w = static_cast<std::size_t>(std::countr_zero(ext));
      ext &= ext - 1;
      Mask exclusive = host_.adj[w] & allowed & ~closed;
      if (grow(idx, u, used, total, set | bit(w), ext | exclusive, allowed, size_cap, placed_nb, root)) return true;
    }
    (void)root;
    return false;
  }

  bool try_set(std::size_t idx, std::size_t u, Mask used, std::size_t total, Mask set, Mask placed_nb) {
    Mask nb = host_.neighbors_of(set);
    for (Mask m = placed_nb; m; m &= m - 1) {
      if (!(nb & branch_[static_cast<std::size_t>(std::countr_zero(m))])) return false;
    }
    Mask new_used = used | set;
    branch_[u] = set;
    if (feasible(idx + 1, new_used) &&
        place(idx + 1, new_used, total + static_cast<std::size_t>(std::popcount(set)))) {
      return true;
    }
    branch_[u] = 0;
    return false;
  }

  // Every unplaced pattern vertex must be realisable by one component of
  // the free vertices touching all of its placed neighbours.
  bool feasible(std::size_t next_idx, Mask used) {
    Mask free = host_.all() & ~used;
    if (static_cast<std::size_t>(std::popcount(free)) < order_.size() - next_idx) return false;
    std::vector<Mask> comps;
    for (Mask rest = free; rest;) {
      Mask comp = rest & (~rest + 1);
      Mask fresh = comp;
      while (fresh) {
        fresh = host_.neighbors_of(fresh) & free & ~comp;
        comp |= fresh;
      }
      comps.push_back(comp);
      rest &= ~comp;
    }
    for (std::size_t i = next_idx; i < order_.size(); ++i) {
      std::size_t w = order_[i];
      Mask need = 0;
      for (std::size_t j = 0; j < next_idx; ++j) {
        if (pattern_.adj[w] & bit(order_[j])) need |= bit(order_[j]);
      }
      bool ok = false;
      for (Mask comp : comps) {
        Mask nb = host_.neighbors_of(comp);
        bool all = true;
        for (Mask m = need; m; m &= m - 1) {
          if (!(nb & branch_[static_cast<std::size_t>(std::countr_zero(m))])) {
            all = false;
            break;
          }
        }
        if (all) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  }

  DenseGraph host_;
  DenseGraph pattern_;
  detail::SearchClock clock_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> twin_before_;
  std::vector<Mask> branch_;
  std::size_t total_cap_ = 0;
  bool exceeded_ = false;
};

// Colour refinement over both graphs at once; returns the stable colours.
std::pair<std::vector<int>, std::vector<int>> refine_colours(const Graph& a, const Graph& b) {
  std::vector<int> ca(a.num_vertices()), cb(b.num_vertices());
  for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = static_cast<int>(a.degree(a.vertices()[i]));
  for (std::size_t i = 0; i < cb.size(); ++i) cb[i] = static_cast<int>(b.degree(b.vertices()[i]));
  for (;;) {
    std::map<std::pair<int, std::vector<int>>, int> palette;
    auto signature = [](const Graph& g, const std::vector<int>& col, std::size_t i) {
      std::vector<int> nb;
      for (Vertex w : g.neighbors(g.vertices()[i])) nb.push_back(col[g.index_of(w)]);
      std::sort(nb.begin(), nb.end());
      return std::make_pair(col[i], nb);
    };
    std::vector<std::pair<int, std::vector<int>>> sa, sb;
    for (std::size_t i = 0; i < ca.size(); ++i) sa.push_back(signature(a, ca, i));
    for (std::size_t i = 0; i < cb.size(); ++i) sb.push_back(signature(b, cb, i));
    for (const auto& s : sa) palette.emplace(s, 0);
    for (const auto& s : sb) palette.emplace(s, 0);
    int next = 0;
    for (auto& [key, value] : palette) value = next++;
    std::vector<int> na(ca.size()), nb(cb.size());
    for (std::size_t i = 0; i < ca.size(); ++i) na[i] = palette[sa[i]];
    for (std::size_t i = 0; i < cb.size(); ++i) nb[i] = palette[sb[i]];
    auto classes = [](const std::vector<int>& c) { return std::set<int>(c.begin(), c.end()).size(); };
    bool stable = classes(na) == classes(ca) && classes(nb) == classes(cb);
    ca = std::move(na);
    cb = std::move(nb);
    if (stable) break;
  }
  return {ca, cb};
}

}  // namespace

ModelVerdict verify_contraction(const ContractionModel& m) {
  for (Vertex v : m.host.vertices()) {
    auto it = m.phi.find(v);
    if (it == m.phi.end()) throw ModelError("phi is not defined on host vertex " + std::to_string(v));
    if (!m.pattern.has_vertex(it->second)) {
      throw ModelError("phi maps " + std::to_string(v) + " outside the pattern");
    }
  }
  std::map<Vertex, VertexSet> codomain;
  for (Vertex v : m.host.vertices()) codomain[m.phi.at(v)].insert(v);
  for (Vertex p : m.pattern.vertices()) {
    if (!codomain.count(p)) throw ModelError("phi is not surjective: nothing maps to " + std::to_string(p));
  }
  for (const auto& [p, set] : codomain) {
    if (!induces_connected(m.host, set)) {
      return reject(1, "model of " + std::to_string(p) + " does not induce a connected graph",
                    {set.begin(), set.end()});
    }
  }
  for (const auto& e : m.pattern.edges()) {
    VertexSet both = codomain[e.u];
    both.insert(codomain[e.v].begin(), codomain[e.v].end());
    if (!induces_connected(m.host, both)) {
      return reject(2, "models of pattern edge " + describe(e) + " are not joined", {e.u, e.v});
    }
  }
  for (const auto& e : m.host.edges()) {
    Vertex a = m.phi.at(e.u);
    Vertex b = m.phi.at(e.v);
    if (a != b && !m.pattern.has_edge(a, b)) {
      return reject(3, "host edge " + describe(e) + " maps to non-edge " + describe(Edge(a, b)), {e.u, e.v});
    }
  }
  return {};
}

ModelVerdict verify_minor(const MinorModel& m) {
  VertexSet seen;
  for (Vertex p : m.pattern.vertices()) {
    auto it = m.branch_sets.find(p);
    if (it == m.branch_sets.end() || it->second.empty()) {
      return reject(1, "pattern vertex " + std::to_string(p) + " has an empty branch set", {p});
    }
    for (Vertex v : it->second) {
      if (!m.host.has_vertex(v)) return reject(1, "branch set uses unknown host vertex " + std::to_string(v), {v});
      if (!seen.insert(v).second) return reject(1, "host vertex " + std::to_string(v) + " is in two branch sets", {v});
    }
  }
  for (const auto& [p, set] : m.branch_sets) {
    if (!m.pattern.has_vertex(p)) return reject(1, "branch set for unknown pattern vertex " + std::to_string(p), {p});
  }
  for (Vertex p : m.pattern.vertices()) {
    const auto& set = m.branch_sets.at(p);
    if (!induces_connected(m.host, set)) {
      return reject(2, "branch set of " + std::to_string(p) + " is not connected", {set.begin(), set.end()});
    }
  }
  for (const auto& e : m.pattern.edges()) {
    bool joined = false;
    for (Vertex a : m.branch_sets.at(e.u)) {
      for (Vertex b : m.host.neighbors(a)) {
        if (m.branch_sets.at(e.v).count(b)) {
          joined = true;
          break;
        }
      }
      if (joined) break;
    }
    if (!joined) return reject(3, "pattern edge " + describe(e) + " has no host edge", {e.u, e.v});
  }
  return {};
}

ContractionModel to_contraction(const MinorModel& m) {
  ContractionModel out;
  out.pattern = m.pattern;
  std::map<Vertex, Vertex> owner;
  for (const auto& [p, set] : m.branch_sets) {
    for (Vertex v : set) owner[v] = p;
  }
  std::vector<Edge> edges;
  for (const auto& e : m.host.edges()) {
    auto a = owner.find(e.u);
    auto b = owner.find(e.v);
    if (a == owner.end() || b == owner.end()) continue;
    if (a->second == b->second || m.pattern.has_edge(a->second, b->second)) edges.push_back(e);
  }
  std::vector<Vertex> vs;
  for (const auto& [v, p] : owner) vs.push_back(v);
  out.host = Graph(std::move(vs), edges);
  out.phi = std::move(owner);
  return out;
}

std::optional<MinorModel> find_minor(const Graph& host, const Graph& pattern, const SearchLimits& limits) {
  if (pattern.num_vertices() > limits.max_pattern) {
    throw CapExceeded("pattern has " + std::to_string(pattern.num_vertices()) + " vertices, cap is " +
                      std::to_string(limits.max_pattern));
  }
  if (host.num_vertices() > limits.max_host || host.num_vertices() > 64) {
    throw CapExceeded("host has " + std::to_string(host.num_vertices()) + " vertices, cap is " +
                      std::to_string(limits.max_host));
  }
  MinorSearch search(host, pattern, limits);
  auto found = search.run();
  if (!found) return std::nullopt;
  MinorModel model{host, pattern, {}};
  for (std::size_t i = 0; i < pattern.num_vertices(); ++i) {
    VertexSet set;
    detail::for_each_bit((*found)[i], [&](std::size_t j) { set.insert(host.vertices()[j]); });
    model.branch_sets[pattern.vertices()[i]] = std::move(set);
  }
  return model;
}

DeltaYResult delta_y(const Graph& g, Vertex x, Vertex y, Vertex z) {
  if (!g.has_edge(x, y) || !g.has_edge(y, z) || !g.has_edge(x, z) || x == y || y == z || x == z) {
    throw GraphError("{" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) +
                     "} is not a triangle");
  }
  Vertex w = g.fresh_vertex();
  Graph removed = remove_edges(g, {Edge(x, y), Edge(y, z), Edge(x, z)});
  Graph grown = add_vertices(removed, {w});
  return {add_edges(grown, {Edge(x, w), Edge(y, w), Edge(z, w)}), w};
}

SubdivideResult subdivide(const Graph& g, const Edge& e) {
  if (!g.has_edge(e)) throw GraphError("cannot subdivide missing edge " + describe(e));
  Vertex s = g.fresh_vertex();
  Graph g2 = add_vertices(remove_edges(g, {e}), {s});
  return {add_edges(g2, {Edge(e.u, s), Edge(s, e.v)}), s};
}

Graph dissolve(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v));
  if (g.degree(v) != 2) throw GraphError("vertex " + std::to_string(v) + " does not have degree 2");
  auto nb = g.neighbors(v);
  if (g.has_edge(nb[0], nb[1])) {
    throw GraphError("dissolving " + std::to_string(v) + " would create a multiple edge");
  }
  Edge joined(nb[0], nb[1]);
  return add_edges(remove_vertices(g, {v}), {joined});
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  auto [ca, cb] = refine_colours(a, b);
  {
    auto sa = ca;
    auto sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  const std::size_t n = a.num_vertices();
  // Map a's vertices in BFS order so each new vertex has mapped neighbours.
  std::vector<std::size_t> order;
  std::vector<char> queued(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (queued[s]) continue;
    std::deque<std::size_t> q{s};
    queued[s] = 1;
    while (!q.empty()) {
      std::size_t i = q.front();
      q.pop_front();
      order.push_back(i);
      for (Vertex w : a.neighbors(a.vertices()[i])) {
        std::size_t j = a.index_of(w);
        if (!queued[j]) {
          queued[j] = 1;
          q.push_back(j);
        }
      }
    }
  }
  std::vector<long> map(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
    if (k == n) return true;
    std::size_t i = order[k];
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || cb[j] != ca[i]) continue;
      bool ok = true;
      for (std::size_t t = 0; t < k && ok; ++t) {
        std::size_t pi = order[t];
        bool ea = a.has_edge(a.vertices()[i], a.vertices()[pi]);
        bool eb = b.has_edge(b.vertices()[j], b.vertices()[static_cast<std::size_t>(map[pi])]);
        ok = ea == eb;
      }
      if (!ok) continue;
      map[i] = static_cast<long>(j);
      used[j] = 1;
      if (extend(k + 1)) return true;
      used[j] = 0;
      map[i] = -1;
    }
    return false;
  };
  return extend(0);
}

bool is_subdivision_of(const Graph& sub, const Graph& base) {
  // Each subdivision adds exactly one vertex and one edge.
  long ds = static_cast<long>(sub.num_edges()) - static_cast<long>(sub.num_vertices());
  long db = static_cast<long>(base.num_edges()) - static_cast<long>(base.num_vertices());
  if (ds != db || sub.num_vertices() < base.num_vertices()) return false;
  {
    std::vector<std::size_t> a, b;
    for (Vertex v : sub.vertices()) {
      if (sub.degree(v) != 2) a.push_back(sub.degree(v));
    }
    for (Vertex v : base.vertices()) {
      if (base.degree(v) != 2) b.push_back(base.degree(v));
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  // Base vertices in BFS order, remembering the tree parent.
  std::vector<Vertex> order;
  std::map<Vertex, std::optional<Vertex>> parent;
  for (Vertex s : base.vertices()) {
    if (parent.count(s)) continue;
    parent[s] = std::nullopt;
    std::deque<Vertex> q{s};
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop_front();
      order.push_back(v);
      for (Vertex w : base.neighbors(v)) {
        if (!parent.count(w)) {
          parent[w] = v;
          q.push_back(w);
        }
      }
    }
  }
  std::map<Vertex, Vertex> image;  // base -> sub
  std::set<Vertex> taken;          // sub vertices used as branch or interior
  std::set<Edge> used_edges;

  // Walks from `start` along unused edge to `first`, through free degree-2
  // vertices; returns the walk (excluding start) up to the first vertex that
  // is not a free degree-2 vertex.
  auto walk = [&](Vertex start, Vertex first) {
    std::vector<Vertex> out{first};
    Vertex prev = start;
    Vertex cur = first;
    while (!taken.count(cur) && sub.degree(cur) == 2) {
      auto nb = sub.neighbors(cur);
      Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
      out.push_back(cur);
      if (out.size() > sub.num_vertices()) break;
    }
    return out;
  };

  std::function<bool(std::size_t)> extend;

  // Realise the remaining base edges from b to already-mapped vertices,
  // then continue with the next base vertex.
  std::function<bool(std::size_t, Vertex, std::vector<Vertex>)> close_edges =
      [&](std::size_t k, Vertex b, std::vector<Vertex> pending) -> bool {
    if (pending.empty()) return extend(k + 1);
    Vertex c = pending.back();
    pending.pop_back();
    Vertex sb = image.at(b);
    Vertex sc = image.at(c);
    for (Vertex first : sub.neighbors(sb)) {
      if (used_edges.count(Edge(sb, first))) continue;
      auto path = walk(sb, first);
      if (path.back() != sc) continue;
      std::vector<Edge> edges;
      Vertex prev = sb;
      for (Vertex x : path) {
        edges.emplace_back(prev, x);
        prev = x;
      }
      bool clash = false;
      for (const auto& e : edges) clash = clash || used_edges.count(e);
      if (clash) continue;
      for (const auto& e : edges) used_edges.insert(e);
      for (std::size_t i = 0; i + 1 < path.size(); ++i) taken.insert(path[i]);
      if (close_edges(k, b, pending)) return true;
      for (std::size_t i = 0; i + 1 < path.size(); ++i) taken.erase(path[i]);
      for (const auto& e : edges) used_edges.erase(e);
    }
    return false;
  };

  auto pending_for = [&](Vertex b) {
    std::vector<Vertex> pending;
    for (Vertex c : base.neighbors(b)) {
      if (image.count(c) && parent.at(b) != c) pending.push_back(c);
    }
    return pending;
  };

  extend = [&](std::size_t k) -> bool {
    if (k == order.size()) return taken.size() == sub.num_vertices() && used_edges.size() == sub.num_edges();
    Vertex b = order[k];
    auto par = parent.at(b);
    if (!par) {
      for (Vertex s : sub.vertices()) {
        if (taken.count(s) || sub.degree(s) != base.degree(b)) continue;
        image[b] = s;
        taken.insert(s);
        if (close_edges(k, b, pending_for(b))) return true;
        taken.erase(s);
        image.erase(b);
      }
      return false;
    }
    Vertex sp = image.at(*par);
    for (Vertex first : sub.neighbors(sp)) {
      if (used_edges.count(Edge(sp, first)) || taken.count(first)) continue;
      // Candidate images: positions along the chain leaving sp through first.
      std::vector<Vertex> chain{first};
      Vertex prev = sp;
      Vertex cur = first;
      while (sub.degree(cur) == 2) {
        auto nb = sub.neighbors(cur);
        Vertex next = nb[0] == prev ? nb[1] : nb[0];
        if (taken.count(next)) break;
        prev = cur;
        cur = next;
        chain.push_back(cur);
      }
      for (std::size_t pos = 0; pos < chain.size(); ++pos) {
        Vertex cand = chain[pos];
        if (sub.degree(cand) != base.degree(b)) continue;
        std::vector<Edge> edges;
        Vertex pv = sp;
        for (std::size_t i = 0; i <= pos; ++i) {
          edges.emplace_back(pv, chain[i]);
          pv = chain[i];
        }
        for (const auto& e : edges) used_edges.insert(e);
        for (std::size_t i = 0; i <= pos; ++i) taken.insert(chain[i]);
        image[b] = cand;
        if (close_edges(k, b, pending_for(b))) return true;
        image.erase(b);
        for (std::size_t i = 0; i <= pos; ++i) taken.erase(chain[i]);
        for (const auto& e : edges) used_edges.erase(e);
      }
    }
    return false;
  };
  return extend(0);
}

ModelVerdict verify_smooth_contraction(const SmoothContractionWitness& w) {
  auto model_verdict = verify_contraction(w.model);
  if (!model_verdict.valid) throw ModelError("invalid contraction model: " + model_verdict.message);
  if (!w.model.pattern.has_vertex(w.v)) throw ModelError("v is not a pattern vertex");
  if (!is_subgraph(w.embedding.host, w.model.host)) throw ModelError("embedded graph is not part of the host");
  if (!rotation_is_consistent(w.embedding) || !satisfies_euler(w.embedding)) {
    throw ModelError("embedding is not a valid planar rotation system");
  }
  auto faces = trace_faces(w.embedding);
  VertexSet disk_vertices;
  std::set<Edge> disk_edges;
  for (std::size_t f : w.disk_faces) {
    if (f >= faces.size()) throw ModelError("unknown face index " + std::to_string(f));
    for (Vertex v : faces[f]) disk_vertices.insert(v);
    for (const auto& e : face_edges(faces[f])) disk_edges.insert(e);
  }
  for (Vertex x : w.model.host.vertices()) {
    bool outside = !disk_vertices.count(x);
    bool in_model = w.model.phi.at(x) == w.v;
    if (outside != in_model) {
      return reject(1,
                    "vertex " + std::to_string(x) +
                        (in_model ? " belongs to the model of v but lies in the disk"
                                  : " lies outside the disk but is not in the model of v"),
                    {x});
    }
  }
  // The chosen faces must glue (along shared edges) into one closed disk.
  std::set<std::size_t> faces_set(w.disk_faces.begin(), w.disk_faces.end());
  if (faces_set.empty()) return reject(2, "empty disk");
  std::set<std::size_t> reached{*faces_set.begin()};
  std::vector<std::size_t> stack{*faces_set.begin()};
  while (!stack.empty()) {
    std::size_t f = stack.back();
    stack.pop_back();
    auto fe = face_edges(faces[f]);
    std::set<Edge> mine(fe.begin(), fe.end());
    for (std::size_t g : faces_set) {
      if (reached.count(g)) continue;
      for (const auto& e : face_edges(faces[g])) {
        if (mine.count(e)) {
          reached.insert(g);
          stack.push_back(g);
          break;
        }
      }
    }
  }
  if (reached.size() != faces_set.size()) return reject(2, "disk faces are not glued into one piece");
  long chi = static_cast<long>(disk_vertices.size()) - static_cast<long>(disk_edges.size()) +
             static_cast<long>(faces_set.size());
  if (chi != 1) return reject(2, "union of disk faces is not a disk (Euler characteristic " + std::to_string(chi) + ")");
  return {};
}

}  // namespace flatwall
