#include <deque>

#include "dense.hpp"
#include "flatwall/minors.hpp"
#include "search_clock.hpp"

namespace flatwall {
namespace {

using detail::bit;
using detail::DenseGraph;
using detail::Mask;

constexpr int kUnreachable = 1 << 20;

std::vector<std::vector<int>> all_distances(const DenseGraph& g) {
  std::vector<std::vector<int>> d(g.n, std::vector<int>(g.n, kUnreachable));
  for (std::size_t s = 0; s < g.n; ++s) {
    d[s][s] = 0;
    std::deque<std::size_t> q{s};
    while (!q.empty()) {
      std::size_t v = q.front();
      q.pop_front();
      detail::for_each_bit(g.adj[v], [&](std::size_t w) {
        if (d[s][w] == kUnreachable) {
          d[s][w] = d[s][v] + 1;
          q.push_back(w);
        }
      });
    }
  }
  return d;
}

class TopologicalSearch {
 public:
  TopologicalSearch(const Graph& host, const Graph& pattern, const SearchLimits& limits,
                    const std::function<bool(const TopologicalModel&)>& visit)
      : host_graph_(host),
        pattern_graph_(pattern),
        host_(host),
        pattern_(pattern),
        clock_(limits.budget),
        visit_(visit) {
    host_dist_ = all_distances(host_);
    pattern_dist_ = all_distances(pattern_);
    // Connected placement order, highest degree first.
    Mask placed = 0;
    while (order_.size() < pattern_.n) {
      std::size_t best = pattern_.n;
      auto key = [&](std::size_t v) {
        return std::make_tuple(std::popcount(pattern_.adj[v] & placed), std::popcount(pattern_.adj[v]));
      };
      for (std::size_t v = 0; v < pattern_.n; ++v) {
        if (placed & bit(v)) continue;
        if (best == pattern_.n || key(v) > key(best)) best = v;
      }
      order_.push_back(best);
      placed |= bit(best);
    }
    image_.assign(pattern_.n, host_.n);
  }

  std::size_t run() {
    if (pattern_.n > host_.n) return 0;
    std::size_t pattern_edges = 0;
    for (auto m : pattern_.adj) pattern_edges += static_cast<std::size_t>(std::popcount(m));
    std::size_t host_edges = 0;
    for (auto m : host_.adj) host_edges += static_cast<std::size_t>(std::popcount(m));
    if (pattern_edges > host_edges) return 0;
    for (budget_ = 0; budget_ + pattern_.n <= host_.n; ++budget_) {
      place(0, 0, 0);
      if (stop_) break;
    }
    return visited_;
  }

 private:
  void place(std::size_t idx, Mask used, std::size_t interior) {
    if (stop_) return;
    clock_.tick();
    if (idx == order_.size()) {
      if (interior == budget_) report();
      return;
    }
    std::size_t u = order_[idx];
    for (std::size_t c = 0; c < host_.n && !stop_; ++c) {
      if (used & bit(c)) continue;
      if (std::popcount(host_.adj[c]) < std::popcount(pattern_.adj[u])) continue;
      bool close = true;
      for (std::size_t j = 0; j < idx && close; ++j) {
        std::size_t a = order_[j];
        close = host_dist_[c][image_[a]] <= pattern_dist_[u][a] + static_cast<int>(budget_);
      }
      if (!close) continue;
      image_[u] = c;
      std::vector<std::size_t> targets;
      for (std::size_t j = 0; j < idx; ++j) {
        if (pattern_.adj[u] & bit(order_[j])) targets.push_back(order_[j]);
      }
      route(idx, u, targets, 0, used | bit(c), interior);
      image_[u] = host_.n;
    }
  }

  // Routes the edges from u to each already-placed neighbour in `targets`.
  void route(std::size_t idx, std::size_t u, const std::vector<std::size_t>& targets, std::size_t t, Mask used,
             std::size_t interior) {
    if (stop_) return;
    if (t == targets.size()) {
      if (degrees_ok(idx, used)) place(idx + 1, used, interior);
      return;
    }
    std::size_t a = targets[t];
    std::vector<std::size_t> path{image_[u]};
    extend_path(idx, u, targets, t, used, interior, path, image_[a]);
  }

  void extend_path(std::size_t idx, std::size_t u, const std::vector<std::size_t>& targets, std::size_t t, Mask used,
                   std::size_t interior, std::vector<std::size_t>& path, std::size_t goal) {
    if (stop_) return;
    clock_.tick();
    std::size_t last = path.back();
    if (host_.adj[last] & bit(goal)) {
      path.push_back(goal);
      paths_[edge_key(u, targets[t])] = path;
      route(idx, u, targets, t + 1, used, interior);
      paths_.erase(edge_key(u, targets[t]));
      path.pop_back();
    }
    if (interior >= budget_) return;
    Mask next = host_.adj[last] & ~used;
    for (Mask m = next; m && !stop_; m &= m - 1) {
      std::size_t w = static_cast<std::size_t>(std::countr_zero(m));
      if (host_dist_[w][goal] > static_cast<int>(budget_ - interior)) continue;
      path.push_back(w);
      extend_path(idx, u, targets, t, used | bit(w), interior + 1, path, goal);
      path.pop_back();
    }
  }

  // Each placed branch vertex needs enough unused host neighbours for its
  // pattern edges to vertices not yet placed.
  bool degrees_ok(std::size_t idx, Mask used) const {
    for (std::size_t j = 0; j <= idx; ++j) {
      std::size_t a = order_[j];
      int open = 0;
      for (std::size_t i = idx + 1; i < order_.size(); ++i) {
        if (pattern_.adj[a] & bit(order_[i])) ++open;
      }
      if (open > std::popcount(host_.adj[image_[a]] & ~used)) return false;
    }
    return true;
  }

  static std::pair<std::size_t, std::size_t> edge_key(std::size_t a, std::size_t b) {
    return {std::min(a, b), std::max(a, b)};
  }

  void report() {
    TopologicalModel model{host_graph_, pattern_graph_, {}, {}};
    for (std::size_t p = 0; p < pattern_.n; ++p) model.branch_vertices[pattern_.ids[p]] = host_.ids[image_[p]];
    for (const auto& [key, path] : paths_) {
      Edge e(pattern_.ids[key.first], pattern_.ids[key.second]);
      std::vector<Vertex> hp;
      for (std::size_t v : path) hp.push_back(host_.ids[v]);
      if (hp.front() != model.branch_vertices[e.u]) std::reverse(hp.begin(), hp.end());
      model.paths[e] = std::move(hp);
    }
    ++visited_;
    if (!visit_(model)) stop_ = true;
  }

  const Graph& host_graph_;
  const Graph& pattern_graph_;
  DenseGraph host_;
  DenseGraph pattern_;
  detail::SearchClock clock_;
  const std::function<bool(const TopologicalModel&)>& visit_;
  std::vector<std::vector<int>> host_dist_;
  std::vector<std::vector<int>> pattern_dist_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> image_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> paths_;
  std::size_t budget_ = 0;
  std::size_t visited_ = 0;
  bool stop_ = false;
};

void check_caps(const Graph& host, const Graph& pattern, const SearchLimits& limits) {
  if (pattern.num_vertices() > limits.max_pattern) {
    throw CapExceeded("pattern has " + std::to_string(pattern.num_vertices()) + " vertices, cap is " +
                      std::to_string(limits.max_pattern));
  }
  if (host.num_vertices() > limits.max_host || host.num_vertices() > 64) {
    throw CapExceeded("host has " + std::to_string(host.num_vertices()) + " vertices, cap is " +
                      std::to_string(limits.max_host));
  }
}

}  // namespace

ModelVerdict verify_topological(const TopologicalModel& m) {
  VertexSet images;
  for (Vertex p : m.pattern.vertices()) {
    auto it = m.branch_vertices.find(p);
    if (it == m.branch_vertices.end() || !m.host.has_vertex(it->second)) {
      return {false, 1, "pattern vertex " + std::to_string(p) + " has no host image", {p}};
    }
    if (!images.insert(it->second).second) {
      return {false, 1, "two pattern vertices share host vertex " + std::to_string(it->second), {it->second}};
    }
  }
  VertexSet interior;
  for (const auto& e : m.pattern.edges()) {
    auto it = m.paths.find(e);
    if (it == m.paths.end()) return {false, 2, "pattern edge " + describe(e) + " has no path", {e.u, e.v}};
    const auto& path = it->second;
    if (path.size() < 2 || path.front() != m.branch_vertices.at(e.u) || path.back() != m.branch_vertices.at(e.v)) {
      return {false, 2, "path for " + describe(e) + " does not join the images of its ends", {e.u, e.v}};
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (!m.host.has_edge(path[i], path[i + 1])) {
        return {false, 2, "path for " + describe(e) + " uses a non-edge", {path[i], path[i + 1]}};
      }
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      if (images.count(path[i]) || !interior.insert(path[i]).second) {
        return {false, 3, "paths are not internally disjoint at " + std::to_string(path[i]), {path[i]}};
      }
    }
  }
  return {};
}

std::size_t enumerate_topological_minors(const Graph& host, const Graph& pattern, const SearchLimits& limits,
                                         const std::function<bool(const TopologicalModel&)>& visit) {
  check_caps(host, pattern, limits);
  if (pattern.empty()) {
    visit(TopologicalModel{host, pattern, {}, {}});
    return 1;
  }
  TopologicalSearch search(host, pattern, limits, visit);
  return search.run();
}

std::optional<TopologicalModel> find_topological_minor(const Graph& host, const Graph& pattern,
                                                       const SearchLimits& limits) {
  std::optional<TopologicalModel> found;
  enumerate_topological_minors(host, pattern, limits, [&](const TopologicalModel& m) {
    found = m;
    return false;
  });
  return found;
}

}  // namespace flatwall
