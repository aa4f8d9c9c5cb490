#include "flatwall/decomposition.hpp"

#include <deque>
#include <limits>

#include "dense.hpp"

namespace flatwall {
namespace {

using detail::bit;
using detail::DenseGraph;
using detail::Mask;

void check_structure(const TreeDecomposition& td) {
  if (!is_tree(td.tree)) throw DecompositionError("decomposition tree is not a tree");
  for (Vertex node : td.tree.vertices()) {
    auto it = td.bags.find(node);
    if (it == td.bags.end()) throw DecompositionError("tree node " + std::to_string(node) + " has no bag");
    for (Vertex v : it->second) {
      if (!td.host.has_vertex(v)) {
        throw DecompositionError("bag " + std::to_string(node) + " names unknown vertex " + std::to_string(v));
      }
    }
  }
}

// Vertices outside S ∪ {v} reachable from v through S: the higher
// neighbourhood of v once the vertices of S have been eliminated.
Mask eliminated_neighbourhood(const DenseGraph& g, Mask eliminated, std::size_t v) {
  Mask reach = bit(v);
  Mask fresh = bit(v);
  while (fresh) {
    Mask nb = g.neighbors_of(fresh);
    fresh = nb & eliminated & ~reach;
    reach |= fresh;
  }
  return g.neighbors_of(reach) & ~eliminated & ~bit(v);
}

}  // namespace

TdVerdict validate(const TreeDecomposition& td) {
  check_structure(td);
  TdVerdict out;
  for (Vertex v : td.host.vertices()) {
    bool covered = false;
    for (const auto& [node, bag] : td.bags) {
      if (td.tree.has_vertex(node) && bag.count(v)) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      return {false, 1, "vertex " + std::to_string(v) + " is in no bag", v, std::nullopt};
    }
  }
  for (const auto& e : td.host.edges()) {
    bool covered = false;
    for (Vertex node : td.tree.vertices()) {
      const auto& bag = td.bags.at(node);
      if (bag.count(e.u) && bag.count(e.v)) {
        covered = true;
        break;
      }
    }
    if (!covered) return {false, 2, "edge " + describe(e) + " is in no bag", std::nullopt, e};
  }
  for (Vertex v : td.host.vertices()) {
    VertexSet trace;
    for (Vertex node : td.tree.vertices()) {
      if (td.bags.at(node).count(v)) trace.insert(node);
    }
    if (!induces_connected(td.tree, trace)) {
      return {false, 3, "bags containing vertex " + std::to_string(v) + " are not connected in the tree", v,
              std::nullopt};
    }
  }
  return out;
}

int width(const TreeDecomposition& td) {
  auto verdict = validate(td);
  if (!verdict.valid) throw DecompositionError("invalid decomposition: " + verdict.message);
  int w = -1;
  for (Vertex node : td.tree.vertices()) w = std::max(w, static_cast<int>(td.bags.at(node).size()) - 1);
  return w;
}

Graph closure_bag(const TreeDecomposition& td, Vertex bag) {
  if (!td.tree.has_vertex(bag) || !td.bags.count(bag)) {
    throw DecompositionError("unknown bag id " + std::to_string(bag));
  }
  const VertexSet& x = td.bags.at(bag);
  Graph base = induced_subgraph(td.host, x);
  std::vector<Edge> extra;
  for (Vertex j : td.tree.neighbors(bag)) {
    std::vector<Vertex> common;
    for (Vertex v : td.bags.at(j)) {
      if (x.count(v)) common.push_back(v);
    }
    for (std::size_t a = 0; a < common.size(); ++a) {
      for (std::size_t b = a + 1; b < common.size(); ++b) extra.emplace_back(common[a], common[b]);
    }
  }
  return add_edges(base, extra);
}

bool is_small(const TreeDecomposition& td) {
  const auto& nodes = td.tree.vertices();
  for (Vertex i : nodes) {
    for (Vertex j : nodes) {
      if (i == j) continue;
      const auto& a = td.bags.at(i);
      const auto& b = td.bags.at(j);
      if (std::includes(b.begin(), b.end(), a.begin(), a.end())) return false;
    }
  }
  return true;
}

TreeDecomposition make_small(const TreeDecomposition& td) {
  check_structure(td);
  TreeDecomposition cur = td;
  for (;;) {
    bool changed = false;
    for (const auto& e : cur.tree.edges()) {
      const auto& a = cur.bags.at(e.u);
      const auto& b = cur.bags.at(e.v);
      bool a_in_b = std::includes(b.begin(), b.end(), a.begin(), a.end());
      bool b_in_a = std::includes(a.begin(), a.end(), b.begin(), b.end());
      if (!a_in_b && !b_in_a) continue;
      // Keep the larger bag; for equal bags keep the smaller node id.
      Vertex keep = b_in_a ? e.u : e.v;
      Vertex drop = e.other(keep);
      std::vector<Edge> edges;
      for (const auto& te : cur.tree.edges()) {
        if (te.contains(drop)) {
          Vertex other = te.other(drop);
          if (other != keep) edges.emplace_back(keep, other);
        } else {
          edges.push_back(te);
        }
      }
      std::vector<Vertex> nodes;
      for (Vertex n : cur.tree.vertices()) {
        if (n != drop) nodes.push_back(n);
      }
      cur.tree = Graph(std::move(nodes), edges);
      cur.bags.erase(drop);
      changed = true;
      break;
    }
    if (!changed) break;
  }
  for (auto it = cur.bags.begin(); it != cur.bags.end();) {
    it = cur.tree.has_vertex(it->first) ? std::next(it) : cur.bags.erase(it);
  }
  return cur;
}

TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<Vertex>& order) {
  TreeDecomposition td;
  td.host = g;
  if (order.size() != g.num_vertices()) throw GraphError("elimination order must list every vertex once");
  if (g.empty()) {
    td.tree = Graph::on_range(1, {});
    td.bags[0] = {};
    return td;
  }
  DenseGraph dg(g);
  std::vector<std::size_t> pos(dg.n);
  std::vector<char> seen(dg.n, 0);
  for (std::size_t p = 0; p < order.size(); ++p) {
    std::size_t i = g.index_of(order[p]);
    if (seen[i]) throw GraphError("elimination order repeats a vertex");
    seen[i] = 1;
    pos[i] = p;
  }
  Mask eliminated = 0;
  std::vector<Edge> tree_edges;
  std::vector<Vertex> roots;
  for (std::size_t p = 0; p < order.size(); ++p) {
    std::size_t i = g.index_of(order[p]);
    Mask q = eliminated_neighbourhood(dg, eliminated, i);
    VertexSet bag{order[p]};
    std::size_t parent = order.size();
    detail::for_each_bit(q, [&](std::size_t j) {
      bag.insert(dg.ids[j]);
      parent = std::min(parent, pos[j]);
    });
    td.bags[static_cast<Vertex>(p)] = std::move(bag);
    if (parent == order.size()) {
      roots.push_back(static_cast<Vertex>(p));
    } else {
      tree_edges.emplace_back(static_cast<Vertex>(p), static_cast<Vertex>(parent));
    }
    eliminated |= bit(i);
  }
  for (std::size_t r = 1; r < roots.size(); ++r) tree_edges.emplace_back(roots[r - 1], roots[r]);
  td.tree = Graph::on_range(static_cast<int>(order.size()), tree_edges);
  return td;
}

TreewidthResult exact_treewidth(const Graph& g, std::size_t cap) {
  if (g.num_vertices() > cap) {
    throw CapExceeded("exact treewidth limited to " + std::to_string(cap) + " vertices, got " +
                      std::to_string(g.num_vertices()));
  }
  if (g.num_vertices() > 30) throw CapExceeded("exact treewidth cannot exceed 30 vertices");
  TreewidthResult out;
  if (g.empty()) {
    out.decomposition = decomposition_from_order(g, {});
    return out;
  }
  DenseGraph dg(g);
  const std::size_t n = dg.n;
  const Mask full = dg.all();
  // best[S]: optimal width for eliminating the rest once S is eliminated.
  std::vector<std::uint8_t> best(std::size_t{1} << n, 0);
  for (Mask s = full; s-- > 0;) {
    std::uint8_t value = std::numeric_limits<std::uint8_t>::max();
    for (std::size_t v = 0; v < n; ++v) {
      if (s & bit(v)) continue;
      auto q = static_cast<std::uint8_t>(std::popcount(eliminated_neighbourhood(dg, s, v)));
      value = std::min(value, std::max(q, best[s | bit(v)]));
    }
    best[s] = value;
  }
  const std::uint8_t tw = best[0];
  Mask s = 0;
  while (s != full) {
    for (std::size_t v = 0; v < n; ++v) {
      if (s & bit(v)) continue;
      auto q = static_cast<std::uint8_t>(std::popcount(eliminated_neighbourhood(dg, s, v)));
      if (std::max(q, best[s | bit(v)]) <= tw) {
        out.elimination_order.push_back(dg.ids[v]);
        s |= bit(v);
        break;
      }
    }
  }
  out.treewidth = tw;
  out.decomposition = decomposition_from_order(g, out.elimination_order);
  return out;
}

int treewidth(const Graph& g, std::size_t cap) { return exact_treewidth(g, cap).treewidth; }

Vertex select_tree_vertex(const WeightedTree& wt, std::uint64_t k) {
  if (!is_tree(wt.tree)) throw GraphError("weighted tree is not a tree");
  auto weight = [&](Vertex v) {
    auto it = wt.weight.find(v);
    return it == wt.weight.end() ? std::uint64_t{0} : it->second;
  };
  Vertex root = wt.tree.vertices().front();
  std::map<Vertex, std::size_t> depth{{root, 0}};
  std::deque<Vertex> queue{root};
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : wt.tree.neighbors(v)) {
      if (depth.emplace(w, depth[v] + 1).second) queue.push_back(w);
    }
  }
  std::optional<Vertex> pick;
  for (Vertex v : wt.tree.vertices()) {
    if (weight(v) < k) continue;
    if (!pick || depth[v] > depth[*pick]) pick = v;
  }
  if (!pick) throw GraphError("no tree vertex has weight >= " + std::to_string(k));
  return *pick;
}

}  // namespace flatwall
