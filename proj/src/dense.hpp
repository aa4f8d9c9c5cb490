#pragma once

// Bitmask view of a small graph, indexed by position in Graph::vertices().

#include <bit>
#include <cstdint>
#include <vector>

#include "flatwall/graph.hpp"

namespace flatwall::detail {

using Mask = std::uint64_t;

inline Mask bit(std::size_t i) { return Mask{1} << i; }

struct DenseGraph {
  std::size_t n = 0;
  std::vector<Mask> adj;
  std::vector<Vertex> ids;

  explicit DenseGraph(const Graph& g) : n(g.num_vertices()), adj(n, 0), ids(g.vertices()) {
    if (n > 64) throw CapExceeded("dense graph limited to 64 vertices");
    for (const auto& e : g.edges()) {
      auto a = g.index_of(e.u);
      auto b = g.index_of(e.v);
      adj[a] |= bit(b);
      adj[b] |= bit(a);
    }
  }

  Mask all() const { return n == 64 ? ~Mask{0} : bit(n) - 1; }

  Mask neighbors_of(Mask set) const {
    Mask out = 0;
    for (Mask m = set; m; m &= m - 1) out |= adj[std::countr_zero(m)];
    return out;
  }
};

template <typename F>
void for_each_bit(Mask m, F&& f) {
  for (; m; m &= m - 1) f(static_cast<std::size_t>(std::countr_zero(m)));
}

}  // namespace flatwall::detail
