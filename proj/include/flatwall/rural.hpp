#pragma once

#include <array>
#include <string>
#include <vector>

#include "flatwall/graph.hpp"
#include "flatwall/wall.hpp"

namespace flatwall {

class RuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Flaps D_1..D_m of a compass, each given as a subgraph of it.
struct RuralDivision {
  Compass compass;
  std::vector<Graph> flaps;
};

/// ∂_K J: vertices of J that are corners or touch an edge of K outside J.
/// Throws RuralError when J is not a subgraph of K.
VertexSet boundary(const Compass& k, const Graph& j);

/// `property` is the lowest violated property (1-5), 0 when valid.
struct RuralVerdict {
  bool valid = true;
  int property = 0;
  std::string message;
  std::vector<Vertex> witness;
};

/// Throws RuralError when a flap is not a subgraph of the compass.
RuralVerdict validate_rural(const RuralDivision& rd);

/// Hyperedges are the flap boundaries.
Hypergraph boundary_hypergraph(const RuralDivision& rd);

/// I(h) plus the cycle c1c2c3c4 plus a vertex joined to the four corners is
/// planar. Throws RuralError when a corner is not a vertex of h.
bool check_disk_embeddable(const Hypergraph& h, const std::array<Vertex, 4>& corners);

/// |e| vertex-disjoint paths from e to the corners exist in the compass.
/// Throws RuralError when |e| > 4 or e leaves the compass.
bool check_linkage(const Compass& k, const VertexSet& e);

/// Flaps that avoid the perimeter.
std::vector<Graph> internal_flaps(const RuralDivision& rd);

/// One flap per compass edge.
RuralDivision per_edge_division(const Compass& k);

}  // namespace flatwall
