#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flatwall/graph.hpp"
#include "flatwall/planarity.hpp"

namespace flatwall {

/// H is a contraction of G via phi.
struct ContractionModel {
  Graph host;
  Graph pattern;
  std::map<Vertex, Vertex> phi;  // V(host) -> V(pattern)
};

/// Branch sets certifying pattern <=_m host.
struct MinorModel {
  Graph host;
  Graph pattern;
  std::map<Vertex, VertexSet> branch_sets;
};

/// Outcome of a model check; `condition` is 0 when valid.
struct ModelVerdict {
  bool valid = true;
  int condition = 0;
  std::string message;
  std::vector<Vertex> witness;
};

class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Checks contraction conditions 1 (connected codomains), 2 (connected
/// union along pattern edges) and 3 (host edges map to equal endpoints or
/// pattern edges). Throws ModelError when phi is not total or not surjective.
ModelVerdict verify_contraction(const ContractionModel& m);

/// Conditions: 1 branch sets non-empty, known and pairwise disjoint;
/// 2 each branch set connected; 3 every pattern edge realised by a host edge.
ModelVerdict verify_minor(const MinorModel& m);

/// Contraction of the subgraph of host made of the branch sets' internal
/// edges plus the host edges realising pattern edges.
ContractionModel to_contraction(const MinorModel& m);

struct SearchLimits {
  std::size_t max_pattern = 6;
  std::size_t max_host = 30;
  /// Zero means no deadline.
  std::chrono::milliseconds budget{0};
};

/// Raised when a search exceeds SearchLimits::budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive minor search. Pattern vertices are placed by descending degree;
/// branch sets are enumerated as connected host subsets rooted at their
/// smallest vertex, roots tried in ascending id order, under an increasing
/// bound on the total model size.
std::optional<MinorModel> find_minor(const Graph& host, const Graph& pattern, const SearchLimits& limits = {});

/// Pattern edge realised as a host path between the images of its endpoints.
struct TopologicalModel {
  Graph host;
  Graph pattern;
  std::map<Vertex, Vertex> branch_vertices;
  std::map<Edge, std::vector<Vertex>> paths;  // path from image of e.u to image of e.v
};

ModelVerdict verify_topological(const TopologicalModel& m);

/// Exhaustive search for a subdivision of `pattern` in `host`, trying models
/// with fewer subdivision vertices first.
std::optional<TopologicalModel> find_topological_minor(const Graph& host, const Graph& pattern,
                                                       const SearchLimits& limits = {});

/// Enumerates subdivisions of `pattern` in `host` (each found once per
/// distinct model) until `visit` returns false. Returns the number visited.
std::size_t enumerate_topological_minors(const Graph& host, const Graph& pattern, const SearchLimits& limits,
                                         const std::function<bool(const TopologicalModel&)>& visit);

struct DeltaYResult {
  Graph graph;
  Vertex hub;
};

/// Replaces triangle {x, y, z} by a new vertex adjacent to x, y and z.
DeltaYResult delta_y(const Graph& g, Vertex x, Vertex y, Vertex z);

struct SubdivideResult {
  Graph graph;
  Vertex vertex;
};

SubdivideResult subdivide(const Graph& g, const Edge& e);

/// Dissolves a degree-2 vertex whose neighbours are not adjacent.
Graph dissolve(const Graph& g, Vertex v);

/// Backtracking isomorphism test with degree refinement.
bool are_isomorphic(const Graph& a, const Graph& b);

/// Whether `sub` is isomorphic to a subdivision of `base`.
bool is_subdivision_of(const Graph& sub, const Graph& base);

/// G contains `model.pattern` as a v-smooth contraction: everything outside
/// the closed disk formed by `disk_faces` (indices into
/// trace_faces(embedding)) is exactly the model of `v`.
struct SmoothContractionWitness {
  ContractionModel model;
  RotationEmbedding embedding;  // of the embedded part of model.host
  Vertex v = 0;
  std::vector<std::size_t> disk_faces;
};

/// Throws ModelError when the model or the embedding is invalid.
ModelVerdict verify_smooth_contraction(const SmoothContractionWitness& w);

}  // namespace flatwall
