#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flatwall/generators.hpp"
#include "flatwall/graph.hpp"
#include "flatwall/minors.hpp"

namespace flatwall {

class WallError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A subdivision of W_height living in `host`.
///
/// `original[u]` is the host image of wall vertex u of wall(height);
/// `branch_paths[i]` is the host path for wall(height).edges()[i], running
/// from the image of its smaller end to the image of its larger end.
struct SubdividedWall {
  Graph host;
  int height = 0;
  std::vector<Vertex> original;
  std::vector<std::vector<Vertex>> branch_paths;

  std::array<Vertex, 4> corners() const;
  /// Every host vertex used by the wall.
  VertexSet vertices() const;
};

/// The unsubdivided wall(k) as its own host.
SubdividedWall plain_wall(int k);

struct WallVerdict {
  bool valid = true;
  std::string message;
};

/// Shape, injectivity, host edges and internal disjointness of the paths.
WallVerdict validate_wall(const SubdividedWall& w);

/// Union of the branch paths.
Graph wall_subgraph(const SubdividedWall& w);

/// Boundary cycle through c1, c2, c3, c4 (c1 not repeated).
std::vector<Vertex> perimeter(const SubdividedWall& w);

/// Nested boundary cycles, outermost first; max(1, height/2) of them.
std::vector<std::vector<Vertex>> layers(const SubdividedWall& w);

struct Bricks {
  std::vector<std::vector<Vertex>> cycles;
  std::vector<std::pair<std::size_t, std::size_t>> neighbours;  // index pairs sharing an edge
};

/// Images of the 6-faces of W_height.
Bricks bricks(const SubdividedWall& w);

struct Compass {
  SubdividedWall wall;
  Graph graph;
};

/// G[V(K') ∪ V(P)] where K' is the component of g∖P holding W∖P. When W∖P
/// is empty (height 1) the compass is G[V(P)]. The returned wall has the
/// compass as its host.
Compass compass(const Graph& g, const SubdividedWall& w);

/// Whether the compass embeds in a disk with the perimeter as its boundary:
/// the compass plus a vertex joined to every perimeter vertex is planar.
bool compass_disk_embeddable(const Compass& c);

enum class Flatness { Flat, NotFlat, Unknown };

struct FlatnessResult {
  Flatness verdict = Flatness::Unknown;
  std::vector<Vertex> path13;  // c1 -> c3, set when NotFlat
  std::vector<Vertex> path24;  // c2 -> c4, set when NotFlat
  std::uint64_t transcript_hash = 0;
  std::uint64_t nodes = 0;
};

/// Exhaustive search for vertex-disjoint (c1,c3)- and (c2,c4)-paths in the
/// compass. A zero budget means no deadline.
FlatnessResult is_flat(const Compass& c, std::chrono::milliseconds budget = std::chrono::milliseconds{0});

/// Structural check of a NotFlat witness against a compass.
bool valid_flatness_witness(const Compass& c, const std::vector<Vertex>& path13, const std::vector<Vertex>& path24);

/// Height-k wall inside a graph containing Γ_{2k+8} as a v-smooth contraction.
/// The witness pattern must be gamma(2k+8) with v its loaded corner. The
/// result's compass is checked to embed with the perimeter outside.
SubdividedWall extract_wall_from_gamma_contraction(const Graph& g, const SmoothContractionWitness& witness, int k);

/// Height-`sub_height` subwall of w on the coordinate window with top-left
/// wall coordinate (x0, y0); mirrored when x0+y0 is odd. Throws WallError when
/// the window leaves the wall.
SubdividedWall subwall(const SubdividedWall& w, int sub_height, int x0, int y0);

struct SubwallWindow {
  int x0 = 0;
  int y0 = 0;
  SubdividedWall wall;
};

/// Pairwise disjoint subwalls placed greedily over row-major windows, each
/// avoiding the host vertices in `avoid`. Throws WallError when fewer than
/// `count` fit.
std::vector<SubdividedWall> disjoint_subwalls(const SubdividedWall& w, int count, int sub_height,
                                              const VertexSet& avoid = {});

/// disjoint_subwalls with the window positions.
std::vector<SubwallWindow> disjoint_subwall_windows(const SubdividedWall& w, int count, int sub_height,
                                                    const VertexSet& avoid = {});

struct TransformOp {
  enum class Kind { DeltaY, Subdivide } kind = Kind::Subdivide;
  std::array<Vertex, 3> triangle{};  // DeltaY
  Edge edge{0, 1};                   // Subdivide

  static TransformOp delta_y(Vertex x, Vertex y, Vertex z) { return {Kind::DeltaY, {x, y, z}, Edge(0, 1)}; }
  static TransformOp subdivide(const Edge& e) { return {Kind::Subdivide, {}, e}; }
};

/// Applies `ops` to the compass graph and follows the wall through each
/// rewrite. The result lives in the transformed graph.
SubdividedWall refind_after_transform(const Compass& c, const std::vector<TransformOp>& ops);

}  // namespace flatwall
