#pragma once

#include <map>
#include <optional>
#include <vector>

#include "flatwall/graph.hpp"

namespace flatwall {

/// Combinatorial embedding of a graph on the sphere: for every vertex the
/// cyclic order of its neighbours.
struct RotationEmbedding {
  Graph host;
  std::map<Vertex, std::vector<Vertex>> rotation;
  /// Vertex walk of one designated face.
  std::vector<Vertex> outer_face;
};

/// A face as the closed vertex walk traced from the rotation system
/// (first vertex not repeated at the end). Isolated vertices give a
/// single-vertex face.
using Face = std::vector<Vertex>;

bool is_planar(const Graph& g);

/// Planar rotation system, or nullopt when `g` is not planar.
std::optional<RotationEmbedding> embed_planar(const Graph& g);

/// Whether every rotation lists exactly the incident edges of its vertex.
bool rotation_is_consistent(const RotationEmbedding& emb);

/// Faces in a deterministic order (by smallest starting dart).
std::vector<Face> trace_faces(const RotationEmbedding& emb);

/// Edges traversed by a face walk, in walk order.
std::vector<Edge> face_edges(const Face& face);

/// V - E + F == 2 on every connected component.
bool satisfies_euler(const RotationEmbedding& emb);

}  // namespace flatwall
