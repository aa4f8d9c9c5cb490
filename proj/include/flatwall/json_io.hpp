#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "flatwall/decomposition.hpp"
#include "flatwall/graph.hpp"
#include "flatwall/minors.hpp"
#include "flatwall/rural.hpp"
#include "flatwall/structure.hpp"
#include "flatwall/wall.hpp"

namespace flatwall::io {

using Json = nlohmann::json;

/// Malformed or inconsistent input document.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// {"n", "edges", "labels"?}; vertex ids must be 0..n-1.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// FNV-1a over n and the sorted edge list.
std::uint64_t graph_hash(const Graph& g);

/// {"tree_edges", "bags"}; bag keys are decimal tree-node ids.
Json decomposition_to_json(const TreeDecomposition& td);
TreeDecomposition decomposition_from_json(const Json& j, const Graph& host);

/// {"branch_sets", "pattern", "host_ref"}. Reading checks host_ref against
/// `host` when present.
Json minor_to_json(const MinorModel& m);
MinorModel minor_from_json(const Json& j, const Graph& host);

/// {"height", "original", "paths", "corners"}. Corners are derived; a stored
/// list that disagrees is rejected.
Json wall_to_json(const SubdividedWall& w);
SubdividedWall wall_from_json(const Json& j, const Graph& host);

/// {"flaps": [[[u, v], ...], ...]}; flap i is the edge subgraph of the compass.
Json division_to_json(const RuralDivision& rd);
RuralDivision division_from_json(const Json& j, const Compass& c);

/// Tagged by "clause". The clause 3 wall is read against g minus the apices
/// and the division against that wall's compass.
Json certificate_to_json(const WeakStructureCertificate& cert);
WeakStructureCertificate certificate_from_json(const Json& j, const Graph& g);

/// Parses a file, or standard input for "-".
Json read_document(const std::string& path);

}  // namespace flatwall::io
