#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flatwall/decomposition.hpp"
#include "flatwall/graph.hpp"
#include "flatwall/minors.hpp"
#include "flatwall/rural.hpp"
#include "flatwall/wall.hpp"

namespace flatwall {

class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ApexResult {
  int number = 0;
  VertexSet apices;  // lexicographically first optimal set
};

constexpr std::size_t kDefaultApexCap = 16;

/// Smallest S with g∖S planar, by increasing-size subset search.
/// Throws CapExceeded above `cap` vertices.
ApexResult apex_number(const Graph& g, std::size_t cap = kDefaultApexCap);

/// Constants of the apex-reduction argument. f1 and f2 are supplied by the
/// caller; every derived value is overflow-checked (std::overflow_error).
struct StructureConstants {
  std::int64_t h = 0;
  std::int64_t an_h = 0;
  std::int64_t a_size = 0;
  std::int64_t f1_value = 0;
  std::int64_t f2_value = 0;

  /// 14(h - an_h) + ceil(sqrt(an_h)) - 24; may be below 1.
  std::int64_t f5() const;
  std::int64_t g() const { return f5(); }
  /// f5^(a_size - an_h + 1). Throws std::domain_error when f5 < 1 or the
  /// exponent is negative.
  std::int64_t f4() const;
  /// f2 * (4k * f4 + 12) + f1.
  std::int64_t f3(std::int64_t k) const;
};

/// Exact ceil(sqrt(n)) for n >= 0.
std::int64_t ceil_sqrt(std::int64_t n);

/// (n × n)-grid (ids 0..n²-1) plus h pairwise non-adjacent apices
/// (ids n²..) each adjacent to every grid vertex.
Graph apex_grid(int n, int h);

/// Model of pyramid(k, h) in apex_grid(k + ceil(sqrt(h)), h). The pattern
/// grid maps onto the top-left k×k block; clique vertex t becomes apex t
/// merged with the t-th vertex of the bottom-right α×α block.
MinorModel pyramid_minor_model(int k, int h);

/// Raised by apex_reduce when every apex touches every window compass.
class HMinorFound : public std::runtime_error {
 public:
  HMinorFound(const std::string& what, MinorModel evidence)
      : std::runtime_error(what), evidence(std::move(evidence)) {}
  MinorModel evidence;
};

struct ApexReduction {
  VertexSet a_prime;
  SubdividedWall w_prime;
  Vertex dropped = 0;
  std::vector<std::vector<int>> q;  // q[window][apex index], apices ascending
};

/// One apex-reduction step. `w` lives in g∖a. Windows are g(h)² disjoint
/// height-k subwalls unless `window_count` overrides it. Returns the first
/// window/apex pair (window-major) whose flag is zero.
ApexReduction apex_reduce(const Graph& g, const Graph& h_graph, const VertexSet& a, const SubdividedWall& w, int k,
                          const StructureConstants& consts, std::optional<int> window_count = std::nullopt);

/// Union graphs of the classes of components of family members minus s that
/// meet g∖s, grouped by their trace on g∖s, ordered by smallest trace vertex.
std::vector<Graph> merge_flaps(const std::vector<Graph>& family, const VertexSet& s, const Graph& g);

/// One of the three outcomes of the structure theorem.
struct WeakStructureCertificate {
  int clause = 0;  // 1, 2 or 3
  std::optional<MinorModel> minor;
  std::optional<TreeDecomposition> decomposition;
  int width_bound = 0;
  VertexSet apices;
  std::optional<SubdividedWall> wall;
  std::optional<RuralDivision> division;
  int flap_bound = 0;
};

struct TrichotomyLimits {
  std::size_t max_host = 16;
  std::size_t max_pattern = 6;
  std::size_t max_wall_candidates = 5000;
  std::chrono::milliseconds budget{0};
};

struct TrichotomyOutcome {
  std::optional<WeakStructureCertificate> certificate;  // empty when undetermined
  std::string note;
};

/// Tries the clauses in order: H minor, decomposition of width at most
/// `width_threshold`, then apex sets of size below an(H) with a flat height-k
/// wall whose per-edge division validates and whose internal flaps have
/// treewidth at most `width_threshold`. Throws CapExceeded outside the caps.
TrichotomyOutcome trichotomy_check(const Graph& g, const Graph& h_graph, int k, int width_threshold,
                                   const TrichotomyLimits& limits = {});

/// `condition` names the failed check, e.g. "minor:2", "td:width",
/// "apex:size", "wall:height", "rural:5", "flap:treewidth".
struct CertificateVerdict {
  bool valid = true;
  std::string condition;
  std::string message;
};

/// Throws StructureError when the certificate lacks the payload of its clause.
CertificateVerdict verify_certificate(const Graph& g, const Graph& h_graph, int k,
                                      const WeakStructureCertificate& cert);

}  // namespace flatwall
