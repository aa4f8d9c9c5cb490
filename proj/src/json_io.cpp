#include "flatwall/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace flatwall::io {

namespace {

template <class F>
auto guarded(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(what + ": " + e.what());
  } catch (const GraphError& e) {
    throw FormatError(what + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(what + ": missing \"" + key + "\"");
  return j.at(key);
}

Json edge_list(const std::vector<Edge>& es) {
  Json out = Json::array();
  for (const auto& e : es) out.push_back({e.u, e.v});
  return out;
}

std::vector<Edge> read_edges(const Json& j, const std::string& what) {
  if (!j.is_array()) throw FormatError(what + ": edge list is not an array");
  std::vector<Edge> es;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw FormatError(what + ": edge is not a pair");
    es.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  return es;
}

Json vertex_list(const VertexSet& s) { return Json(std::vector<Vertex>(s.begin(), s.end())); }

VertexSet read_vertex_set(const Json& j, const std::string& what) {
  if (!j.is_array()) throw FormatError(what + ": vertex list is not an array");
  auto vs = j.get<std::vector<Vertex>>();
  return {vs.begin(), vs.end()};
}

void check_contiguous(const Graph& g) {
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    if (g.vertices()[i] != static_cast<Vertex>(i)) {
      throw FormatError("graph ids must be 0..n-1 for the JSON graph format");
    }
  }
}

}  // namespace

Json graph_to_json(const Graph& g) {
  check_contiguous(g);
  return Json{{"n", g.num_vertices()}, {"edges", edge_list(g.edges())}};
}

Graph graph_from_json(const Json& j) {
  return guarded("graph", [&] {
    const auto& n = field(j, "n", "graph");
    if (!n.is_number_integer() || n.get<long long>() < 0) throw FormatError("graph: \"n\" must be a non-negative integer");
    if (j.contains("labels") && !j.at("labels").is_object()) throw FormatError("graph: \"labels\" must be an object");
    auto es = read_edges(field(j, "edges", "graph"), "graph");
    int count = n.get<int>();
    for (const auto& e : es) {
      if (e.u < 0 || e.v < 0 || e.u >= count || e.v >= count) {
        throw FormatError("graph: edge " + describe(e) + " leaves 0..n-1");
      }
    }
    return Graph::on_range(count, es);
  });
}

std::uint64_t graph_hash(const Graph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::int64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= static_cast<std::uint64_t>(x >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::int64_t>(g.num_vertices()));
  for (Vertex v : g.vertices()) mix(v);
  auto es = g.edges();
  std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  for (const auto& e : es) {
    mix(e.u);
    mix(e.v);
  }
  return h;
}

Json decomposition_to_json(const TreeDecomposition& td) {
  Json bags = Json::object();
  for (const auto& [node, bag] : td.bags) bags[std::to_string(node)] = vertex_list(bag);
  return Json{{"tree_edges", edge_list(td.tree.edges())}, {"bags", bags}};
}

TreeDecomposition decomposition_from_json(const Json& j, const Graph& host) {
  return guarded("decomposition", [&] {
    const auto& bags = field(j, "bags", "decomposition");
    if (!bags.is_object()) throw FormatError("decomposition: \"bags\" must be an object");
    TreeDecomposition td;
    td.host = host;
    std::vector<Vertex> nodes;
    for (const auto& [key, bag] : bags.items()) {
      Vertex node = 0;
      std::istringstream in(key);
      if (!(in >> node) || !in.eof()) throw FormatError("decomposition: bag key \"" + key + "\" is not an integer");
      nodes.push_back(node);
      td.bags[node] = read_vertex_set(bag, "decomposition");
    }
    auto es = read_edges(field(j, "tree_edges", "decomposition"), "decomposition");
    for (const auto& e : es) {
      if (!td.bags.count(e.u) || !td.bags.count(e.v)) {
        throw FormatError("decomposition: tree edge " + describe(e) + " names a node without a bag");
      }
    }
    std::sort(nodes.begin(), nodes.end());
    td.tree = Graph(nodes, es);
    return td;
  });
}

Json minor_to_json(const MinorModel& m) {
  Json sets = Json::object();
  for (const auto& [p, s] : m.branch_sets) sets[std::to_string(p)] = vertex_list(s);
  return Json{{"branch_sets", sets}, {"pattern", graph_to_json(m.pattern)}, {"host_ref", graph_hash(m.host)}};
}

MinorModel minor_from_json(const Json& j, const Graph& host) {
  return guarded("minor", [&] {
    MinorModel m;
    m.host = host;
    m.pattern = graph_from_json(field(j, "pattern", "minor"));
    if (j.contains("host_ref") && j.at("host_ref").get<std::uint64_t>() != graph_hash(host)) {
      throw FormatError("minor: host_ref does not match the supplied graph");
    }
    const auto& sets = field(j, "branch_sets", "minor");
    if (!sets.is_object()) throw FormatError("minor: \"branch_sets\" must be an object");
    for (const auto& [key, s] : sets.items()) {
      Vertex p = 0;
      std::istringstream in(key);
      if (!(in >> p) || !in.eof()) throw FormatError("minor: branch set key \"" + key + "\" is not an integer");
      m.branch_sets[p] = read_vertex_set(s, "minor");
    }
    return m;
  });
}

Json wall_to_json(const SubdividedWall& w) {
  auto c = w.corners();
  return Json{{"height", w.height},
              {"original", w.original},
              {"paths", w.branch_paths},
              {"corners", std::vector<Vertex>(c.begin(), c.end())}};
}

SubdividedWall wall_from_json(const Json& j, const Graph& host) {
  return guarded("wall", [&] {
    SubdividedWall w;
    w.host = host;
    w.height = field(j, "height", "wall").get<int>();
    if (w.height < 1) throw FormatError("wall: height must be at least 1");
    w.original = field(j, "original", "wall").get<std::vector<Vertex>>();
    w.branch_paths = field(j, "paths", "wall").get<std::vector<std::vector<Vertex>>>();
    auto shape = wall(w.height);
    if (w.original.size() != shape.graph().num_vertices()) {
      throw FormatError("wall: \"original\" has " + std::to_string(w.original.size()) + " entries, expected " +
                        std::to_string(shape.graph().num_vertices()));
    }
    if (w.branch_paths.size() != shape.graph().num_edges()) {
      throw FormatError("wall: \"paths\" has " + std::to_string(w.branch_paths.size()) + " entries, expected " +
                        std::to_string(shape.graph().num_edges()));
    }
    if (j.contains("corners")) {
      auto stored = j.at("corners").get<std::vector<Vertex>>();
      auto c = w.corners();
      if (stored != std::vector<Vertex>(c.begin(), c.end())) throw FormatError("wall: corners disagree with \"original\"");
    }
    return w;
  });
}

Json division_to_json(const RuralDivision& rd) {
  Json flaps = Json::array();
  for (const auto& f : rd.flaps) flaps.push_back(edge_list(f.edges()));
  return Json{{"flaps", flaps}};
}

RuralDivision division_from_json(const Json& j, const Compass& c) {
  return guarded("division", [&] {
    const auto& flaps = field(j, "flaps", "division");
    if (!flaps.is_array()) throw FormatError("division: \"flaps\" must be an array");
    RuralDivision rd{c, {}};
    for (const auto& f : flaps) {
      auto es = read_edges(f, "division");
      for (const auto& e : es) {
        if (!c.graph.has_vertex(e.u) || !c.graph.has_vertex(e.v)) {
          throw FormatError("division: edge " + describe(e) + " is not in the compass");
        }
      }
      VertexSet vs;
      for (const auto& e : es) vs.insert({e.u, e.v});
      rd.flaps.emplace_back(std::vector<Vertex>(vs.begin(), vs.end()), es);
    }
    return rd;
  });
}

Json certificate_to_json(const WeakStructureCertificate& cert) {
  Json out{{"clause", cert.clause}};
  switch (cert.clause) {
    case 1:
      if (!cert.minor) throw FormatError("certificate: clause 1 needs a minor model");
      out["minor"] = minor_to_json(*cert.minor);
      break;
    case 2:
      if (!cert.decomposition) throw FormatError("certificate: clause 2 needs a decomposition");
      out["decomposition"] = decomposition_to_json(*cert.decomposition);
      out["width_bound"] = cert.width_bound;
      break;
    case 3:
      if (!cert.wall || !cert.division) throw FormatError("certificate: clause 3 needs a wall and a division");
      out["apices"] = vertex_list(cert.apices);
      out["wall"] = wall_to_json(*cert.wall);
      out["division"] = division_to_json(*cert.division);
      out["flap_bound"] = cert.flap_bound;
      break;
    default:
      throw FormatError("certificate: clause must be 1, 2 or 3");
  }
  return out;
}

WeakStructureCertificate certificate_from_json(const Json& j, const Graph& g) {
  return guarded("certificate", [&] {
    WeakStructureCertificate cert;
    cert.clause = field(j, "clause", "certificate").get<int>();
    switch (cert.clause) {
      case 1:
        cert.minor = minor_from_json(field(j, "minor", "certificate"), g);
        break;
      case 2:
        cert.decomposition = decomposition_from_json(field(j, "decomposition", "certificate"), g);
        cert.width_bound = field(j, "width_bound", "certificate").get<int>();
        break;
      case 3: {
        cert.apices = read_vertex_set(field(j, "apices", "certificate"), "certificate");
        for (Vertex a : cert.apices) {
          if (!g.has_vertex(a)) throw FormatError("certificate: apex " + std::to_string(a) + " is not in the graph");
        }
        Graph rest = remove_vertices(g, cert.apices);
        cert.wall = wall_from_json(field(j, "wall", "certificate"), rest);
        cert.flap_bound = field(j, "flap_bound", "certificate").get<int>();
        // A wall that fails to yield a compass is left for the verifier to name.
        Compass c;
        try {
          c = compass(rest, *cert.wall);
        } catch (const std::exception&) {
          c = Compass{*cert.wall, Graph()};
        }
        const auto& flaps = field(field(j, "division", "certificate"), "flaps", "division");
        RuralDivision rd{c, {}};
        for (const auto& f : flaps) {
          auto es = read_edges(f, "division");
          VertexSet vs;
          for (const auto& e : es) vs.insert({e.u, e.v});
          rd.flaps.emplace_back(std::vector<Vertex>(vs.begin(), vs.end()), es);
        }
        cert.division = rd;
        break;
      }
      default:
        throw FormatError("certificate: clause must be 1, 2 or 3");
    }
    return cert;
  });
}

Json read_document(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw FormatError(path + ": cannot open");
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError((path == "-" ? std::string("stdin") : path) + ": " + e.what());
  }
}

}  // namespace flatwall::io
