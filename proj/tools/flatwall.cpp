// flatwall: batch front end over the library. One verb per run; the report
// goes to stdout as a single JSON document, diagnostics to stderr.

#include <chrono>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flatwall/decomposition.hpp"
#include "flatwall/generators.hpp"
#include "flatwall/json_io.hpp"
#include "flatwall/minors.hpp"
#include "flatwall/rural.hpp"
#include "flatwall/structure.hpp"
#include "flatwall/wall.hpp"

using namespace flatwall;
using io::Json;

namespace {

constexpr int kSchemaVersion = 1;

enum Exit { kOk = 0, kRefuted = 1, kInputError = 2, kUndetermined = 3 };

struct Options {
  std::uint64_t seed = 0;
  long budget_ms = 0;
  std::string graph, decomposition, model, wall, division, apices, pattern, cert;
  std::string family;
  std::vector<std::string> params;
  int k = 1;
  int threshold = 1;
  int windows = 0;
  std::size_t cap = kDefaultTreewidthCap;
  std::size_t max_candidates = 5000;
};

std::chrono::milliseconds budget(const Options& o) { return std::chrono::milliseconds{o.budget_ms}; }

Json vertices_json(const std::vector<Vertex>& p) { return Json(p); }

std::map<std::string, int> parse_params(const std::vector<std::string>& raw) {
  std::map<std::string, int> out;
  for (const auto& item : raw) {
    std::size_t start = 0;
    while (start <= item.size()) {
      auto end = item.find(',', start);
      if (end == std::string::npos) end = item.size();
      auto kv = item.substr(start, end - start);
      auto eq = kv.find('=');
      if (eq == std::string::npos || eq == 0) throw io::FormatError("--params: expected key=value, got \"" + kv + "\"");
      try {
        std::size_t used = 0;
        int value = std::stoi(kv.substr(eq + 1), &used);
        if (used != kv.size() - eq - 1) throw std::invalid_argument("trailing");
        out[kv.substr(0, eq)] = value;
      } catch (const std::logic_error&) {
        throw io::FormatError("--params: \"" + kv + "\" has a non-integer value");
      }
      start = end + 1;
    }
  }
  return out;
}

int param(const std::map<std::string, int>& ps, const std::string& key, std::optional<int> fallback = std::nullopt) {
  auto it = ps.find(key);
  if (it != ps.end()) return it->second;
  if (fallback) return *fallback;
  throw io::FormatError("--params: missing " + key);
}

Json coord_metadata(const CoordGraph& cg) {
  Json coords = Json::array();
  for (Vertex v : cg.graph.vertices()) {
    auto [x, y] = cg.coords.at(v);
    coords.push_back({x, y});
  }
  return coords;
}

int cmd_generate(const Options& o, Json& report) {
  auto ps = parse_params(o.params);
  Graph g;
  Json meta{{"family", o.family}, {"params", ps}};
  if (o.family == "grid") {
    int k = param(ps, "k");
    auto cg = grid(k, param(ps, "r", k));
    g = cg.graph;
    meta["coords"] = coord_metadata(cg);
    meta["corners"] = grid_corners(cg);
  } else if (o.family == "gamma" || o.family == "gamma-star") {
    auto gm = o.family == "gamma" ? gamma(param(ps, "k")) : gamma_star(param(ps, "k"));
    g = gm.grid.graph;
    meta["coords"] = coord_metadata(gm.grid);
    meta["loaded"] = gm.loaded;
  } else if (o.family == "wall") {
    auto w = wall(param(ps, "k"));
    g = w.graph();
    meta["coords"] = coord_metadata(w.grid);
    meta["corners"] = std::vector<Vertex>(w.corners.begin(), w.corners.end());
    meta["perimeter"] = w.perimeter();
  } else if (o.family == "pyramid") {
    g = pyramid(param(ps, "k"), param(ps, "l"));
  } else if (o.family == "lower-bound") {
    g = lower_bound_graph(param(ps, "k"), param(ps, "h"));
  } else {
    throw io::FormatError("--family: unknown family \"" + o.family + "\"");
  }
  report.update(io::graph_to_json(g));
  report["metadata"] = meta;
  return kOk;
}

int cmd_treewidth(const Options& o, Json& report) {
  auto g = io::graph_from_json(io::read_document(o.graph));
  auto r = exact_treewidth(g, o.cap);
  report["treewidth"] = r.treewidth;
  report["decomposition"] = io::decomposition_to_json(r.decomposition);
  return kOk;
}

int cmd_td_validate(const Options& o, Json& report) {
  auto g = io::graph_from_json(io::read_document(o.graph));
  auto td = io::decomposition_from_json(io::read_document(o.decomposition), g);
  auto v = validate(td);
  report["valid"] = v.valid;
  if (!v.valid) {
    report["condition"] = v.condition;
    report["message"] = v.message;
    return kRefuted;
  }
  report["width"] = width(td);
  report["small"] = is_small(td);
  return kOk;
}

int cmd_verify_minor(const Options& o, Json& report) {
  auto g = io::graph_from_json(io::read_document(o.graph));
  auto m = io::minor_from_json(io::read_document(o.model), g);
  auto v = verify_minor(m);
  report["valid"] = v.valid;
  if (!v.valid) {
    report["condition"] = v.condition;
    report["message"] = v.message;
    return kRefuted;
  }
  return kOk;
}

// Reads the wall against `host`; an invalid wall is a refutation.
std::optional<SubdividedWall> load_wall(const Options& o, const Graph& host, Json& report) {
  auto w = io::wall_from_json(io::read_document(o.wall), host);
  auto wv = validate_wall(w);
  if (!wv.valid) {
    report["verdict"] = "invalid-wall";
    report["message"] = wv.message;
    return std::nullopt;
  }
  return w;
}

int cmd_check_flat(const Options& o, Json& report) {
  auto g = io::graph_from_json(io::read_document(o.graph));
  auto w = load_wall(o, g, report);
  if (!w) return kRefuted;
  auto c = compass(g, *w);
  auto r = is_flat(c, budget(o));
  report["nodes"] = r.nodes;
  report["transcript_hash"] = r.transcript_hash;
  switch (r.verdict) {
    case Flatness::Flat:
      report["verdict"] = "flat";
      return kOk;
    case Flatness::NotFlat:
      report["verdict"] = "not-flat";
      report["witness"] = {{"path13", vertices_json(r.path13)}, {"path24", vertices_json(r.path24)}};
      return kRefuted;
    case Flatness::Unknown:
      break;
  }
  report["verdict"] = "unknown";
  return kUndetermined;
}

int cmd_check_rural(const Options& o, Json& report) {
  auto g = io::graph_from_json(io::read_document(o.graph));
  auto w = load_wall(o, g, report);
  if (!w) return kRefuted;
  auto c = compass(g, *w);
  auto rd = io::division_from_json(io::read_document(o.division), c);
  auto v = validate_rural(rd);
  report["valid"] = v.valid;
  if (!v.valid) {
    report["property"] = v.property;
    report["message"] = v.message;
    return kRefuted;
  }
  report["flaps"] = rd.flaps.size();
  return kOk;
}

VertexSet read_apices(const std::string& path) {
  auto j = io::read_document(path);
  if (j.is_object() && j.contains("apices")) j = j.at("apices");
  if (!j.is_array()) throw io::FormatError(path + ": expected a vertex list or {\"apices\": [...]}");
  try {
    auto vs = j.get<std::vector<Vertex>>();
    return {vs.begin(), vs.end()};
  } catch (const nlohmann::json::exception& e) {
    throw io::FormatError(path + ": " + e.what());
  }
}

int cmd_reduce_apex(const Options& o, Json& report) {
  auto g = io::graph_from_json(io::read_document(o.graph));
  auto h = io::graph_from_json(io::read_document(o.pattern));
  auto a = read_apices(o.apices);
  for (Vertex v : a) {
    if (!g.has_vertex(v)) throw io::FormatError("--apices: vertex " + std::to_string(v) + " is not in the graph");
  }
  auto w = load_wall(o, remove_vertices(g, a), report);
  if (!w) return kRefuted;
  auto an = apex_number(h);
  StructureConstants consts{static_cast<std::int64_t>(h.num_vertices()), an.number,
                            static_cast<std::int64_t>(a.size()), 1, 1};
  std::optional<int> windows;
  if (o.windows > 0) windows = o.windows;
  try {
    auto r = apex_reduce(g, h, a, *w, o.k, consts, windows);
    report["outcome"] = "reduced";
    report["a_prime"] = Json(std::vector<Vertex>(r.a_prime.begin(), r.a_prime.end()));
    report["dropped"] = r.dropped;
    report["wall"] = io::wall_to_json(r.w_prime);
    report["q"] = r.q;
    return kOk;
  } catch (const HMinorFound& e) {
    report["outcome"] = "h-minor-found";
    report["message"] = e.what();
    report["minor"] = io::minor_to_json(e.evidence);
    return kRefuted;
  }
}

TrichotomyLimits limits(const Options& o) {
  TrichotomyLimits l;
  l.max_wall_candidates = o.max_candidates;
  l.budget = budget(o);
  return l;
}

int cmd_trichotomy(const Options& o, Json& report) {
  auto g = io::graph_from_json(io::read_document(o.graph));
  auto h = io::graph_from_json(io::read_document(o.pattern));
  auto out = trichotomy_check(g, h, o.k, o.threshold, limits(o));
  report["note"] = out.note;
  if (!out.certificate) {
    report["outcome"] = "undetermined";
    return kUndetermined;
  }
  report["outcome"] = "certificate";
  report["certificate"] = io::certificate_to_json(*out.certificate);
  return kOk;
}

int cmd_verify_cert(const Options& o, Json& report) {
  auto g = io::graph_from_json(io::read_document(o.graph));
  auto h = io::graph_from_json(io::read_document(o.pattern));
  auto doc = io::read_document(o.cert);
  if (doc.is_object() && doc.contains("certificate")) doc = doc.at("certificate");
  auto cert = io::certificate_from_json(doc, g);
  auto v = verify_certificate(g, h, o.k, cert);
  report["valid"] = v.valid;
  report["clause"] = cert.clause;
  if (!v.valid) {
    report["condition"] = v.condition;
    report["message"] = v.message;
    return kRefuted;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flatwall: walls, flatness, rural divisions and structure certificates"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "seed for randomised steps (default 0)");
  app.add_option("--budget-ms", o.budget_ms, "search deadline in milliseconds, 0 for none")->check(CLI::NonNegativeNumber);

  auto existing = CLI::Validator(
      [](std::string& path) -> std::string {
        if (path == "-") return {};
        return CLI::ExistingFile(path);
      },
      "FILE|-");

  auto input = [&](CLI::App* sub, const char* flag, std::string& target, const char* help) {
    sub->add_option(flag, target, help)->required()->check(existing);
  };

  std::map<std::string, std::function<int(const Options&, Json&)>> handlers;

  auto* gen = app.add_subcommand("generate", "emit a generated graph");
  gen->add_option("--family", o.family, "grid|gamma|gamma-star|wall|pyramid|lower-bound")
      ->required()
      ->check(CLI::IsMember({"grid", "gamma", "gamma-star", "wall", "pyramid", "lower-bound"}));
  gen->add_option("--params", o.params, "key=value[,key=value] (k, r, l, h)");
  handlers["generate"] = cmd_generate;

  auto* tw = app.add_subcommand("treewidth", "exact treewidth with an optimal decomposition");
  input(tw, "--graph", o.graph, "graph JSON");
  tw->add_option("--cap", o.cap, "largest graph accepted");
  handlers["treewidth"] = cmd_treewidth;

  auto* tdv = app.add_subcommand("td-validate", "check a tree decomposition");
  input(tdv, "--graph", o.graph, "graph JSON");
  input(tdv, "--decomposition", o.decomposition, "decomposition JSON");
  handlers["td-validate"] = cmd_td_validate;

  auto* vm = app.add_subcommand("verify-minor", "check a minor model");
  input(vm, "--graph", o.graph, "host graph JSON");
  input(vm, "--model", o.model, "minor certificate JSON");
  handlers["verify-minor"] = cmd_verify_minor;

  auto* cf = app.add_subcommand("check-flat", "decide flatness of a wall's compass");
  input(cf, "--graph", o.graph, "graph JSON");
  input(cf, "--wall", o.wall, "wall certificate JSON");
  handlers["check-flat"] = cmd_check_flat;

  auto* cr = app.add_subcommand("check-rural", "validate a rural division");
  input(cr, "--graph", o.graph, "graph JSON");
  input(cr, "--wall", o.wall, "wall certificate JSON");
  input(cr, "--division", o.division, "division JSON");
  handlers["check-rural"] = cmd_check_rural;

  auto* ra = app.add_subcommand("reduce-apex", "drop one apex that misses a window compass");
  input(ra, "--graph", o.graph, "graph JSON");
  input(ra, "--apices", o.apices, "apex list JSON");
  input(ra, "--wall", o.wall, "wall certificate in the graph minus the apices");
  input(ra, "--pattern", o.pattern, "H as graph JSON");
  ra->add_option("--k", o.k, "subwall height")->check(CLI::PositiveNumber);
  ra->add_option("--windows", o.windows, "number of windows (default from the constants)");
  handlers["reduce-apex"] = cmd_reduce_apex;

  auto* tri = app.add_subcommand("trichotomy", "find a structure certificate");
  input(tri, "--graph", o.graph, "graph JSON");
  input(tri, "--pattern", o.pattern, "H as graph JSON");
  tri->add_option("--k", o.k, "wall height")->check(CLI::PositiveNumber);
  tri->add_option("--threshold", o.threshold, "treewidth threshold")->check(CLI::NonNegativeNumber);
  tri->add_option("--max-wall-candidates", o.max_candidates, "wall candidates tried in clause 3");
  handlers["trichotomy"] = cmd_trichotomy;

  auto* vc = app.add_subcommand("verify-cert", "check a structure certificate");
  input(vc, "--graph", o.graph, "graph JSON");
  input(vc, "--pattern", o.pattern, "H as graph JSON");
  input(vc, "--cert", o.cert, "certificate JSON (or a trichotomy report)");
  vc->add_option("--k", o.k, "wall height")->check(CLI::PositiveNumber);
  handlers["verify-cert"] = cmd_verify_cert;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  Json report{{"schema_version", kSchemaVersion}, {"command", verb}};
  int status = kOk;
  try {
    status = handlers.at(verb)(o, report);
  } catch (const CapExceeded& e) {
    report["outcome"] = "undetermined";
    report["message"] = e.what();
    status = kUndetermined;
  } catch (const BudgetExceeded& e) {
    report["outcome"] = "undetermined";
    report["message"] = e.what();
    status = kUndetermined;
  } catch (const std::invalid_argument& e) {
    // FormatError and the library's precondition errors.
    std::cerr << "flatwall " << verb << ": " << e.what() << "\n";
    report["error"] = e.what();
    status = kInputError;
  }
  std::cout << report.dump(2) << "\n";
  return status;
}
