#include "graph_json.hpp"

#include <fstream>
#include <sstream>

namespace zpt::io {

namespace {

std::string id_of(const nlohmann::json& x, const char* what) {
  if (x.is_string()) return x.get<std::string>();
  if (x.is_number_integer()) return std::to_string(x.get<long long>());
  throw InputError(std::string(what) + " must be a string or an integer");
}

long integer_of(const nlohmann::json& x, const char* what) {
  if (x.is_number_integer()) return x.get<long>();
  if (x.is_string()) {
    const auto s = x.get<std::string>();
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == s.size() && !s.empty()) return v;
  }
  throw InputError(std::string(what) + " must be an integer");
}

}  // namespace

GraphInput parse_graph(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("graph document must be a JSON object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) throw InputError("missing 'vertices' array");
  std::vector<VertexId> ids;
  for (const auto& v : doc["vertices"]) ids.push_back(id_of(v, "vertex id"));

  std::vector<EdgeSpec> edges;
  std::vector<long> volts;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw InputError("'edges' must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_object() || !e.contains("from") || !e.contains("to"))
        throw InputError("each edge needs 'from' and 'to'");
      EdgeSpec s{e.contains("id") ? id_of(e["id"], "edge id") : std::string(), id_of(e["from"], "edge endpoint"),
                 id_of(e["to"], "edge endpoint")};
      edges.push_back(std::move(s));
      volts.push_back(e.contains("voltage") ? integer_of(e["voltage"], "voltage") : 0);
    }
  }
  GraphInput in;
  in.graph = build_graph(std::move(ids), edges);
  for (std::size_t k = 0; k < volts.size(); ++k) in.voltage.set(in.graph.edge(k).id, volts[k]);

  if (doc.contains("ramified")) {
    if (!doc["ramified"].is_array()) throw InputError("'ramified' must be an array");
    for (const auto& m : doc["ramified"]) {
      VertexId v;
      long depth = 0;
      if (m.is_object()) {
        if (!m.contains("vertex")) throw InputError("ramification entry needs 'vertex'");
        v = id_of(m["vertex"], "ramified vertex");
        if (m.contains("depth")) depth = integer_of(m["depth"], "depth");
      } else {
        v = id_of(m, "ramified vertex");
      }
      if (depth < 0) throw InputError("ramification depth must be non-negative");
      if (in.ramification.is_ramified(v)) throw InputError("vertex '" + v + "' is marked twice");
      in.ramification.mark(v, static_cast<unsigned>(depth));
    }
  }
  check_marks(in.graph, in.ramification);
  return in;
}

GraphInput parse_graph_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return parse_graph(doc);
}

GraphInput load_graph_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_graph_text(ss.str());
}

Json graph_to_json(const Multigraph& g, const RamificationData& r, const VoltageAssignment& a) {
  Json out;
  out["vertices"] = g.vertices();
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    Json x;
    x["id"] = e.id;
    x["from"] = g.vertex(e.from);
    x["to"] = g.vertex(e.to);
    if (long v = a.of(e.id); v != 0) x["voltage"] = v;
    edges.push_back(std::move(x));
  }
  out["edges"] = std::move(edges);
  Json ram = Json::array();
  for (auto v : ramified_indices(g, r)) {
    Json x;
    x["vertex"] = g.vertex(v);
    x["depth"] = *r.depth(g.vertex(v));
    ram.push_back(std::move(x));
  }
  out["ramified"] = std::move(ram);
  return out;
}

Json cover_to_json(const Multigraph& base, const CoverGraph& c) {
  Json out = graph_to_json(c.graph, c.ramification);
  Json pv, pe;
  for (std::size_t v = 0; v < c.graph.vertex_count(); ++v) pv[c.graph.vertex(v)] = base.vertex(c.vertex_base[v]);
  for (std::size_t e = 0; e < c.graph.edge_count(); ++e) pe[c.graph.edge(e).id] = base.edge(c.edge_base[e]).id;
  out["projection"] = {{"vertices", pv}, {"edges", pe}};
  out["p"] = std::to_string(c.p);
  out["n"] = std::to_string(c.n);
  return out;
}

Json decomposition_to_json(const Multigraph& g, const SegmentDecomposition& d) {
  Json out;
  out["status"] = "ok";
  out["ramified_count"] = std::to_string(d.l());
  out["two_segments"] = std::to_string(d.two_segments);
  Json segs = Json::array();
  for (const auto& s : d.segments) {
    Json x;
    x["colour"] = std::to_string(s.colour);
    x["t"] = std::to_string(s.t);
    Json ends = Json::array();
    for (auto v : s.ramified) ends.push_back(g.vertex(v));
    x["endpoints"] = std::move(ends);
    x["edges"] = s.edge_ids;
    Json verts = Json::array();
    for (auto v : s.vertices) verts.push_back(g.vertex(v));
    x["vertices"] = std::move(verts);
    if (s.loop_only) x["flag"] = "loop at ramified vertex";
    segs.push_back(std::move(x));
  }
  out["segments"] = std::move(segs);
  Json sets = Json::array();
  for (const auto& I : admissible_sets(d)) {
    Json x = Json::array();
    for (auto i : I) x.push_back(std::to_string(i));
    sets.push_back(std::move(x));
  }
  out["admissible_sets"] = std::move(sets);
  return out;
}

Json failure_to_json(const NoDecomposition& f) {
  Json out;
  out["status"] = "no_decomposition";
  out["reason"] = f.reason;
  out["witness_edge"] = f.edge_id;
  Json pairs = Json::array();
  for (const auto& [a, b] : f.pairs) pairs.push_back(Json::array({a, b}));
  out["conflicting_pairs"] = std::move(pairs);
  return out;
}

Json poly_to_json(const IntPoly& f) {
  Json out = Json::array();
  for (const auto& c : f.coeffs()) out.push_back(c.get_str());
  return out;
}

Json laurent_to_json(const LaurentPoly& f) {
  Json out = Json::array();
  for (const auto& [e, c] : f.terms()) out.push_back(Json::array({std::to_string(e), c.get_str()}));
  return out;
}

Json triple_to_json(const InvariantTriple& t) {
  Json out;
  out["mu"] = std::to_string(t.mu);
  out["lambda"] = std::to_string(t.lambda);
  if (t.nu) out["nu"] = std::to_string(*t.nu);
  return out;
}

Json fit_to_json(const EmpiricalFit& f, const char* count_name) {
  Json out;
  Json levels = Json::array();
  for (const auto& l : f.levels) {
    Json x;
    x["n"] = std::to_string(l.n);
    x["vertices"] = std::to_string(l.vertices);
    x["edges"] = std::to_string(l.edges);
    x[count_name] = l.count.get_str();
    x["ord_p"] = std::to_string(l.ord);
    levels.push_back(std::move(x));
  }
  out["levels"] = std::move(levels);
  if (f.fit) out["fit"] = triple_to_json(*f.fit);
  if (f.previous) out["previous_fit"] = triple_to_json(*f.previous);
  out["stable"] = f.stable;
  out["note"] = f.note;
  return out;
}

Json verdict_to_json(const Verdict& v) {
  Json out;
  out["identity"] = v.name;
  out["lhs"] = v.lhs;
  out["rhs"] = v.rhs;
  out["holds"] = v.holds;
  if (!v.notes.empty()) out["notes"] = v.notes;
  if (!v.checks.empty()) {
    Json cs = Json::array();
    for (const auto& c : v.checks) cs.push_back(verdict_to_json(c));
    out["checks"] = std::move(cs);
  }
  return out;
}

}  // namespace zpt::io
