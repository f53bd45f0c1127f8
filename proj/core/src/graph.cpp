#include "zptower/graph.hpp"

#include <numeric>
#include <set>

namespace zpt {

Multigraph build_graph(std::vector<VertexId> vertex_ids, const std::vector<EdgeSpec>& edges) {
  Multigraph g;
  g.vertices_ = std::move(vertex_ids);
  g.out_.resize(g.vertices_.size());
  for (std::size_t i = 0; i < g.vertices_.size(); ++i) {
    if (!g.vindex_.emplace(g.vertices_[i], i).second)
      throw InputError("duplicate vertex id '" + g.vertices_[i] + "'");
  }
  g.edges_.reserve(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& s = edges[k];
    auto a = g.find_vertex(s.from);
    auto b = g.find_vertex(s.to);
    if (!a) throw InputError("edge endpoint '" + s.from + "' is not a vertex");
    if (!b) throw InputError("edge endpoint '" + s.to + "' is not a vertex");
    std::string id = s.id.empty() ? "e" + std::to_string(k + 1) : s.id;
    if (!g.eindex_.emplace(id, k).second) throw InputError("duplicate edge id '" + id + "'");
    g.edges_.push_back(Edge{id, *a, *b});
    g.out_[*a].push_back(2 * k);
    g.out_[*b].push_back(2 * k + 1);
  }
  return g;
}

std::optional<std::size_t> Multigraph::find_vertex(const VertexId& id) const {
  auto it = vindex_.find(id);
  if (it == vindex_.end()) return std::nullopt;
  return it->second;
}

std::size_t Multigraph::index_of(const VertexId& id) const {
  auto v = find_vertex(id);
  if (!v) throw InputError("unknown vertex '" + id + "'");
  return *v;
}

std::optional<std::size_t> Multigraph::find_edge(const std::string& id) const {
  auto it = eindex_.find(id);
  if (it == eindex_.end()) return std::nullopt;
  return it->second;
}

Dart Multigraph::dart(std::size_t d) const {
  const Edge& e = edges_.at(d / 2);
  if (d % 2 == 0) return Dart{e.from, e.to, d / 2};
  return Dart{e.to, e.from, d / 2};
}

std::optional<unsigned> RamificationData::depth(const VertexId& v) const {
  auto it = marks_.find(v);
  if (it == marks_.end()) return std::nullopt;
  return it->second;
}

unsigned RamificationData::max_depth() const {
  unsigned m = 0;
  for (const auto& kv : marks_) m = std::max(m, kv.second);
  return m;
}

bool RamificationData::all_total() const {
  for (const auto& kv : marks_)
    if (kv.second != 0) return false;
  return true;
}

void check_marks(const Multigraph& g, const RamificationData& r) {
  for (const auto& kv : r.marks())
    if (!g.find_vertex(kv.first)) throw InputError("ramified vertex '" + kv.first + "' is not a vertex");
}

std::vector<std::size_t> ramified_indices(const Multigraph& g, const RamificationData& r) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (r.is_ramified(g.vertex(v))) out.push_back(v);
  return out;
}

Multigraph subgraph(const Multigraph& g, const std::vector<bool>& keep_vertex,
                    const std::vector<bool>& keep_edge) {
  std::vector<VertexId> ids;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (keep_vertex[v]) ids.push_back(g.vertex(v));
  std::vector<EdgeSpec> es;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!keep_edge[e]) continue;
    const Edge& ed = g.edge(e);
    es.push_back({ed.id, g.vertex(ed.from), g.vertex(ed.to)});
  }
  return build_graph(std::move(ids), es);
}

Multigraph prune_tails(const Multigraph& g, const RamificationData& r) {
  std::vector<bool> alive_v(g.vertex_count(), true);
  std::vector<bool> alive_e(g.edge_count(), true);
  std::vector<std::size_t> deg(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);

  auto is_tail = [&](std::size_t v) {
    if (!alive_v[v] || deg[v] != 1 || r.is_ramified(g.vertex(v))) return false;
    return true;
  };
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (is_tail(v)) stack.push_back(v);
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    if (!is_tail(v)) continue;
    for (std::size_t d : g.darts_at(v)) {
      std::size_t e = d / 2;
      if (!alive_e[e]) continue;
      alive_e[e] = false;
      std::size_t w = g.dart(d).terminus;
      --deg[w];
      --deg[v];
      if (is_tail(w)) stack.push_back(w);
    }
    alive_v[v] = false;
  }
  return subgraph(g, alive_v, alive_e);
}

IntMatrix laplacian(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  IntMatrix L(n, n, BigInt(0));
  for (std::size_t d = 0; d < g.dart_count(); ++d) {
    Dart x = g.dart(d);
    L(x.origin, x.origin) += 1;
    L(x.origin, x.terminus) -= 1;
  }
  return L;
}

std::vector<std::size_t> components(const Multigraph& g) {
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(g.vertex_count(), none);
  std::size_t next = 0;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (label[s] != none) continue;
    std::vector<std::size_t> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t d : g.darts_at(v)) {
        std::size_t w = g.dart(d).terminus;
        if (label[w] == none) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

bool is_connected(const Multigraph& g) {
  if (g.vertex_count() == 0) return true;
  auto lab = components(g);
  for (auto l : lab)
    if (l != 0) return false;
  return true;
}

RamifiedGraph glue(const Multigraph& g1, const RamificationData& r1, const Multigraph& g2,
                   const RamificationData& r2,
                   const std::vector<std::pair<VertexId, VertexId>>& identification) {
  if (identification.empty() || identification.size() > 2)
    throw InputError("gluing identifies one or two vertex pairs");
  check_marks(g1, r1);
  check_marks(g2, r2);
  std::map<VertexId, VertexId> g2_to_g1;
  std::set<VertexId> used1;
  for (const auto& [a, b] : identification) {
    if (!g1.find_vertex(a)) throw InputError("gluing vertex '" + a + "' missing from first graph");
    if (!g2.find_vertex(b)) throw InputError("gluing vertex '" + b + "' missing from second graph");
    if (!r1.is_ramified(a)) throw InputError("gluing vertex '" + a + "' is unramified");
    if (!r2.is_ramified(b)) throw InputError("gluing vertex '" + b + "' is unramified");
    if (!used1.insert(a).second || !g2_to_g1.emplace(b, a).second)
      throw InputError("gluing pairs must be distinct");
  }

  std::vector<VertexId> ids = g1.vertices();
  std::set<VertexId> taken(ids.begin(), ids.end());
  std::map<VertexId, VertexId> rename;
  auto fresh = [](std::set<VertexId>& pool, std::string id) {
    while (pool.count(id)) id += "'";
    pool.insert(id);
    return id;
  };
  for (const auto& v : g2.vertices()) {
    auto it = g2_to_g1.find(v);
    if (it != g2_to_g1.end()) {
      rename[v] = it->second;
      continue;
    }
    rename[v] = fresh(taken, v);
    ids.push_back(rename[v]);
  }

  std::vector<EdgeSpec> es;
  std::set<std::string> etaken;
  for (const auto& e : g1.edges()) {
    es.push_back({e.id, g1.vertex(e.from), g1.vertex(e.to)});
    etaken.insert(e.id);
  }
  for (const auto& e : g2.edges())
    es.push_back({fresh(etaken, e.id), rename[g2.vertex(e.from)], rename[g2.vertex(e.to)]});

  RamifiedGraph out{build_graph(std::move(ids), es), r1};
  for (const auto& [v, k] : r2.marks()) {
    if (g2_to_g1.count(v)) continue;
    out.ramification.mark(rename[v], k);
  }
  return out;
}

}  // namespace zpt
