#include "zptower/cover.hpp"

#include <algorithm>
#include <set>

namespace zpt {

void check_voltage(const Multigraph& g, const VoltageAssignment& a) {
  for (const auto& kv : a.exponents())
    if (!g.find_edge(kv.first)) throw InputError("voltage on unknown edge '" + kv.first + "'");
}

VoltageAssignment restrict_voltage(const Multigraph& g, const VoltageAssignment& a) {
  VoltageAssignment out;
  for (const auto& [id, x] : a.exponents())
    if (g.find_edge(id)) out.set(id, x);
  return out;
}

long dart_voltage(const Multigraph& g, const VoltageAssignment& a, std::size_t dart) {
  long x = a.of(g.edge(dart / 2).id);
  return dart % 2 == 0 ? x : -x;
}

std::uint64_t fiber_size(const RamificationData& r, const VertexId& v, unsigned long p, unsigned n) {
  auto k = r.depth(v);
  return upow(p, k ? std::min(n, *k) : n);
}

CoverGraph build_cover(const Multigraph& g, const RamificationData& r, const VoltageAssignment& a,
                       unsigned long p, unsigned n) {
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
  check_marks(g, r);
  check_voltage(g, a);
  const std::uint64_t sheets = upow(p, n);

  CoverGraph c;
  c.p = p;
  c.n = n;
  c.base_vertex_count = g.vertex_count();
  for (const auto& e : g.edges()) c.base_edge_ids.push_back(e.id);

  std::vector<std::uint64_t> offset(g.vertex_count());
  std::vector<std::uint64_t> fiber(g.vertex_count());
  std::vector<VertexId> ids;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const VertexId& id = g.vertex(v);
    offset[v] = ids.size();
    fiber[v] = fiber_size(r, id, p, n);
    auto k = r.depth(id);
    for (std::uint64_t s = 0; s < fiber[v]; ++s) {
      VertexId cid = fiber[v] == 1 ? id : id + "#" + std::to_string(s);
      if (k) c.ramification.mark(cid, *k > n ? *k - n : 0);
      ids.push_back(std::move(cid));
      c.vertex_base.push_back(v);
      c.vertex_sheet.push_back(s);
    }
  }

  std::vector<EdgeSpec> es;
  es.reserve(g.edge_count() * sheets);
  const auto S = static_cast<long long>(sheets);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const long long shift = ((static_cast<long long>(a.of(ed.id)) % S) + S) % S;
    for (std::uint64_t s = 0; s < sheets; ++s) {
      std::uint64_t from = offset[ed.from] + s % fiber[ed.from];
      std::uint64_t to = offset[ed.to] + (s + static_cast<std::uint64_t>(shift)) % fiber[ed.to];
      es.push_back({sheets == 1 ? ed.id : ed.id + "#" + std::to_string(s), ids[from], ids[to]});
      c.edge_base.push_back(e);
      c.edge_sheet.push_back(s);
    }
  }
  c.graph = build_graph(std::move(ids), es);
  return c;
}

RamifiedGraph segment_preimage(const CoverGraph& c, const Segment& s) {
  if (s.edges.size() != s.edge_ids.size()) throw InputError("malformed segment");
  std::set<std::size_t> base_edges;
  for (std::size_t k = 0; k < s.edges.size(); ++k) {
    if (s.edges[k] >= c.base_edge_ids.size() || c.base_edge_ids[s.edges[k]] != s.edge_ids[k])
      throw InputError("segment does not belong to the base graph of this cover");
    base_edges.insert(s.edges[k]);
  }
  for (auto v : s.ramified)
    if (v >= c.base_vertex_count) throw InputError("segment does not belong to the base graph of this cover");

  const Multigraph& X = c.graph;
  std::vector<bool> keep_e(X.edge_count(), false);
  std::vector<bool> keep_v(X.vertex_count(), false);
  for (std::size_t e = 0; e < X.edge_count(); ++e) {
    if (!base_edges.count(c.edge_base[e])) continue;
    keep_e[e] = true;
    keep_v[X.edge(e).from] = true;
    keep_v[X.edge(e).to] = true;
  }
  RamifiedGraph out{subgraph(X, keep_v, keep_e), {}};
  for (std::size_t v = 0; v < X.vertex_count(); ++v) {
    if (!keep_v[v]) continue;
    if (std::find(s.ramified.begin(), s.ramified.end(), c.vertex_base[v]) == s.ramified.end()) continue;
    out.ramification.mark(X.vertex(v), c.ramification.depth(X.vertex(v)).value_or(0));
  }
  return out;
}

}  // namespace zpt
