#include "zptower/seal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace zpt {

std::vector<std::size_t> AdmissiblePath::edges() const {
  std::vector<std::size_t> out;
  out.reserve(darts.size());
  for (auto d : darts) out.push_back(d / 2);
  return out;
}

namespace {

struct PathSearch {
  const Multigraph& g;
  const RamificationData& r;
  std::size_t target;
  std::size_t cap;
  std::vector<char> on_path;
  std::vector<char> edge_used;
  std::vector<std::size_t> stack;
  std::set<std::vector<std::size_t>> seen_cycles;
  std::vector<AdmissiblePath> out;
  std::size_t start = 0;

  void record() {
    AdmissiblePath p{start, target, stack};
    if (start == target) {
      auto fwd = p.edges();
      auto rev = fwd;
      std::reverse(rev.begin(), rev.end());
      if (!seen_cycles.insert(std::min(fwd, rev)).second) return;
    }
    if (out.size() >= cap)
      throw CapExceeded("admissible path cap of " + std::to_string(cap) + " exceeded", out.size());
    out.push_back(std::move(p));
  }

  void walk(std::size_t x) {
    for (std::size_t d : g.darts_at(x)) {
      const std::size_t e = d / 2;
      if (edge_used[e]) continue;
      const std::size_t y = g.dart(d).terminus;
      if (y == target) {
        stack.push_back(d);
        record();
        stack.pop_back();
        continue;
      }
      if (on_path[y] || r.is_ramified(g.vertex(y))) continue;
      on_path[y] = 1;
      edge_used[e] = 1;
      stack.push_back(d);
      walk(y);
      stack.pop_back();
      edge_used[e] = 0;
      on_path[y] = 0;
    }
  }
};

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

}  // namespace

std::vector<AdmissiblePath> admissible_paths(const Multigraph& g, const RamificationData& r,
                                             const VertexId& v, const VertexId& w,
                                             std::size_t cap) {
  const std::size_t a = g.index_of(v);
  const std::size_t b = g.index_of(w);
  if (!r.is_ramified(v) || !r.is_ramified(w)) throw InputError("admissible paths join ramified vertices");
  PathSearch s{g, r, b, cap, std::vector<char>(g.vertex_count(), 0),
               std::vector<char>(g.edge_count(), 0), {}, {}, {}};
  s.start = a;
  s.on_path[a] = 1;
  s.walk(a);
  return std::move(s.out);
}

DecomposeResult decompose(const Multigraph& g, const RamificationData& r, std::size_t path_cap) {
  check_marks(g, r);
  if (!is_connected(g)) throw HypothesisError("graph is disconnected");
  const auto ram = ramified_indices(g, r);
  if (ram.empty()) throw HypothesisError("graph has no ramified vertex");

  // (1)-(2): edges on admissible paths between each pair of distinct
  // ramified vertices; an edge claimed by two pairs is a conflict.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::size_t> owner(g.edge_count(), kNone);
  for (std::size_t x = 0; x < ram.size(); ++x) {
    for (std::size_t y = x + 1; y < ram.size(); ++y) {
      auto paths = admissible_paths(g, r, g.vertex(ram[x]), g.vertex(ram[y]), path_cap);
      if (paths.empty()) continue;
      const std::size_t pid = pairs.size();
      pairs.emplace_back(ram[x], ram[y]);
      for (const auto& p : paths) {
        for (auto e : p.edges()) {
          if (owner[e] == kNone || owner[e] == pid) {
            owner[e] = pid;
            continue;
          }
          const auto& q = pairs[owner[e]];
          return NoDecomposition{e, g.edge(e).id,
                                 {{g.vertex(q.first), g.vertex(q.second)},
                                  {g.vertex(ram[x]), g.vertex(ram[y])}},
                                 "edge lies on admissible paths of two ramified pairs"};
        }
      }
    }
  }

  // (3)-(4): edges are grouped by sharing an unramified vertex.
  UnionFind uf(g.edge_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (r.is_ramified(g.vertex(v))) continue;
    const auto& ds = g.darts_at(v);
    for (std::size_t k = 1; k < ds.size(); ++k) uf.unite(ds[0] / 2, ds[k] / 2);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t e = 0; e < g.edge_count(); ++e) groups[uf.find(e)].push_back(e);

  std::vector<Segment> two, one;
  for (const auto& [root, es] : groups) {
    Segment s;
    s.edges = es;
    std::set<std::size_t> verts, touched;
    std::size_t pair_id = kNone;
    for (auto e : es) {
      s.edge_ids.push_back(g.edge(e).id);
      for (auto v : {g.edge(e).from, g.edge(e).to}) {
        verts.insert(v);
        if (r.is_ramified(g.vertex(v))) touched.insert(v);
      }
      if (owner[e] == kNone) continue;
      if (pair_id != kNone && pair_id != owner[e]) {
        const auto& q1 = pairs[pair_id];
        const auto& q2 = pairs[owner[e]];
        return NoDecomposition{e, g.edge(e).id,
                               {{g.vertex(q1.first), g.vertex(q1.second)},
                                {g.vertex(q2.first), g.vertex(q2.second)}},
                               "segments of two ramified pairs share an unramified vertex"};
      }
      pair_id = owner[e];
    }
    s.vertices.assign(verts.begin(), verts.end());
    s.ramified.assign(touched.begin(), touched.end());
    if (pair_id != kNone) {
      const auto& q = pairs[pair_id];
      if (touched.size() != 2 || !touched.count(q.first) || !touched.count(q.second)) {
        std::vector<std::pair<VertexId, VertexId>> wp{{g.vertex(q.first), g.vertex(q.second)}};
        return NoDecomposition{es.front(), g.edge(es.front()).id, wp,
                               "segment touches a third ramified vertex"};
      }
      s.t = 2;
      two.push_back(std::move(s));
    } else if (touched.size() == 1) {
      s.t = 1;
      s.loop_only = es.size() == 1 && g.is_loop(es.front());
      one.push_back(std::move(s));
    } else {
      std::vector<std::pair<VertexId, VertexId>> wp;
      if (touched.size() >= 2) wp.emplace_back(g.vertex(*touched.begin()), g.vertex(*std::next(touched.begin())));
      return NoDecomposition{es.front(), g.edge(es.front()).id, wp,
                             touched.empty() ? "edge group reaches no ramified vertex"
                                             : "edge group outside admissible paths joins two ramified vertices"};
    }
  }

  std::sort(two.begin(), two.end(), [](const Segment& a, const Segment& b) {
    return std::tie(a.ramified[0], a.ramified[1], a.edges[0]) <
           std::tie(b.ramified[0], b.ramified[1], b.edges[0]);
  });
  std::sort(one.begin(), one.end(), [](const Segment& a, const Segment& b) {
    return std::tie(a.ramified[0], a.edges[0]) < std::tie(b.ramified[0], b.edges[0]);
  });
  SegmentDecomposition d;
  d.two_segments = two.size();
  d.ramified = ram;
  for (auto& s : two) d.segments.push_back(std::move(s));
  for (auto& s : one) d.segments.push_back(std::move(s));
  for (std::size_t i = 0; i < d.segments.size(); ++i) d.segments[i].colour = i;
  return d;
}

SegmentDecomposition decompose_or_throw(const Multigraph& g, const RamificationData& r) {
  auto res = decompose(g, r);
  if (auto* f = std::get_if<NoDecomposition>(&res)) throw DecompositionFailure(*f);
  return std::get<SegmentDecomposition>(std::move(res));
}

std::vector<std::vector<std::size_t>> admissible_sets(const SegmentDecomposition& d) {
  const std::size_t l = d.l();
  std::vector<std::vector<std::size_t>> out;
  if (l == 0) return out;
  const std::size_t want = l - 1;
  const std::size_t k2 = d.two_segments;
  if (want > k2) return out;
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t i = 0; i < l; ++i) slot[d.ramified[i]] = i;

  std::vector<bool> pick(k2, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(want), true);
  // Lexicographic order of index sets.
  do {
    std::vector<std::size_t> I;
    UnionFind uf(l);
    bool tree = true;
    for (std::size_t i = 0; i < k2; ++i) {
      if (!pick[i]) continue;
      I.push_back(i);
      const auto& s = d.segments[i];
      if (!uf.unite(slot.at(s.ramified[0]), slot.at(s.ramified[1]))) tree = false;
    }
    if (tree) out.push_back(std::move(I));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

RamifiedGraph segment_graph(const Multigraph& g, const RamificationData& r, const Segment& s) {
  std::vector<bool> keep_v(g.vertex_count(), false), keep_e(g.edge_count(), false);
  for (auto v : s.vertices) keep_v.at(v) = true;
  for (auto e : s.edges) keep_e.at(e) = true;
  RamifiedGraph out{subgraph(g, keep_v, keep_e), {}};
  for (auto v : s.ramified) out.ramification.mark(g.vertex(v), r.depth(g.vertex(v)).value_or(0));
  return out;
}

}  // namespace zpt
