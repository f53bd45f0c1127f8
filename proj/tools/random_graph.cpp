#include "random_graph.hpp"

#include <algorithm>
#include <numeric>

namespace zpt::gen {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

RamifiedGraph random_connected(std::mt19937_64& rng, const RandomGraphOptions& opt) {
  const std::size_t n = uniform(rng, opt.min_vertices, opt.max_vertices);
  std::vector<VertexId> ids;
  for (std::size_t v = 0; v < n; ++v) ids.push_back("v" + std::to_string(v + 1));
  std::vector<EdgeSpec> es;
  for (std::size_t v = 1; v < n; ++v) es.push_back({"", ids[v], ids[uniform(rng, 0, v - 1)]});
  const std::size_t cap = std::max(opt.max_edges, n - 1);
  const std::size_t extra = uniform(rng, 0, cap - (n - 1));
  for (std::size_t k = 0; k < extra; ++k) {
    std::size_t a = uniform(rng, 0, n - 1);
    std::size_t b = uniform(rng, 0, n - 1);
    if (a == b && !(opt.allow_loops && uniform(rng, 0, 3) == 0)) {
      if (n == 1) continue;
      b = (a + 1 + uniform(rng, 0, n - 2)) % n;
    }
    es.push_back({"", ids[a], ids[b]});
  }
  RamifiedGraph out{build_graph(ids, es), {}};
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const std::size_t marks = std::min(n, uniform(rng, opt.min_marked, opt.max_marked));
  for (std::size_t k = 0; k < marks; ++k) out.ramification.mark(ids[order[k]], 0);
  return out;
}

Multigraph attach_random_tails(std::mt19937_64& rng, const Multigraph& g, std::size_t count) {
  std::vector<VertexId> ids = g.vertices();
  std::vector<EdgeSpec> es;
  for (const auto& e : g.edges()) es.push_back({e.id, g.vertex(e.from), g.vertex(e.to)});
  for (std::size_t k = 0; k < count; ++k) {
    VertexId fresh = "tail" + std::to_string(k + 1);
    es.push_back({"t" + std::to_string(k + 1), ids[uniform(rng, 0, ids.size() - 1)], fresh});
    ids.push_back(fresh);
  }
  return build_graph(ids, es);
}

VoltageAssignment random_voltage(std::mt19937_64& rng, const Multigraph& g, long bound) {
  VoltageAssignment a;
  std::uniform_int_distribution<long> d(-bound, bound);
  for (const auto& e : g.edges()) a.set(e.id, d(rng));
  return a;
}

}  // namespace zpt::gen
