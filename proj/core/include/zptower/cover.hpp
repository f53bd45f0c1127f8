#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zptower/graph.hpp"
#include "zptower/seal.hpp"

namespace zpt {

// Exponent a_e of the generator on the stored direction of each edge; the
// reverse dart carries -a_e. Edges not listed carry 0.
class VoltageAssignment {
 public:
  VoltageAssignment() = default;
  VoltageAssignment(std::initializer_list<std::pair<const std::string, long>> v) : a_(v) {
    prune();
  }

  void set(const std::string& edge_id, long a) {
    if (a == 0) a_.erase(edge_id);
    else a_[edge_id] = a;
  }
  long of(const std::string& edge_id) const {
    auto it = a_.find(edge_id);
    return it == a_.end() ? 0 : it->second;
  }
  bool trivial() const { return a_.empty(); }
  const std::map<std::string, long>& exponents() const { return a_; }

 private:
  void prune() {
    for (auto it = a_.begin(); it != a_.end();) it = it->second == 0 ? a_.erase(it) : std::next(it);
  }
  std::map<std::string, long> a_;
};

void check_voltage(const Multigraph& g, const VoltageAssignment& a);

// The exponents of the edges present in g (e.g. a segment or pruned graph).
VoltageAssignment restrict_voltage(const Multigraph& g, const VoltageAssignment& a);

long dart_voltage(const Multigraph& g, const VoltageAssignment& a, std::size_t dart);

struct CoverGraph {
  Multigraph graph;
  // Vertices over a ramified base vertex v keep the relative depth max(k_v - n, 0).
  RamificationData ramification;
  std::vector<std::size_t> vertex_base;
  std::vector<std::uint64_t> vertex_sheet;
  std::vector<std::size_t> edge_base;
  std::vector<std::uint64_t> edge_sheet;
  std::vector<std::string> base_edge_ids;
  std::size_t base_vertex_count = 0;
  unsigned long p = 0;
  unsigned n = 0;
};

std::uint64_t fiber_size(const RamificationData& r, const VertexId& v, unsigned long p, unsigned n);

// Vertex (v, g mod p^min(n,k_v)); edge (e, g) from (o(e), g) to (t(e), g + a_e).
CoverGraph build_cover(const Multigraph& g, const RamificationData& r, const VoltageAssignment& a,
                       unsigned long p, unsigned n);

// Subgraph of the cover on all edges over s, marked over s's ramified vertices.
RamifiedGraph segment_preimage(const CoverGraph& c, const Segment& s);

}  // namespace zpt
