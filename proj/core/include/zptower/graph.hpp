#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zptower/matrix.hpp"

namespace zpt {

using VertexId = std::string;

struct EdgeSpec {
  std::string id;  // empty: assigned "e<k>", k the 1-based input position
  VertexId from;
  VertexId to;
};

struct Edge {
  std::string id;
  std::size_t from;
  std::size_t to;
};

// Edge k owns dart 2k (from -> to) and dart 2k+1 (to -> from).
struct Dart {
  std::size_t origin;
  std::size_t terminus;
  std::size_t edge;
};

class Multigraph {
 public:
  Multigraph() = default;

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t dart_count() const { return 2 * edges_.size(); }

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const VertexId& vertex(std::size_t v) const { return vertices_.at(v); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }

  std::optional<std::size_t> find_vertex(const VertexId& id) const;
  std::size_t index_of(const VertexId& id) const;  // throws InputError
  std::optional<std::size_t> find_edge(const std::string& id) const;

  Dart dart(std::size_t d) const;
  static std::size_t inverse(std::size_t d) { return d ^ 1U; }
  static std::size_t forward_dart(std::size_t e) { return 2 * e; }

  // Darts with origin v; a loop contributes both of its darts.
  const std::vector<std::size_t>& darts_at(std::size_t v) const { return out_.at(v); }
  std::size_t degree(std::size_t v) const { return out_.at(v).size(); }

  bool is_loop(std::size_t e) const { return edges_.at(e).from == edges_.at(e).to; }

 private:
  friend Multigraph build_graph(std::vector<VertexId>, const std::vector<EdgeSpec>&);
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::unordered_map<VertexId, std::size_t> vindex_;
  std::unordered_map<std::string, std::size_t> eindex_;
};

Multigraph build_graph(std::vector<VertexId> vertex_ids, const std::vector<EdgeSpec>& edges);

// Ramification marks: vertex id -> depth k_v. Depth 0 is total ramification.
class RamificationData {
 public:
  RamificationData() = default;
  RamificationData(std::initializer_list<std::pair<const VertexId, unsigned>> marks)
      : marks_(marks) {}

  void mark(const VertexId& v, unsigned depth) { marks_[v] = depth; }
  bool is_ramified(const VertexId& v) const { return marks_.count(v) != 0; }
  std::optional<unsigned> depth(const VertexId& v) const;
  const std::map<VertexId, unsigned>& marks() const { return marks_; }
  std::size_t count() const { return marks_.size(); }
  unsigned max_depth() const;
  bool all_total() const;

 private:
  std::map<VertexId, unsigned> marks_;
};

struct RamifiedGraph {
  Multigraph graph;
  RamificationData ramification;
};

// Throws InputError when a mark names a vertex not in g.
void check_marks(const Multigraph& g, const RamificationData& r);

// Indices of ramified vertices of g, in vertex order.
std::vector<std::size_t> ramified_indices(const Multigraph& g, const RamificationData& r);

// Repeatedly removes unramified vertices of degree 1 (a loop counts 2).
Multigraph prune_tails(const Multigraph& g, const RamificationData& r);

// Keeps the flagged vertices and edges (edges must have both ends kept).
Multigraph subgraph(const Multigraph& g, const std::vector<bool>& keep_vertex,
                    const std::vector<bool>& keep_edge);

IntMatrix laplacian(const Multigraph& g);

bool is_connected(const Multigraph& g);

// Component label per vertex, labels 0.. in order of first appearance.
std::vector<std::size_t> components(const Multigraph& g);

// Disjoint union of g1 and g2 with each pair (v1 in g1, v2 in g2) identified.
// Identified vertices keep their g1 id and g1 depth. A non-identified g2 id
// that clashes with a g1 id is suffixed with ' until unique; likewise for edges.
RamifiedGraph glue(const Multigraph& g1, const RamificationData& r1, const Multigraph& g2,
                   const RamificationData& r2,
                   const std::vector<std::pair<VertexId, VertexId>>& identification);

}  // namespace zpt
