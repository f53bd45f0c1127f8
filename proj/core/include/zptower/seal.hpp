#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "zptower/errors.hpp"
#include "zptower/graph.hpp"

namespace zpt {

struct AdmissiblePath {
  std::size_t start;
  std::size_t end;
  std::vector<std::size_t> darts;  // walk from start to end

  std::vector<std::size_t> edges() const;
};

// Simple paths from v to w whose interior vertices are unramified and
// distinct; for v == w, simple cycles through v. Each path is reported once
// up to reversal. Throws CapExceeded past `cap` paths.
std::vector<AdmissiblePath> admissible_paths(const Multigraph& g, const RamificationData& r,
                                             const VertexId& v, const VertexId& w,
                                             std::size_t cap = 10000);

struct Segment {
  std::size_t colour = 0;
  unsigned t = 0;
  std::vector<std::size_t> ramified;  // vertex indices, ascending
  std::vector<std::size_t> edges;     // edge indices, ascending
  std::vector<std::string> edge_ids;
  std::vector<std::size_t> vertices;  // vertex indices, ascending
  bool loop_only = false;             // a lone loop at a ramified vertex
};

struct SegmentDecomposition {
  std::vector<Segment> segments;  // 2-segments first
  std::size_t two_segments = 0;   // k'
  std::vector<std::size_t> ramified;

  std::size_t l() const { return ramified.size(); }
};

struct NoDecomposition {
  std::size_t edge = 0;
  std::string edge_id;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::string reason;
};

using DecomposeResult = std::variant<SegmentDecomposition, NoDecomposition>;

class DecompositionFailure : public HypothesisError {
 public:
  explicit DecompositionFailure(NoDecomposition w)
      : HypothesisError("no segment decomposition: " + w.reason), witness_(std::move(w)) {}
  const NoDecomposition& witness() const { return witness_; }

 private:
  NoDecomposition witness_;
};

DecomposeResult decompose(const Multigraph& g, const RamificationData& r,
                          std::size_t path_cap = 10000);

// Throws DecompositionFailure instead of returning the witness.
SegmentDecomposition decompose_or_throw(const Multigraph& g, const RamificationData& r);

// Index sets I of 2-segments, |I| = l - 1, whose endpoint pairs form a
// spanning tree on the ramified vertices.
std::vector<std::vector<std::size_t>> admissible_sets(const SegmentDecomposition& d);

// The segment as a standalone graph, ids preserved, with its ramified marks.
RamifiedGraph segment_graph(const Multigraph& g, const RamificationData& r, const Segment& s);

}  // namespace zpt
