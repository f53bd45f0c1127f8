#pragma once

#include <cstdint>
#include <random>

#include "zptower/cover.hpp"
#include "zptower/graph.hpp"

namespace zpt::gen {

struct RandomGraphOptions {
  std::size_t min_vertices = 2;
  std::size_t max_vertices = 8;
  std::size_t max_edges = 14;
  bool allow_loops = true;
  std::size_t min_marked = 1;
  std::size_t max_marked = 2;
};

// Connected multigraph: a random spanning tree plus random extra edges
// (parallel edges and loops allowed), with randomly marked vertices at depth 0.
RamifiedGraph random_connected(std::mt19937_64& rng, const RandomGraphOptions& opt = {});

// Attaches random trees at random vertices; ids are prefixed to stay unique.
Multigraph attach_random_tails(std::mt19937_64& rng, const Multigraph& g, std::size_t count);

VoltageAssignment random_voltage(std::mt19937_64& rng, const Multigraph& g, long bound);

}  // namespace zpt::gen
