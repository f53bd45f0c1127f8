#pragma once

#include <string>
#include <vector>

#include "zptower/bigint.hpp"
#include "zptower/graph.hpp"

namespace zpt {

enum class CountMethod { determinant, enumeration };

struct ForestCount {
  BigInt value;
  CountMethod method;
};

const char* method_name(CountMethod m);

// Matrix-tree count. A disconnected graph yields 0.
ForestCount kappa(const Multigraph& g);
ForestCount kappa_enumerate(const Multigraph& g, std::size_t cap = 20);

// Determinant of the Laplacian with the marked rows and columns removed; the
// empty minor counts as 1.
ForestCount forest_count_det(const Multigraph& g, const std::vector<VertexId>& marked);

// Spanning forests with one tree per marked vertex, by exhaustive search over
// edge subsets of size |V| - t.
ForestCount forest_count_bruteforce(const Multigraph& g, const std::vector<VertexId>& marked,
                                    std::size_t cap = 20);

std::vector<std::vector<std::size_t>> enumerate_spanning_trees(const Multigraph& g,
                                                               std::size_t cap = 20);

// Determinant of the Laplacian minor for an arbitrary marked index set.
BigInt laplacian_minor_det(const Multigraph& g, const std::vector<std::size_t>& marked);

}  // namespace zpt
