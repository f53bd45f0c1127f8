#include "zptower/forests.hpp"

#include <algorithm>

#include "zptower/linalg.hpp"

namespace zpt {

const char* method_name(CountMethod m) {
  return m == CountMethod::determinant ? "determinant" : "enumeration";
}

BigInt laplacian_minor_det(const Multigraph& g, const std::vector<std::size_t>& marked) {
  std::vector<bool> drop(g.vertex_count(), false);
  for (auto v : marked) drop.at(v) = true;
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (!drop[v]) keep.push_back(v);
  return det_int(laplacian(g).principal(keep));
}

ForestCount kappa(const Multigraph& g) {
  if (g.vertex_count() == 0) throw InputError("spanning trees of the empty graph");
  return {laplacian_minor_det(g, {0}), CountMethod::determinant};
}

namespace {

std::vector<std::size_t> marked_indices(const Multigraph& g, const std::vector<VertexId>& marked) {
  if (marked.empty() || marked.size() > 2) throw InputError("one or two marked vertices are supported");
  std::vector<std::size_t> idx;
  for (const auto& m : marked) {
    auto v = g.find_vertex(m);
    if (!v) throw InputError("marked vertex '" + m + "' is not a vertex");
    if (std::find(idx.begin(), idx.end(), *v) != idx.end()) throw InputError("marked vertices must be distinct");
    idx.push_back(*v);
  }
  return idx;
}

// Union-find with undo, for backtracking over edge subsets.
class RollbackDsu {
 public:
  explicit RollbackDsu(std::size_t n) : parent_(n), size_(n, 1), root_mark_(n, 0) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }
  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  void set_marked(std::size_t v) { root_mark_[v] = 1; }
  // Joins the classes of a and b unless that closes a cycle or joins two
  // marked classes.
  bool join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b || (root_mark_[a] && root_mark_[b])) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    history_.push_back({b, root_mark_[a]});
    parent_[b] = a;
    size_[a] += size_[b];
    root_mark_[a] = root_mark_[a] | root_mark_[b];
    return true;
  }
  void undo() {
    auto [b, old_mark] = history_.back();
    history_.pop_back();
    std::size_t a = parent_[b];
    size_[a] -= size_[b];
    root_mark_[a] = old_mark;
    parent_[b] = b;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<char> root_mark_;
  std::vector<std::pair<std::size_t, char>> history_;
};

template <class Visit>
void for_each_forest(const Multigraph& g, const std::vector<std::size_t>& marked, Visit&& visit) {
  const std::size_t need = g.vertex_count() - marked.size();
  std::vector<std::size_t> candidates;
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (!g.is_loop(e)) candidates.push_back(e);
  RollbackDsu dsu(g.vertex_count());
  for (auto v : marked) dsu.set_marked(v);
  std::vector<std::size_t> chosen;

  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (chosen.size() == need) {
      visit(chosen);
      return;
    }
    const std::size_t left = need - chosen.size();
    for (std::size_t k = from; k + left <= candidates.size(); ++k) {
      const Edge& ed = g.edge(candidates[k]);
      if (!dsu.join(ed.from, ed.to)) continue;
      chosen.push_back(candidates[k]);
      self(self, k + 1);
      chosen.pop_back();
      dsu.undo();
    }
  };
  rec(rec, 0);
}

void check_cap(const Multigraph& g, std::size_t cap) {
  if (g.edge_count() > cap)
    throw CapExceeded("enumeration cap exceeded: " + std::to_string(g.edge_count()) + " edges > " +
                          std::to_string(cap),
                      0);
}

}  // namespace

ForestCount kappa_enumerate(const Multigraph& g, std::size_t cap) {
  if (g.vertex_count() == 0) throw InputError("spanning trees of the empty graph");
  check_cap(g, cap);
  BigInt n = 0;
  for_each_forest(g, {0}, [&](const std::vector<std::size_t>&) { ++n; });
  return {n, CountMethod::enumeration};
}

ForestCount forest_count_det(const Multigraph& g, const std::vector<VertexId>& marked) {
  return {laplacian_minor_det(g, marked_indices(g, marked)), CountMethod::determinant};
}

ForestCount forest_count_bruteforce(const Multigraph& g, const std::vector<VertexId>& marked,
                                    std::size_t cap) {
  auto idx = marked_indices(g, marked);
  check_cap(g, cap);
  BigInt n = 0;
  for_each_forest(g, idx, [&](const std::vector<std::size_t>&) { ++n; });
  return {n, CountMethod::enumeration};
}

std::vector<std::vector<std::size_t>> enumerate_spanning_trees(const Multigraph& g, std::size_t cap) {
  if (g.vertex_count() == 0) throw InputError("spanning trees of the empty graph");
  check_cap(g, cap);
  std::vector<std::vector<std::size_t>> out;
  for_each_forest(g, {0}, [&](const std::vector<std::size_t>& es) { out.push_back(es); });
  return out;
}

}  // namespace zpt
