#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "random_graph.hpp"
#include "zptower/cover.hpp"
#include "zptower/forests.hpp"
#include "zptower/seal.hpp"

using namespace zpt;

namespace {

// Graph-morphism laws and fibre sizes.
void check_cover_laws(const Multigraph& g, const RamificationData& r, const VoltageAssignment& a,
                      const CoverGraph& c) {
  const std::uint64_t sheets = upow(c.p, c.n);
  std::size_t expect_v = 0;
  for (const auto& id : g.vertices()) expect_v += upow(c.p, std::min(c.n, r.depth(id).value_or(c.n)));
  REQUIRE(c.graph.vertex_count() == expect_v);
  REQUIRE(c.graph.edge_count() == sheets * g.edge_count());

  std::vector<std::size_t> over_v(g.vertex_count(), 0), over_e(g.edge_count(), 0);
  for (std::size_t v = 0; v < c.graph.vertex_count(); ++v) ++over_v[c.vertex_base[v]];
  for (std::size_t e = 0; e < c.graph.edge_count(); ++e) ++over_e[c.edge_base[e]];
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    REQUIRE(over_v[v] == fiber_size(r, g.vertex(v), c.p, c.n));
  for (auto k : over_e) REQUIRE(k == sheets);

  for (std::size_t d = 0; d < c.graph.dart_count(); ++d) {
    Dart cd = c.graph.dart(d);
    const std::size_t bd = 2 * c.edge_base[d / 2] + d % 2;
    Dart b = g.dart(bd);
    REQUIRE(c.vertex_base[cd.origin] == b.origin);
    REQUIRE(c.vertex_base[cd.terminus] == b.terminus);
    Dart inv = c.graph.dart(Multigraph::inverse(d));
    REQUIRE(inv.origin == cd.terminus);
    REQUIRE(2 * c.edge_base[inv.edge] + (Multigraph::inverse(d) % 2) == Multigraph::inverse(bd));
    // Sheet arithmetic on the forward dart.
    if (d % 2 == 0) {
      const auto S = static_cast<long long>(sheets);
      const long long s = static_cast<long long>(c.edge_sheet[d / 2]);
      const long long shift = ((dart_voltage(g, a, bd) % S) + S) % S;
      REQUIRE(c.vertex_sheet[cd.origin] == static_cast<std::uint64_t>(s) % over_v[b.origin]);
      REQUIRE(c.vertex_sheet[cd.terminus] == static_cast<std::uint64_t>(s + shift) % sheets % over_v[b.terminus]);
    }
  }
}

// Adding 1 to every group coordinate is an automorphism over the base.
void check_deck_action(const CoverGraph& c) {
  const std::uint64_t sheets = upow(c.p, c.n);
  std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> vat;
  std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> eat;
  std::vector<std::uint64_t> fib(c.base_vertex_count, 0);
  for (std::size_t v = 0; v < c.graph.vertex_count(); ++v) {
    vat[{c.vertex_base[v], c.vertex_sheet[v]}] = v;
    ++fib[c.vertex_base[v]];
  }
  for (std::size_t e = 0; e < c.graph.edge_count(); ++e) eat[{c.edge_base[e], c.edge_sheet[e]}] = e;
  auto sigma_v = [&](std::size_t v) {
    return vat.at({c.vertex_base[v], (c.vertex_sheet[v] + 1) % fib[c.vertex_base[v]]});
  };
  std::set<std::size_t> image;
  for (std::size_t e = 0; e < c.graph.edge_count(); ++e) {
    std::size_t f = eat.at({c.edge_base[e], (c.edge_sheet[e] + 1) % sheets});
    image.insert(f);
    REQUIRE(c.graph.edge(f).from == sigma_v(c.graph.edge(e).from));
    REQUIRE(c.graph.edge(f).to == sigma_v(c.graph.edge(e).to));
  }
  REQUIRE(image.size() == c.graph.edge_count());
}

std::vector<std::vector<int>> adjacency(const Multigraph& g) {
  std::vector<std::vector<int>> A(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
  for (const auto& e : g.edges()) {
    A[e.from][e.to] += 1;
    A[e.to][e.from] += 1;
  }
  return A;
}

}  // namespace

TEST_CASE("level-one cover of the 5-cycle ramified at v4 and v5") {
  auto in = oracle::load("cycle5_ramified_v4_v5.json");
  CoverGraph c = build_cover(in.graph, in.ramification, in.voltage, 3, 1);
  CHECK(c.graph.vertex_count() == 11);
  CHECK(c.graph.edge_count() == 15);
  CHECK(c.graph.find_vertex("v4"));
  CHECK(c.graph.find_vertex("v1#2"));
  CHECK(c.graph.find_edge("e3#0"));
  CHECK(c.graph.degree(c.graph.index_of("v4")) == 6);
  CHECK(is_connected(c.graph));
  check_cover_laws(in.graph, in.ramification, in.voltage, c);
  check_deck_action(c);
}

TEST_CASE("level zero is a copy of the base") {
  auto in = oracle::load("chords_and_pendant_triangle.json");
  CoverGraph c = build_cover(in.graph, in.ramification, in.voltage, 5, 0);
  CHECK(c.graph.vertices() == in.graph.vertices());
  for (std::size_t e = 0; e < in.graph.edge_count(); ++e) {
    CHECK(c.graph.edge(e).id == in.graph.edge(e).id);
    CHECK(c.graph.edge(e).from == in.graph.edge(e).from);
    CHECK(c.graph.edge(e).to == in.graph.edge(e).to);
  }
}

TEST_CASE("doubled-path voltage cover matches the known adjacency matrix up to relabelling") {
  auto in = oracle::load("path_doubled_middle_voltage.json");
  CoverGraph c = build_cover(in.graph, in.ramification, in.voltage, 3, 1);
  REQUIRE(c.graph.vertex_count() == 8);
  const std::vector<std::vector<int>> shown = {
      {0, 1, 1, 1, 0, 0, 0, 0}, {1, 0, 0, 0, 1, 1, 0, 0}, {1, 0, 0, 0, 0, 1, 1, 0},
      {1, 0, 0, 0, 1, 0, 1, 0}, {0, 1, 0, 1, 0, 0, 0, 1}, {0, 1, 1, 0, 0, 0, 0, 1},
      {0, 0, 1, 1, 0, 0, 0, 1}, {0, 0, 0, 0, 1, 1, 1, 0}};
  auto A = adjacency(c.graph);
  std::vector<int> perm(8);
  std::iota(perm.begin(), perm.end(), 0);
  bool found = false;
  do {
    bool ok = true;
    for (int i = 0; i < 8 && ok; ++i)
      for (int j = 0; j < 8 && ok; ++j) ok = A[perm[i]][perm[j]] == shown[i][j];
    found = ok;
  } while (!found && std::next_permutation(perm.begin(), perm.end()));
  CHECK(found);
  for (std::size_t v = 0; v < 8; ++v) CHECK(c.graph.degree(v) == 3);
  check_cover_laws(in.graph, in.ramification, in.voltage, c);
  check_deck_action(c);
}

TEST_CASE("partial ramification fibre sizes") {
  auto in = oracle::load("cycle5_v5_total_v4_depth1.json");
  for (unsigned long p : {2UL, 3UL})
    for (unsigned n = 0; n <= 2; ++n) {
      CoverGraph c = build_cover(in.graph, in.ramification, in.voltage, p, n);
      check_cover_laws(in.graph, in.ramification, in.voltage, c);
      check_deck_action(c);
      CHECK(c.ramification.count() == (n == 0 ? 2 : 1 + p));
    }
}

TEST_CASE("cover laws on random voltage graphs") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 60; ++trial) {
    auto rg = gen::random_connected(rng);
    VoltageAssignment a = gen::random_voltage(rng, rg.graph, 4);
    for (unsigned long p : {2UL, 3UL}) {
      CoverGraph c = build_cover(rg.graph, rg.ramification, a, p, 2);
      check_cover_laws(rg.graph, rg.ramification, a, c);
      check_deck_action(c);
    }
  }
}

TEST_CASE("trivial voltage covers with total ramification are connected") {
  std::mt19937_64 rng(56);
  for (int trial = 0; trial < 60; ++trial) {
    auto rg = gen::random_connected(rng);
    CHECK(is_connected(build_cover(rg.graph, rg.ramification, {}, 2, 2).graph));
  }
}

TEST_CASE("build_cover input errors") {
  auto in = oracle::load("cycle5_ramified_v4_v5.json");
  CHECK_THROWS_AS(build_cover(in.graph, in.ramification, {}, 4, 1), InputError);
  CHECK_THROWS_AS(build_cover(in.graph, in.ramification, {{"nope", 1}}, 3, 1), InputError);
  CHECK_THROWS_AS(build_cover(in.graph, {{"v9", 0}}, {}, 3, 1), InputError);
}

TEST_CASE("segment preimages") {
  SUBCASE("level zero returns the segment") {
    auto in = oracle::load("cycle5_ramified_v2_v4_v5.json");
    auto d = std::get<SegmentDecomposition>(decompose(in.graph, in.ramification));
    CoverGraph c = build_cover(in.graph, in.ramification, {}, 3, 0);
    for (const auto& s : d.segments) {
      RamifiedGraph pre = segment_preimage(c, s);
      RamifiedGraph seg = segment_graph(in.graph, in.ramification, s);
      CHECK(pre.graph.vertices() == seg.graph.vertices());
      CHECK(pre.graph.edge_count() == seg.graph.edge_count());
      CHECK(pre.ramification.marks() == seg.ramification.marks());
    }
  }
  SUBCASE("two sheets of a path between total ramification points") {
    auto in = oracle::load("path4_ramified_ends.json");
    auto d = std::get<SegmentDecomposition>(decompose(in.graph, in.ramification));
    REQUIRE(d.segments.size() == 1);
    CoverGraph c = build_cover(in.graph, in.ramification, {}, 2, 1);
    RamifiedGraph pre = segment_preimage(c, d.segments[0]);
    CHECK(pre.graph.vertex_count() == 8);
    CHECK(pre.graph.edge_count() == 8);
    // Removing the two ramified vertices leaves two copies of the interior.
    std::vector<bool> kv(pre.graph.vertex_count(), true), ke(pre.graph.edge_count(), true);
    for (std::size_t v = 0; v < kv.size(); ++v) kv[v] = !pre.ramification.is_ramified(pre.graph.vertex(v));
    for (std::size_t e = 0; e < ke.size(); ++e)
      ke[e] = kv[pre.graph.edge(e).from] && kv[pre.graph.edge(e).to];
    Multigraph inner = subgraph(pre.graph, kv, ke);
    auto lab = components(inner);
    CHECK(*std::max_element(lab.begin(), lab.end()) == 1);
    CHECK(std::count(lab.begin(), lab.end(), 0) == 3);
    // Equal to two copies glued along both ends.
    RamifiedGraph twice = glue(in.graph, in.ramification, in.graph, in.ramification, {{"v1", "v1"}, {"v5", "v5"}});
    CHECK(oracle::forest_count(pre.graph, oracle::marks_of(pre.ramification)) ==
          oracle::forest_count(twice.graph, oracle::marks_of(twice.ramification)));
    CHECK(kappa(pre.graph).value == kappa(twice.graph).value);
  }
  SUBCASE("four-edge segment of the 5-cycle at level one") {
    auto in = oracle::load("cycle5_ramified_v4_v5.json");
    auto d = std::get<SegmentDecomposition>(decompose(in.graph, in.ramification));
    CoverGraph c = build_cover(in.graph, in.ramification, {}, 3, 1);
    auto it = std::find_if(d.segments.begin(), d.segments.end(), [](const Segment& s) { return s.edges.size() == 4; });
    REQUIRE(it != d.segments.end());
    RamifiedGraph pre = segment_preimage(c, *it);
    CHECK(pre.graph.edge_count() == 12);
    CHECK(pre.graph.vertex_count() == 11);
    CHECK(pre.graph.vertex_count() - pre.ramification.count() == 9);
  }
  SUBCASE("foreign segment is rejected") {
    auto in = oracle::load("cycle5_ramified_v4_v5.json");
    auto other = oracle::load("chords_and_pendant_triangle.json");
    auto d = std::get<SegmentDecomposition>(decompose(other.graph, other.ramification));
    CoverGraph c = build_cover(in.graph, in.ramification, {}, 3, 1);
    CHECK_THROWS_AS(segment_preimage(c, d.segments.back()), InputError);
  }
}
