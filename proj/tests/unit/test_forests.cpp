#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "random_graph.hpp"
#include "zptower/cover.hpp"
#include "zptower/errors.hpp"
#include "zptower/forests.hpp"

using namespace zpt;

namespace {

Multigraph complete(unsigned n) {
  std::vector<VertexId> vs;
  std::vector<EdgeSpec> es;
  for (unsigned a = 1; a <= n; ++a) vs.push_back("v" + std::to_string(a));
  for (unsigned a = 1; a <= n; ++a)
    for (unsigned b = a + 1; b <= n; ++b) es.push_back({"", vs[a - 1], vs[b - 1]});
  return build_graph(vs, es);
}

const char* const kCorpus[] = {
    "chords_and_pendant_triangle.json",       "cycle5_ramified_v2_v4_v5.json",
    "cycle5_ramified_v2_v5.json",             "cycle5_ramified_v4_v5.json",
    "cycle5_v5_total_v4_depth1.json",         "doubled_edge_path_and_pendant_triangle.json",
    "glue_edge_and_double_edge.json",         "glue_four_vertices_doubled_sides.json",
    "glue_four_vertices_two_marked.json",     "glue_triangle_doubled_side_two_marked.json",
    "glue_two_double_spokes.json",            "glued_triangles_voltage.json",
    "k5_ramified_v2_v4_v5.json",              "multi_edges_three_ramified.json",
    "parallel_pair_then_edge.json",           "path4_ramified_ends.json",
    "path_doubled_middle_voltage.json",       "triangle_doubled_side_voltage_on_ab.json",
    "triangle_doubled_side_voltage_on_ca.json", "triangle_voltage_two_marked.json"};

}  // namespace

TEST_CASE("kappa on named graphs") {
  auto c5 = oracle::load("cycle5_ramified_v4_v5.json");
  CHECK(kappa(c5.graph).value == 5);
  CHECK(kappa(c5.graph).method == CountMethod::determinant);
  CHECK(kappa_enumerate(c5.graph).value == 5);
  CHECK(kappa(complete(4)).value == 16);
  CHECK(kappa(complete(3)).value == 3);
  CHECK(kappa_enumerate(complete(3)).value == 3);
  CHECK(kappa_enumerate(build_graph({"a", "b"}, {{"", "a", "b"}})).value == 1);
  CHECK(kappa(build_graph({"a"}, {})).value == 1);
  CHECK(kappa(build_graph({"a", "b"}, {})).value == 0);
  CHECK(std::string(method_name(CountMethod::enumeration)) == "enumeration");
}

TEST_CASE("kappa agrees with enumeration and the subset oracle") {
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < 100; ++trial) {
    auto rg = gen::random_connected(rng);
    BigInt k = kappa(rg.graph).value;
    REQUIRE(k == kappa_enumerate(rg.graph).value);
    REQUIRE(k == oracle::tree_count(rg.graph));
  }
}

TEST_CASE("spanning tree enumeration") {
  auto c5 = oracle::load("cycle5_ramified_v4_v5.json");
  auto trees = enumerate_spanning_trees(c5.graph);
  REQUIRE(trees.size() == 5);
  std::set<std::size_t> omitted;
  for (const auto& t : trees) {
    REQUIRE(t.size() == 4);
    for (std::size_t e = 0; e < 5; ++e)
      if (std::find(t.begin(), t.end(), e) == t.end()) omitted.insert(e);
  }
  CHECK(omitted.size() == 5);
  CHECK(enumerate_spanning_trees(build_graph({"a", "b"}, {{"", "a", "b"}, {"", "a", "b"}})).size() == 2);
  CHECK(enumerate_spanning_trees(complete(4)).size() == 16);
  CHECK_THROWS_AS(enumerate_spanning_trees(complete(7)), CapExceeded);
}

TEST_CASE("forest counts on named graphs") {
  Multigraph edge = build_graph({"a", "b"}, {{"", "a", "b"}, {"", "a", "b"}});
  CHECK(forest_count_det(edge, {"a", "b"}).value == 1);
  CHECK(forest_count_bruteforce(edge, {"a", "b"}).value == 1);

  auto path = oracle::load("path4_ramified_ends.json");
  CHECK(forest_count_det(path.graph, {"v1", "v5"}).value == 4);

  CHECK(forest_count_bruteforce(complete(3), {"v1", "v2"}).value == 2);
  CHECK(forest_count_det(complete(3), {"v1", "v2"}).value == 2);

  auto in = oracle::load("path_doubled_middle_voltage.json");
  CoverGraph c = build_cover(in.graph, in.ramification, in.voltage, 3, 1);
  CHECK(forest_count_det(c.graph, {"v1", "v4"}).value == 320);
  CHECK(forest_count_bruteforce(c.graph, {"v1", "v4"}).value == 320);
  CHECK(oracle::forest_count(c.graph, {"v1", "v4"}) == 320);
}

TEST_CASE("forest count errors") {
  auto c5 = oracle::load("cycle5_ramified_v4_v5.json");
  CHECK_THROWS_AS(forest_count_det(c5.graph, {}), InputError);
  CHECK_THROWS_AS(forest_count_det(c5.graph, {"v1", "v1"}), InputError);
  CHECK_THROWS_AS(forest_count_det(c5.graph, {"v1", "v2", "v3"}), InputError);
  CHECK_THROWS_AS(forest_count_det(c5.graph, {"zz"}), InputError);
  CHECK_THROWS_AS(forest_count_bruteforce(complete(8), {"v1"}), CapExceeded);
}

TEST_CASE("determinant and brute force agree on the fixture corpus") {
  for (const char* name : kCorpus) {
    CAPTURE(name);
    auto in = oracle::load(name);
    auto marks = oracle::marks_of(in.ramification);
    if (marks.size() > 2) marks.resize(2);
    for (std::size_t t = 1; t <= marks.size(); ++t) {
      std::vector<VertexId> m(marks.begin(), marks.begin() + static_cast<long>(t));
      BigInt det = forest_count_det(in.graph, m).value;
      CHECK(det == forest_count_bruteforce(in.graph, m).value);
      CHECK(det == oracle::forest_count(in.graph, m));
    }
  }
}

TEST_CASE("determinant and brute force agree on random graphs") {
  std::mt19937_64 rng(1729);
  for (int trial = 0; trial < 250; ++trial) {
    auto rg = gen::random_connected(rng);
    auto marks = oracle::marks_of(rg.ramification);
    BigInt det = forest_count_det(rg.graph, marks).value;
    REQUIRE(det >= 0);
    REQUIRE(det == forest_count_bruteforce(rg.graph, marks).value);
    REQUIRE(det == oracle::forest_count(rg.graph, marks));
    if (marks.size() == 1) REQUIRE(det == kappa(rg.graph).value);
  }
}

TEST_CASE("gluing examples") {
  auto L1 = oracle::load("glue_edge_and_double_edge.json");
  auto L2 = oracle::load("glue_two_double_spokes.json");
  CHECK(kappa(L1.graph).value == 2);
  CHECK(kappa(L2.graph).value == 4);
  RamifiedGraph g11 = glue(L1.graph, L1.ramification, L2.graph, L2.ramification, {{"v1", "w1"}});
  CHECK(forest_count_det(g11.graph, oracle::marks_of(g11.ramification)).value == 8);
  CHECK(oracle::tree_count(g11.graph) == 8);

  SUBCASE("one marked piece on a two-marked piece") {
    auto M = oracle::load("glue_four_vertices_two_marked.json");
    CHECK(forest_count_det(M.graph, {"w2", "w3"}).value == 9);
    RamifiedGraph g = glue(L1.graph, L1.ramification, M.graph, M.ramification, {{"v1", "w2"}});
    auto marks = oracle::marks_of(g.ramification);
    REQUIRE(marks == std::vector<VertexId>{"v1", "w3"});
    CHECK(forest_count_det(g.graph, marks).value == 18);
    CHECK(forest_count_bruteforce(g.graph, marks).value == 18);
    // Vertex set of the tree holding w3, for every 2-forest.
    std::map<std::set<VertexId>, int> classes;
    const std::size_t w3 = g.graph.index_of("w3");
    for (auto mask : oracle::forests_by_mask(g.graph, oracle::indices(g.graph, marks))) {
      auto lab = oracle::labels_for(g.graph, mask);
      std::set<VertexId> side;
      for (std::size_t v = 0; v < lab.size(); ++v)
        if (lab[v] == lab[w3]) side.insert(g.graph.vertex(v));
      ++classes[side];
    }
    std::map<std::set<VertexId>, int> expect{{{"w1", "w3", "w4"}, 4}, {{"w3"}, 10}, {{"w1", "w3"}, 4}};
    CHECK(classes == expect);
  }
  SUBCASE("two two-marked pieces") {
    auto A = oracle::load("glue_triangle_doubled_side_two_marked.json");
    auto B = oracle::load("glue_four_vertices_doubled_sides.json");
    CHECK(forest_count_det(A.graph, {"v1", "v2"}).value == 3);
    CHECK(forest_count_det(B.graph, {"w1", "w2"}).value == 9);
    RamifiedGraph g = glue(A.graph, A.ramification, B.graph, B.ramification, {{"v1", "w1"}, {"v2", "w2"}});
    auto marks = oracle::marks_of(g.ramification);
    CHECK(forest_count_det(g.graph, marks).value == 27);
    CHECK(oracle::forest_count(g.graph, marks) == 27);
  }
}

TEST_CASE("forest counts multiply under gluing") {
  std::mt19937_64 rng(577);
  gen::RandomGraphOptions opt;
  opt.max_vertices = 6;
  opt.max_edges = 8;
  for (int trial = 0; trial < 120; ++trial) {
    auto a = gen::random_connected(rng, opt);
    auto b = gen::random_connected(rng, opt);
    auto ma = oracle::marks_of(a.ramification), mb = oracle::marks_of(b.ramification);
    std::vector<std::pair<VertexId, VertexId>> ident{{ma[0], mb[0]}};
    if (ma.size() == 2 && mb.size() == 2) ident.push_back({ma[1], mb[1]});
    RamifiedGraph g = glue(a.graph, a.ramification, b.graph, b.ramification, ident);
    auto mg = oracle::marks_of(g.ramification);
    REQUIRE(mg.size() <= 2);
    BigInt lhs = forest_count_det(g.graph, mg).value;
    REQUIRE(lhs == forest_count_det(a.graph, ma).value * forest_count_det(b.graph, mb).value);
    REQUIRE(lhs == oracle::forest_count(g.graph, mg));
  }
}
