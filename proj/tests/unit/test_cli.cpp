#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>

#include "oracles.hpp"

namespace {

struct Result {
  int code = -1;
  std::string out;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result run(const std::string& args, const std::string& stdin_file = "") {
  std::string cmd = std::string(ZPT_CLI_PATH) + " " + args + " 2>/dev/null";
  if (!stdin_file.empty()) cmd += " < " + stdin_file;
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string in(const char* name) { return "--input " + oracle::fixture(name); }

}  // namespace

TEST_CASE("seal") {
  Result ok = run("seal " + in("cycle5_ramified_v2_v4_v5.json"));
  CHECK(ok.code == 0);
  auto j = ok.json();
  CHECK(j["status"] == "ok");
  CHECK(j["segments"].size() == 3);
  CHECK(j["two_segments"] == "3");

  Result bad = run("seal " + in("k5_ramified_v2_v4_v5.json"));
  CHECK(bad.code == 2);
  auto b = bad.json();
  CHECK(b["status"] == "no_decomposition");
  CHECK(b["conflicting_pairs"].size() == 2);
  CHECK(b.contains("witness_edge"));
}

TEST_CASE("seal reads standard input") {
  Result r = run("seal", oracle::fixture("chords_and_pendant_triangle.json"));
  CHECK(r.code == 0);
  CHECK(r.json()["segments"].size() == 5);
}

TEST_CASE("kappa and forests") {
  auto k = run("kappa " + in("cycle5_ramified_v4_v5.json"));
  CHECK(k.code == 0);
  CHECK(k.json()["kappa"] == "5");
  auto e = run("kappa --method enumeration " + in("cycle5_ramified_v4_v5.json"));
  CHECK(e.json()["method"] == "enumeration");

  auto f = run("forests --method both " + in("path4_ramified_ends.json"));
  CHECK(f.code == 0);
  CHECK(f.json()["determinant"] == "4");
  CHECK(f.json()["enumeration"] == "4");
  CHECK(f.json()["agree"] == true);

  auto m = run("forests --marked v1 " + in("path4_ramified_ends.json"));
  CHECK(m.json()["determinant"] == "1");
  CHECK(run("forests --marked v1,zz " + in("path4_ramified_ends.json")).code == 1);
}

TEST_CASE("cover") {
  auto c = run("cover --p 3 --n 1 " + in("cycle5_ramified_v4_v5.json"));
  CHECK(c.code == 0);
  auto j = c.json();
  CHECK(j["vertices"].size() == 11);
  CHECK(j["edges"].size() == 15);
  CHECK(j["projection"]["vertices"]["v2#1"] == "v2");
  CHECK(j["projection"]["edges"]["e3#2"] == "e3");
  CHECK(run("cover --p 4 --n 1 " + in("cycle5_ramified_v4_v5.json")).code == 1);
}

TEST_CASE("verify") {
  auto a = run("verify --theorem A --p 3 --n 1 " + in("cycle5_ramified_v4_v5.json"));
  CHECK(a.code == 0);
  CHECK(a.json()["verdict"]["lhs"] == "240");
  CHECK(a.json()["verdict"]["rhs"] == "240");

  auto p = run("verify --theorem partial --p 2 --n 2 " + in("cycle5_v5_total_v4_depth1.json"));
  CHECK(p.code == 0);
  CHECK(p.json()["verdict"]["lhs"] == "1600");

  auto g = run("verify --theorem general --p 3 --n 1 " + in("path_doubled_middle_voltage.json"));
  CHECK(g.code == 0);
  CHECK(g.json()["verdict"]["lhs"] == "384");

  auto f = run("verify --theorem factorization --p 3 " + in("glued_triangles_voltage.json"));
  CHECK(f.code == 0);
  CHECK(f.json()["verdict"]["lhs"] == "9");

  CHECK(run("verify --theorem A --p 3 --n 1 " + in("k5_ramified_v2_v4_v5.json")).code == 2);
  CHECK(run("verify --theorem A --p 3 --n 1 " + in("path_doubled_middle_voltage.json")).code == 2);
  CHECK(run("verify --theorem Z --p 3 --n 1 " + in("cycle5_ramified_v4_v5.json")).code == 1);
}

TEST_CASE("invariants") {
  auto r = run("invariants --p 3 " + in("glued_triangles_voltage.json"));
  CHECK(r.code == 0);
  auto j = r.json();
  CHECK(j["symbolic"]["invariants"]["mu"] == "2");
  CHECK(j["symbolic"]["invariants"]["lambda"] == "1");
  CHECK(j["empirical"]["fit"]["mu"] == "2");
  CHECK(j["empirical"]["fit"]["lambda"] == "1");
  CHECK(j["agreement"] == true);

  auto s = run("invariants --p 2 --symbolic-only " + in("cycle5_ramified_v4_v5.json"));
  CHECK(s.code == 0);
  CHECK_FALSE(s.json().contains("empirical"));
  CHECK(run("invariants --p 2 --symbolic-only --empirical-only " + in("cycle5_ramified_v4_v5.json")).code != 0);
}

TEST_CASE("family") {
  auto r = run("family --variant line --params mult=2,3");
  CHECK(r.code == 0);
  CHECK(r.json()["predicted_f2"] == "5");
  auto c = run("family --variant chorded_cycle --params n=5 t=2 i=1 j=3");
  CHECK(c.code == 0);
  CHECK(c.json()["edges"].size() == 6);
  CHECK(run("family --variant modified_line --params k=6 n=1 m=4").code == 1);
}

TEST_CASE("malformed input exits 1") {
  CHECK(run("kappa --input /nonexistent/graph.json").code == 1);
  CHECK(run("nosuchcommand").code == 1);
  CHECK(run("kappa", oracle::fixture("../CMakeLists.txt")).code == 1);
}

TEST_CASE("output is deterministic") {
  auto a = run("seal " + in("chords_and_pendant_triangle.json"));
  auto b = run("seal " + in("chords_and_pendant_triangle.json"));
  CHECK(a.out == b.out);
}
