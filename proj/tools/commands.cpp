#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <map>
#include <random>
#include <sstream>

#include "graph_json.hpp"
#include "random_graph.hpp"
#include "zptower/families.hpp"
#include "zptower/forests.hpp"
#include "zptower/iwasawa.hpp"

namespace zpt::cli {

namespace {

using io::Json;

constexpr int kOk = 0;
constexpr int kMalformed = 1;
constexpr int kViolation = 2;

struct Options {
  std::string input;
  unsigned long p = 0;
  unsigned n = 0;
  unsigned nmax = 0;
  std::string marked;
  std::string theorem;
  std::string variant;
  std::vector<std::string> params;
  std::string method = "determinant";
  bool symbolic_only = false;
  bool empirical_only = false;
  std::uint64_t seed = 1;
  std::size_t rounds = 200;
};

io::GraphInput read_input(const Options& o) {
  if (!o.input.empty() && o.input != "-") return io::load_graph_file(o.input);
  std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
  return io::parse_graph_text(text);
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<VertexId> marked_of(const io::GraphInput& in) {
  std::vector<VertexId> out;
  for (auto v : ramified_indices(in.graph, in.ramification)) out.push_back(in.graph.vertex(v));
  return out;
}

int cmd_seal(const Options& o, std::ostream& out) {
  auto in = read_input(o);
  Multigraph pruned = prune_tails(in.graph, in.ramification);
  Json removed = Json::array();
  for (const auto& v : in.graph.vertices())
    if (!pruned.find_vertex(v)) removed.push_back(v);
  auto res = decompose(pruned, in.ramification);
  if (auto* f = std::get_if<NoDecomposition>(&res)) {
    Json j = io::failure_to_json(*f);
    j["pruned_vertices"] = removed;
    emit(out, j);
    return kViolation;
  }
  Json j = io::decomposition_to_json(pruned, std::get<SegmentDecomposition>(res));
  j["pruned_vertices"] = removed;
  emit(out, j);
  return kOk;
}

int cmd_kappa(const Options& o, std::ostream& out, std::ostream& err) {
  auto in = read_input(o);
  const bool connected = is_connected(in.graph);
  ForestCount c = o.method == "enumeration" ? kappa_enumerate(in.graph) : kappa(in.graph);
  Json j;
  j["kappa"] = c.value.get_str();
  j["method"] = method_name(c.method);
  j["connected"] = connected;
  if (!connected) err << "graph is disconnected; it has no spanning tree\n";
  emit(out, j);
  return kOk;
}

int cmd_forests(const Options& o, std::ostream& out) {
  auto in = read_input(o);
  std::vector<VertexId> marked = o.marked.empty() ? marked_of(in) : split_csv(o.marked);
  Json j;
  j["marked"] = marked;
  j["t"] = std::to_string(marked.size());
  if (o.method == "determinant" || o.method == "both") {
    j["determinant"] = forest_count_det(in.graph, marked).value.get_str();
  }
  if (o.method == "enumeration" || o.method == "both") {
    j["enumeration"] = forest_count_bruteforce(in.graph, marked).value.get_str();
  }
  if (o.method == "both") j["agree"] = j["determinant"] == j["enumeration"];
  emit(out, j);
  return kOk;
}

int cmd_cover(const Options& o, std::ostream& out) {
  auto in = read_input(o);
  CoverGraph c = build_cover(in.graph, in.ramification, in.voltage, o.p, o.n);
  Json j = io::cover_to_json(in.graph, c);
  j["connected"] = is_connected(c.graph);
  emit(out, j);
  return kOk;
}

int cmd_invariants(const Options& o, std::ostream& out) {
  auto in = read_input(o);
  if (!is_prime(o.p)) throw InputError("--p must be prime");
  Json j;
  j["p"] = std::to_string(o.p);
  std::optional<InvariantTriple> sym;
  if (!o.empirical_only) {
    CharElement c = char_element(in.graph, in.ramification, in.voltage, o.p);
    sym = symbolic_invariants(c);
    Json s;
    s["t_power"] = std::to_string(c.t_power);
    s["det_M_alpha"] = io::laurent_to_json(c.det);
    s["body"] = io::poly_to_json(c.body);
    s["truncation"] = std::to_string(c.truncation);
    s["invariants"] = io::triple_to_json(*sym);
    j["symbolic"] = std::move(s);
  }
  std::optional<EmpiricalFit> emp;
  if (!o.symbolic_only) {
    const unsigned nmax = o.nmax ? o.nmax : default_nmax(o.p, in.ramification);
    emp = empirical_invariants(in.graph, in.ramification, in.voltage, o.p, nmax);
    j["empirical"] = io::fit_to_json(*emp, "kappa");
  }
  if (sym && emp) {
    j["agreement"] = emp->fit && emp->fit->mu == sym->mu && emp->fit->lambda == sym->lambda;
  }
  Multigraph pruned = prune_tails(in.graph, in.ramification);
  if (std::holds_alternative<SegmentDecomposition>(decompose(pruned, in.ramification))) {
    j["verdicts"] = Json::array({io::verdict_to_json(
        verify_char_factorization(in.graph, in.ramification, in.voltage, o.p))});
  }
  emit(out, j);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  auto in = read_input(o);
  Verdict v;
  if (o.theorem == "A") v = verify_theorem_A(in.graph, in.ramification, in.voltage, o.p, o.n);
  else if (o.theorem == "partial") v = verify_partial_ramification(in.graph, in.ramification, in.voltage, o.p, o.n);
  else if (o.theorem == "general") v = verify_general_case(in.graph, in.ramification, in.voltage, o.p, o.n);
  else v = verify_char_factorization(in.graph, in.ramification, in.voltage, o.p);
  Json j;
  j["theorem"] = o.theorem;
  j["p"] = std::to_string(o.p);
  if (o.theorem != "factorization") j["n"] = std::to_string(o.n);
  j["verdict"] = io::verdict_to_json(v);
  j["holds"] = v.all_hold();
  emit(out, j);
  return v.all_hold() ? kOk : kViolation;
}

unsigned param_uint(const std::map<std::string, std::string>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw InputError("missing parameter '" + key + "'");
  try {
    std::size_t used = 0;
    unsigned long v = std::stoul(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    throw InputError("parameter '" + key + "' must be a non-negative integer");
  }
}

int cmd_family(const Options& o, std::ostream& out) {
  std::map<std::string, std::string> kv;
  for (const auto& p : o.params) {
    auto eq = p.find('=');
    if (eq == std::string::npos) throw InputError("parameters are K=V pairs");
    kv[p.substr(0, eq)] = p.substr(eq + 1);
  }
  FamilySpec spec;
  if (o.variant == "line") {
    LineSpec s;
    if (!kv.count("mult")) throw InputError("missing parameter 'mult'");
    for (const auto& m : split_csv(kv["mult"])) {
      std::map<std::string, std::string> one{{"mult", m}};
      s.multiplicities.push_back(param_uint(one, "mult"));
    }
    spec = s;
  } else if (o.variant == "modified_line") {
    spec = ModifiedLineSpec{param_uint(kv, "k"), param_uint(kv, "n"), param_uint(kv, "m")};
  } else if (o.variant == "chorded_cycle") {
    spec = ChordedCycleSpec{param_uint(kv, "n"), param_uint(kv, "t"), param_uint(kv, "i"), param_uint(kv, "j")};
  } else {
    spec = CompleteSpec{param_uint(kv, "n")};
  }
  RamifiedGraph g = make_family(spec);
  Json j = io::graph_to_json(g.graph, g.ramification);
  j["variant"] = variant_name(spec);
  j["predicted_f2"] = f2_closed_form(spec).get_str();
  emit(out, j);
  return kOk;
}

struct Tally {
  std::size_t passed = 0;
  std::size_t failed = 0;
  void add(bool ok) { ok ? ++passed : ++failed; }
};

int cmd_selftest(const Options& o, std::ostream& out) {
  std::mt19937_64 rng(o.seed);
  std::map<std::string, Tally> t;
  for (std::size_t round = 0; round < o.rounds; ++round) {
    RamifiedGraph x = gen::random_connected(rng);
    std::vector<VertexId> marked;
    for (const auto& kv : x.ramification.marks()) marked.push_back(kv.first);
    t["forest_det_equals_enumeration"].add(forest_count_det(x.graph, marked).value ==
                                           forest_count_bruteforce(x.graph, marked).value);
    t["kappa_equals_enumeration"].add(kappa(x.graph).value == kappa_enumerate(x.graph).value);

    Multigraph tailed = gen::attach_random_tails(rng, x.graph, 3);
    Multigraph pruned = prune_tails(tailed, x.ramification);
    t["prune_preserves_kappa"].add(kappa(pruned).value == kappa(tailed).value);
    t["prune_idempotent"].add(prune_tails(pruned, x.ramification).edge_count() == pruned.edge_count());

    auto res = decompose(pruned, x.ramification);
    const bool ok = std::holds_alternative<SegmentDecomposition>(res);
    t["at_most_two_marks_decompose"].add(ok);
    if (ok) {
      const auto& d = std::get<SegmentDecomposition>(res);
      BigInt sum = 0;
      for (const auto& I : admissible_sets(d)) {
        BigInt term = 1;
        std::vector<bool> in(d.segments.size(), false);
        for (auto i : I) in[i] = true;
        for (std::size_t i = 0; i < d.segments.size(); ++i) {
          RamifiedGraph s = segment_graph(pruned, x.ramification, d.segments[i]);
          std::vector<VertexId> sm;
          for (const auto& kv : s.ramification.marks()) sm.push_back(kv.first);
          term *= in[i] ? kappa(s.graph).value : forest_count_det(s.graph, sm).value;
        }
        sum += term;
      }
      t["admissible_set_identity"].add(sum == kappa(pruned).value);
    }

    RamifiedGraph y = gen::random_connected(rng);
    const auto& m1 = x.ramification.marks();
    const auto& m2 = y.ramification.marks();
    std::vector<std::pair<VertexId, VertexId>> ident{{m1.begin()->first, m2.begin()->first}};
    if (m1.size() == 2 && m2.size() == 2 && round % 2 == 0)
      ident.emplace_back(std::next(m1.begin())->first, std::next(m2.begin())->first);
    if (m1.size() + m2.size() - ident.size() <= 2) {
      RamifiedGraph z = glue(x.graph, x.ramification, y.graph, y.ramification, ident);
      std::vector<VertexId> mz, my;
      for (const auto& kv : z.ramification.marks()) mz.push_back(kv.first);
      for (const auto& kv : m2) my.push_back(kv.first);
      t["gluing_multiplicative"].add(forest_count_det(z.graph, mz).value ==
                                     forest_count_det(x.graph, marked).value *
                                         forest_count_det(y.graph, my).value);
    }
  }
  Json j;
  j["seed"] = std::to_string(o.seed);
  j["rounds"] = std::to_string(o.rounds);
  bool all = true;
  Json checks;
  for (const auto& [name, c] : t) {
    checks[name] = {{"passed", std::to_string(c.passed)}, {"failed", std::to_string(c.failed)}};
    all = all && c.failed == 0;
  }
  j["checks"] = std::move(checks);
  j["status"] = all ? "ok" : "failed";
  emit(out, j);
  return all ? kOk : kViolation;
}

Json diagnostic(const char* status, const std::string& message) {
  Json j;
  j["status"] = status;
  j["message"] = message;
  return j;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Spanning trees, segment decompositions and Iwasawa invariants of branched Z_p-towers"};
  app.require_subcommand(1, 1);
  auto add_input = [&](CLI::App* c) { c->add_option("--input", o.input, "graph JSON file (default: stdin)"); };
  auto add_prime = [&](CLI::App* c) { c->add_option("--p", o.p, "prime")->required(); };

  auto* seal = app.add_subcommand("seal", "segment decomposition of the tail-pruned graph");
  add_input(seal);
  auto* kap = app.add_subcommand("kappa", "number of spanning trees");
  add_input(kap);
  kap->add_option("--method", o.method, "determinant or enumeration")
      ->check(CLI::IsMember({"determinant", "enumeration"}));
  auto* forests = app.add_subcommand("forests", "spanning forests rooted at the marked vertices");
  add_input(forests);
  forests->add_option("--marked", o.marked, "V[,V] (default: the ramified vertices)");
  forests->add_option("--method", o.method, "determinant, enumeration or both")
      ->check(CLI::IsMember({"determinant", "enumeration", "both"}));
  auto* cover = app.add_subcommand("cover", "build the level-n cover");
  add_input(cover);
  add_prime(cover);
  cover->add_option("--n", o.n, "level")->required();
  auto* inv = app.add_subcommand("invariants", "symbolic and fitted mu, lambda, nu");
  add_input(inv);
  add_prime(inv);
  inv->add_option("--nmax", o.nmax, "top level of the fitted tower");
  auto* so = inv->add_flag("--symbolic-only", o.symbolic_only);
  inv->add_flag("--empirical-only", o.empirical_only)->excludes(so);
  auto* verify = app.add_subcommand("verify", "check a counting identity on the built cover");
  add_input(verify);
  add_prime(verify);
  verify->add_option("--theorem", o.theorem, "A, partial, general or factorization")
      ->required()
      ->check(CLI::IsMember({"A", "partial", "general", "factorization"}));
  verify->add_option("--n", o.n, "level");
  auto* family = app.add_subcommand("family", "generate a graph family with its predicted F_2");
  family->add_option("--variant", o.variant)
      ->required()
      ->check(CLI::IsMember({"line", "modified_line", "chorded_cycle", "complete"}));
  family->add_option("--params", o.params, "K=V pairs, e.g. mult=1,2,1 or n=5 t=2 i=1 j=3");
  auto* selftest = app.add_subcommand("selftest", "randomised property sweep");
  selftest->group("");
  selftest->add_option("--seed", o.seed);
  selftest->add_option("--rounds", o.rounds);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    emit(out, diagnostic("malformed_input", e.what()));
    return kMalformed;
  }

  try {
    if (seal->parsed()) return cmd_seal(o, out);
    if (kap->parsed()) return cmd_kappa(o, out, err);
    if (forests->parsed()) return cmd_forests(o, out);
    if (cover->parsed()) return cmd_cover(o, out);
    if (inv->parsed()) return cmd_invariants(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (family->parsed()) return cmd_family(o, out);
    return cmd_selftest(o, out);
  } catch (const DecompositionFailure& e) {
    err << e.what() << "\n";
    emit(out, io::failure_to_json(e.witness()));
    return kViolation;
  } catch (const InputError& e) {
    err << e.what() << "\n";
    emit(out, diagnostic("malformed_input", e.what()));
    return kMalformed;
  } catch (const HypothesisError& e) {
    err << e.what() << "\n";
    emit(out, diagnostic("hypothesis_violation", e.what()));
    return kViolation;
  } catch (const CapExceeded& e) {
    err << e.what() << "\n";
    Json j = diagnostic("cap_exceeded", e.what());
    j["partial_count"] = std::to_string(e.partial());
    emit(out, j);
    return kViolation;
  }
}

}  // namespace zpt::cli
