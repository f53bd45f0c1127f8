#include "zptower/iwasawa.hpp"

#include <algorithm>

namespace zpt {

GraphMatrices build_matrices(const Multigraph& g, const RamificationData& r,
                             const VoltageAssignment& a) {
  check_marks(g, r);
  check_voltage(g, a);
  GraphMatrices m;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (!r.is_ramified(g.vertex(v))) m.order.push_back(v);
  m.unramified = m.order.size();
  if (m.unramified == 0) throw HypothesisError("graph has no unramified vertex");
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (r.is_ramified(g.vertex(v))) m.order.push_back(v);

  const std::size_t s = g.vertex_count();
  const std::size_t rr = m.unramified;
  std::vector<std::size_t> pos(s);
  for (std::size_t i = 0; i < s; ++i) pos[m.order[i]] = i;

  m.D = IntMatrix(s, s, BigInt(0));
  m.t_entry.assign(s, false);
  for (std::size_t i = 0; i < s; ++i) {
    if (i < rr) {
      m.D(i, i) = static_cast<unsigned long>(g.degree(m.order[i]));
    } else {
      m.D(i, i) = 1;
      m.t_entry[i] = true;
    }
  }
  m.A_alpha = PolyMatrix(s, s);
  for (std::size_t d = 0; d < g.dart_count(); ++d) {
    const Dart x = g.dart(d);
    const std::size_t j = pos[x.origin];
    if (j >= rr) continue;
    m.A_alpha(pos[x.terminus], j) += LaurentPoly::monomial(1, dart_voltage(g, a, d));
  }
  m.B = m.A_alpha;
  m.M_alpha = PolyMatrix(rr, rr);
  for (std::size_t i = 0; i < rr; ++i)
    for (std::size_t j = 0; j < rr; ++j)
      m.M_alpha(i, j) = (i == j ? LaurentPoly(m.D(i, i)) : LaurentPoly()) - m.A_alpha(i, j);
  return m;
}

Matrix<IntPoly> d_prime_minus_b(const GraphMatrices& m) {
  const std::size_t s = m.order.size();
  Matrix<IntPoly> out(s, s);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      const LaurentPoly& b = m.B(i, j);
      if (!b.is_zero() && b.min_exponent() < 0)
        throw InputError("D' - B is not polynomial for negative voltages");
      IntPoly entry = -expand_at_gamma(b, 0);
      if (i == j) entry += m.t_entry[i] ? IntPoly::variable() : IntPoly(m.D(i, i));
      out(i, j) = entry;
    }
  }
  return out;
}

namespace {

long max_abs_exponent(const PolyMatrix& m) {
  long x = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) x = std::max(x, m(i, j).max_abs_exponent());
  return x;
}

std::size_t truncation_for(const PolyMatrix& m, const LaurentPoly& det) {
  const long span = det.is_zero() ? 0 : det.max_exponent() - det.min_exponent();
  return default_truncation(m.rows(), max_abs_exponent(m), span);
}

std::vector<VertexId> marked_ids(const RamificationData& r) {
  std::vector<VertexId> out;
  for (const auto& kv : r.marks()) out.push_back(kv.first);
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw HypothesisError(what);
}

void require_cover_connected(const CoverGraph& c) {
  require(is_connected(c.graph), "cover X_" + std::to_string(c.n) + " is disconnected");
}

EmpiricalFit assemble_fit(unsigned long p, std::vector<TowerLevel> levels, unsigned first_usable) {
  EmpiricalFit f;
  f.levels = std::move(levels);
  const unsigned top = f.levels.back().n;
  auto window = [&](unsigned n0) {
    return fit_three_levels(p, n0, f.levels[n0].ord, f.levels[n0 + 1].ord, f.levels[n0 + 2].ord);
  };
  f.fit = window(top - 2);
  if (!f.fit) {
    f.note = "non-integral solution through the last three levels";
    return f;
  }
  if (top >= 3 && top - 3 >= first_usable) {
    f.previous = window(top - 3);
    f.stable = f.previous && f.previous->mu == f.fit->mu && f.previous->lambda == f.fit->lambda &&
               f.previous->nu == f.fit->nu;
    f.note = f.stable ? "fit agrees with the preceding window" : "fit differs from the preceding window";
  } else {
    f.stable = true;
    f.note = "single window; no cross-check available";
  }
  return f;
}

BigInt product_power(const std::vector<BigInt>& xs, unsigned long e) {
  BigInt r = 1;
  for (const auto& x : xs) r *= ipow(x, e);
  return r;
}

struct DecomposedBase {
  Multigraph pruned;
  SegmentDecomposition d;
  std::vector<RamifiedGraph> segments;
  std::vector<BigInt> F;
};

DecomposedBase decompose_base(const Multigraph& g, const RamificationData& r) {
  DecomposedBase b;
  b.pruned = prune_tails(g, r);
  b.d = decompose_or_throw(b.pruned, r);
  for (const auto& s : b.d.segments) {
    b.segments.push_back(segment_graph(b.pruned, r, s));
    b.F.push_back(forest_count_det(b.segments.back().graph, marked_ids(b.segments.back().ramification)).value);
  }
  return b;
}

void add_segment_notes(Verdict& v, const DecomposedBase& b) {
  v.notes.push_back("l = " + std::to_string(b.d.l()));
  for (std::size_t i = 0; i < b.F.size(); ++i)
    v.notes.push_back("F_" + std::to_string(b.d.segments[i].t) + "(S" + std::to_string(i + 1) +
                      ") = " + b.F[i].get_str());
}

Verdict compare(std::string name, const BigInt& lhs, const BigInt& rhs) {
  Verdict v;
  v.name = std::move(name);
  v.lhs = lhs.get_str();
  v.rhs = rhs.get_str();
  v.holds = lhs == rhs;
  return v;
}

void require_common(const Multigraph& g, const RamificationData& r, const VoltageAssignment& a,
                    unsigned long p) {
  check_marks(g, r);
  check_voltage(g, a);
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
  require(r.count() >= 1, "at least one ramified vertex is required");
  require(is_connected(g), "graph is disconnected");
}

}  // namespace

CharElement char_element(const Multigraph& g, const RamificationData& r, const VoltageAssignment& a,
                         unsigned long p) {
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
  GraphMatrices m = build_matrices(g, r, a);
  CharElement c;
  c.p = p;
  c.t_power = g.vertex_count() - m.unramified;
  c.det = det_laurent(m.M_alpha);
  c.truncation = truncation_for(m.M_alpha, c.det);
  c.body = expand_at_gamma(c.det, c.truncation);
  return c;
}

InvariantTriple symbolic_invariants(const CharElement& c) {
  require(!c.body.is_zero(), "characteristic element vanishes (a segment has no forests)");
  require(c.t_power >= 1, "characteristic element needs at least one ramified vertex");
  MuLambda ml = mu_lambda(c.body, c.p);
  return InvariantTriple{ml.mu, static_cast<long>(c.t_power) - 1 + ml.lambda, std::nullopt};
}

std::optional<InvariantTriple> fit_three_levels(unsigned long p, unsigned n0, long o0, long o1, long o2) {
  const auto P = static_cast<long long>(p);
  const long long pn0 = static_cast<long long>(upow(p, n0));
  const long long d1 = o1 - o0;
  const long long d2 = o2 - o1;
  const long long denom = pn0 * (P - 1) * (P - 1);
  if ((d2 - d1) % denom != 0) return std::nullopt;
  const long long mu = (d2 - d1) / denom;
  const long long lambda = d1 - mu * (pn0 * P - pn0);
  const long long nu = o2 - mu * pn0 * P * P - lambda * static_cast<long long>(n0 + 2);
  return InvariantTriple{static_cast<long>(mu), static_cast<long>(lambda), static_cast<long>(nu)};
}

unsigned default_nmax(unsigned long p, const RamificationData& r) {
  const unsigned base = p == 2 ? 3 : p == 3 ? 2 : 1;
  return std::max(base, r.max_depth() + 2);
}

EmpiricalFit empirical_invariants(const Multigraph& g, const RamificationData& r,
                                  const VoltageAssignment& a, unsigned long p, unsigned n_max) {
  require_common(g, r, a, p);
  if (n_max < 2) throw InputError("at least three tower levels are needed (n_max >= 2)");
  require(n_max >= r.max_depth() + 2, "n_max must be at least max ramification depth + 2");
  std::vector<TowerLevel> levels;
  for (unsigned n = 0; n <= n_max; ++n) {
    CoverGraph c = build_cover(g, r, a, p, n);
    require_cover_connected(c);
    TowerLevel t;
    t.n = n;
    t.vertices = c.graph.vertex_count();
    t.edges = c.graph.edge_count();
    t.count = kappa(c.graph).value;
    t.ord = ord_p(t.count, p);
    levels.push_back(std::move(t));
  }
  return assemble_fit(p, std::move(levels), r.max_depth());
}

bool Verdict::all_hold() const {
  if (!holds) return false;
  return std::all_of(checks.begin(), checks.end(), [](const Verdict& v) { return v.all_hold(); });
}

Verdict verify_theorem_A(const Multigraph& g, const RamificationData& r, const VoltageAssignment& a,
                         unsigned long p, unsigned n) {
  require_common(g, r, a, p);
  require(a.trivial(), "this identity needs the trivial voltage assignment");
  require(r.all_total(), "this identity needs every ramified vertex totally ramified");
  DecomposedBase b = decompose_base(g, r);
  CoverGraph c = build_cover(g, r, a, p, n);
  require_cover_connected(c);

  const unsigned long pn = upow(p, n);
  const BigInt base = kappa(g).value;
  BigInt rhs = base * ipow(p, n * (b.d.l() - 1)) * product_power(b.F, pn - 1);
  Verdict v = compare("kappa(X_n) = kappa(X) p^(n(l-1)) prod F^(p^n - 1)", kappa(c.graph).value, rhs);
  v.notes.push_back("kappa(X) = " + base.get_str());
  add_segment_notes(v, b);
  return v;
}

Verdict verify_partial_ramification(const Multigraph& g, const RamificationData& r,
                                    const VoltageAssignment& a, unsigned long p, unsigned n) {
  require_common(g, r, a, p);
  require(a.trivial(), "this identity needs the trivial voltage assignment");
  bool some_total = false;
  for (const auto& kv : r.marks()) some_total = some_total || kv.second == 0;
  require(some_total, "no totally ramified vertex: unsupported");
  const unsigned n0 = r.max_depth();
  require(n >= n0, "level n must be at least n0 = max depth");
  DecomposedBase b = decompose_base(g, r);

  CoverGraph cn = build_cover(g, r, a, p, n);
  CoverGraph c0 = build_cover(g, r, a, p, n0);
  require_cover_connected(cn);
  require_cover_connected(c0);
  unsigned long lprime = 0;
  for (const auto& kv : r.marks()) lprime += fiber_size(r, kv.first, p, n0);

  const BigInt k0 = kappa(c0.graph).value;
  const unsigned long e = upow(p, n) - upow(p, n0);
  BigInt rhs = k0 * ipow(p, (n - n0) * (lprime - 1)) * product_power(b.F, e);
  Verdict v = compare("kappa(X_n) = kappa(X_n0) p^((n-n0)(l'-1)) prod F^(p^n - p^n0)",
                      kappa(cn.graph).value, rhs);
  v.notes.push_back("n0 = " + std::to_string(n0));
  v.notes.push_back("kappa(X_n0) = " + k0.get_str());
  v.notes.push_back("l' = " + std::to_string(lprime));
  add_segment_notes(v, b);
  return v;
}

Verdict verify_general_case(const Multigraph& g, const RamificationData& r, const VoltageAssignment& a,
                            unsigned long p, unsigned n) {
  require_common(g, r, a, p);
  require(r.all_total(), "this identity needs every ramified vertex totally ramified");
  DecomposedBase b = decompose_base(g, r);
  CoverGraph full = build_cover(g, r, a, p, n);
  require_cover_connected(full);
  CoverGraph c = build_cover(b.pruned, r, restrict_voltage(b.pruned, a), p, n);

  const std::size_t k = b.d.segments.size();
  std::vector<BigInt> kap(k), F(k);
  for (std::size_t i = 0; i < k; ++i) {
    RamifiedGraph s = segment_preimage(c, b.d.segments[i]);
    kap[i] = kappa(s.graph).value;
    F[i] = forest_count_det(s.graph, marked_ids(s.ramification)).value;
  }
  const auto sets = admissible_sets(b.d);
  BigInt rhs = 0;
  for (const auto& I : sets) {
    BigInt term = 1;
    std::vector<bool> in(k, false);
    for (auto i : I) in[i] = true;
    for (std::size_t i = 0; i < k; ++i) term *= in[i] ? kap[i] : F[i];
    rhs += term;
  }
  Verdict v = compare("kappa(X_n) = sum over admissible I of prod kappa(S_n^i) prod F(S_n^j)",
                      kappa(full.graph).value, rhs);
  v.notes.push_back("admissible sets = " + std::to_string(sets.size()));
  add_segment_notes(v, b);
  for (std::size_t i = 0; i < k; ++i) {
    v.notes.push_back("kappa(S" + std::to_string(i + 1) + "_n) = " + kap[i].get_str());
    v.notes.push_back("F(S" + std::to_string(i + 1) + "_n) = " + F[i].get_str());
  }

  if (a.trivial()) {
    const unsigned long pn = upow(p, n);
    for (std::size_t i = 0; i < k; ++i) {
      const std::string tag = "S" + std::to_string(i + 1);
      if (b.d.segments[i].t == 2) {
        const BigInt base = kappa(b.segments[i].graph).value;
        v.checks.push_back(compare("kappa(" + tag + "_n) = p^n kappa(" + tag + ") F^(p^n - 1)", kap[i],
                                   BigInt(static_cast<unsigned long>(pn)) * base * ipow(b.F[i], pn - 1)));
      }
      v.checks.push_back(compare("F(" + tag + "_n) = F(" + tag + ")^(p^n)", F[i], ipow(b.F[i], pn)));
    }
    const BigInt thmA = kappa(g).value * ipow(p, n * (b.d.l() - 1)) * product_power(b.F, pn - 1);
    v.checks.push_back(compare("admissible-set sum = kappa(X) p^(n(l-1)) prod F^(p^n - 1)", rhs, thmA));
  }
  return v;
}

LaurentPoly segment_factor(const Multigraph& g, const RamificationData& r, const VoltageAssignment& a) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (!r.is_ramified(g.vertex(v))) return det_laurent(build_matrices(g, r, a).M_alpha);
  return LaurentPoly(1);
}

Verdict verify_char_factorization(const Multigraph& g, const RamificationData& r,
                                  const VoltageAssignment& a, unsigned long p) {
  require_common(g, r, a, p);
  DecomposedBase b = decompose_base(g, r);
  CharElement c = char_element(g, r, a, p);

  LaurentPoly product(1);
  IntPoly expanded_product(1);
  std::vector<LaurentPoly> factors;
  for (const auto& s : b.segments) {
    factors.push_back(segment_factor(s.graph, s.ramification, restrict_voltage(s.graph, a)));
    product = product * factors.back();
    expanded_product = (expanded_product * expand_at_gamma(factors.back(), c.truncation)).truncated(c.truncation);
  }
  Verdict v;
  v.name = "det M_alpha(X) = prod det M_alpha(S^i)";
  v.lhs = c.det.to_string();
  v.rhs = product.to_string();
  v.holds = c.det == product;
  for (std::size_t i = 0; i < factors.size(); ++i)
    v.notes.push_back("det M_alpha(S" + std::to_string(i + 1) + ") = " + factors[i].to_string());

  Verdict ex;
  ex.name = "body = prod of expanded segment factors (mod T^(N+1))";
  ex.lhs = c.body.truncated(c.truncation).to_string();
  ex.rhs = expanded_product.to_string();
  ex.holds = c.body.truncated(c.truncation) == expanded_product;
  v.checks.push_back(ex);

  bool degenerate = c.body.is_zero();
  long mu_sum = 0, lambda_sum = 0;
  for (const auto& f : factors) {
    if (f.is_zero()) {
      degenerate = true;
      break;
    }
    const long span = f.max_exponent() - f.min_exponent();
    MuLambda ml = mu_lambda(expand_at_gamma(f, default_truncation(1, f.max_abs_exponent(), span)), p);
    mu_sum += ml.mu;
    lambda_sum += ml.lambda;
  }
  if (degenerate) {
    v.notes.push_back("a segment factor vanishes; invariant additivity not checked");
    return v;
  }
  InvariantTriple t = symbolic_invariants(c);
  v.checks.push_back(compare("mu = sum mu_i", t.mu, mu_sum));
  v.checks.push_back(compare("lambda = sum lambda_i + l - 1", t.lambda,
                             lambda_sum + static_cast<long>(b.d.l()) - 1));
  return v;
}

SegmentGrowth segment_growth_invariants(const RamifiedGraph& segment, const VoltageAssignment& alpha,
                                        unsigned long p, unsigned n_max) {
  const auto& g = segment.graph;
  const VoltageAssignment a = restrict_voltage(g, alpha);
  const auto& r = segment.ramification;
  require_common(g, r, a, p);
  require(r.count() == 1 || r.count() == 2, "a segment has one or two ramified vertices");
  require(r.all_total(), "segment growth needs totally ramified vertices");
  if (n_max < 2) throw InputError("at least three tower levels are needed (n_max >= 2)");

  std::vector<TowerLevel> levels;
  for (unsigned n = 0; n <= n_max; ++n) {
    CoverGraph c = build_cover(g, r, a, p, n);
    TowerLevel t;
    t.n = n;
    t.vertices = c.graph.vertex_count();
    t.edges = c.graph.edge_count();
    t.count = forest_count_det(c.graph, marked_ids(c.ramification)).value;
    require(sgn(t.count) != 0, "segment preimage has no spanning forests at level " + std::to_string(n));
    t.ord = ord_p(t.count, p);
    levels.push_back(std::move(t));
  }
  SegmentGrowth s;
  s.empirical = assemble_fit(p, std::move(levels), 0);
  const LaurentPoly f = segment_factor(g, r, a);
  const long span = f.max_exponent() - f.min_exponent();
  s.symbolic = mu_lambda(expand_at_gamma(f, default_truncation(1, f.max_abs_exponent(), span)), p);
  s.agrees = s.empirical.fit && s.empirical.fit->mu == s.symbolic.mu &&
             s.empirical.fit->lambda == s.symbolic.lambda;
  return s;
}

}  // namespace zpt
