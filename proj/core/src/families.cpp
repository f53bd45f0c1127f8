#include "zptower/families.hpp"

#include <algorithm>

#include "zptower/errors.hpp"

namespace zpt {

namespace {

std::string v(unsigned k) { return "v" + std::to_string(k); }

std::vector<VertexId> path_vertices(unsigned k) {
  std::vector<VertexId> ids;
  for (unsigned q = 1; q <= k; ++q) ids.push_back(v(q));
  return ids;
}

RamificationData marks(unsigned a, unsigned b) {
  RamificationData r;
  r.mark(v(a), 0);
  r.mark(v(b), 0);
  return r;
}

void need(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

// Cases with 1 <= i < j <= t, or 2 <= i < t < j.
BigInt chorded_direct(long n, long t, long i, long j) {
  if (j <= t) {
    if (j == i + 1) return (i == 1 && t == 2) ? n - 1 : (2 * t - 3) * (n - t + 1);
    if (i == 1 && t == j) return (t - 1) * (n - t + 1);
    return (n - t + 1) * ((t - j + i) * (j - i + 1) - 1);
  }
  return (n - j + 1) * ((i - 1) * (j - i + 1) + (t - i)) + (j - t) * ((t - i) * (n - j + i + 1) + (i - 1));
}

bool chorded_direct_applies(long t, long i, long j) { return j <= t || (2 <= i && i <= t - 1 && j > t); }

}  // namespace

std::string variant_name(const FamilySpec& s) {
  switch (s.index()) {
    case 0: return "line";
    case 1: return "modified_line";
    case 2: return "chorded_cycle";
    default: return "complete";
  }
}

FamilySpec validate(const FamilySpec& s) {
  if (auto* l = std::get_if<LineSpec>(&s)) {
    need(!l->multiplicities.empty(), "line graph needs at least one multiplicity");
    for (auto m : l->multiplicities) need(m >= 1, "line multiplicities are positive");
    return s;
  }
  if (auto* m = std::get_if<ModifiedLineSpec>(&s)) {
    need(m->k >= 4, "modified line needs k >= 4");
    need(m->n >= 2 && m->n + 2 <= m->k, "modified line needs 2 <= n <= k - 2");
    need(m->m >= m->n + 2 && m->m <= m->k, "modified line needs n + 2 <= m <= k");
    return s;
  }
  if (auto* c = std::get_if<ChordedCycleSpec>(&s)) {
    ChordedCycleSpec out = *c;
    need(out.n >= 3, "chorded cycle needs n >= 3");
    need(out.t >= 2 && out.t <= (out.n + 1) / 2, "chorded cycle needs 2 <= t <= ceil(n/2)");
    if (out.i > out.j) std::swap(out.i, out.j);
    need(out.i >= 1 && out.j <= out.n, "chord endpoints lie in 1..n");
    need(out.i != out.j, "chord endpoints differ");
    return out;
  }
  const auto& k = std::get<CompleteSpec>(s);
  need(k.n >= 2, "complete graph needs n >= 2");
  return s;
}

RamifiedGraph make_family(const FamilySpec& spec) {
  const FamilySpec s = validate(spec);
  std::vector<EdgeSpec> es;
  if (auto* l = std::get_if<LineSpec>(&s)) {
    const auto k = static_cast<unsigned>(l->multiplicities.size()) + 1;
    for (unsigned q = 1; q < k; ++q)
      for (unsigned c = 1; c <= l->multiplicities[q - 1]; ++c)
        es.push_back({"e" + std::to_string(q) + "_" + std::to_string(c), v(q), v(q + 1)});
    return {build_graph(path_vertices(k), es), marks(1, k)};
  }
  if (auto* m = std::get_if<ModifiedLineSpec>(&s)) {
    for (unsigned q = 1; q < m->k; ++q) es.push_back({"e" + std::to_string(q), v(q), v(q + 1)});
    es.push_back({"c", v(m->n), v(m->m)});
    return {build_graph(path_vertices(m->k), es), marks(1, m->k)};
  }
  if (auto* c = std::get_if<ChordedCycleSpec>(&s)) {
    for (unsigned q = 1; q <= c->n; ++q) es.push_back({"e" + std::to_string(q), v(q), v(q % c->n + 1)});
    es.push_back({"c", v(c->i), v(c->j)});
    return {build_graph(path_vertices(c->n), es), marks(1, c->t)};
  }
  const auto& k = std::get<CompleteSpec>(s);
  for (unsigned a = 1; a <= k.n; ++a)
    for (unsigned b = a + 1; b <= k.n; ++b)
      es.push_back({"e" + std::to_string(a) + "_" + std::to_string(b), v(a), v(b)});
  return {build_graph(path_vertices(k.n), es), marks(1, 2)};
}

BigInt f2_closed_form(const FamilySpec& spec) {
  const FamilySpec s = validate(spec);
  if (auto* l = std::get_if<LineSpec>(&s)) {
    BigRat prod = 1, sum = 0;
    for (auto m : l->multiplicities) {
      prod *= m;
      sum += BigRat(1, m);
    }
    BigRat f = prod * sum;
    f.canonicalize();
    if (f.get_den() != 1) throw std::logic_error("line-graph forest count is not integral");
    return f.get_num();
  }
  if (auto* m = std::get_if<ModifiedLineSpec>(&s)) {
    const long k = m->k, n = m->n, mm = m->m;
    return BigInt((k - mm + n) * (mm - n + 1) - 1);
  }
  if (auto* c = std::get_if<ChordedCycleSpec>(&s)) {
    long n = c->n, t = c->t, i = c->i, j = c->j;
    if (!chorded_direct_applies(t, i, j)) {
      // Reflection fixing v1: v_k -> v_{n+2-k}, which sends v_t to v_{n+2-t}.
      auto refl = [n](long x) { return x == 1 ? 1L : n + 2 - x; };
      long a = refl(i), b = refl(j);
      i = std::min(a, b);
      j = std::max(a, b);
      t = n + 2 - t;
    }
    return chorded_direct(n, t, i, j);
  }
  const auto& k = std::get<CompleteSpec>(s);
  // Sum over the size i of the tree holding v1.
  BigInt total = 0;
  const unsigned long n = k.n;
  for (unsigned long i = 1; i <= n - 1; ++i) {
    BigInt choose;
    mpz_bin_uiui(choose.get_mpz_t(), n - 2, i - 1);
    const BigInt a = i >= 2 ? ipow(i, i - 2) : BigInt(1);  // i^(i-2) with 1^(-1) = 1
    const BigInt b = n - i >= 2 ? ipow(n - i, n - i - 2) : BigInt(1);
    total += choose * a * b;
  }
  return total;
}

}  // namespace zpt
