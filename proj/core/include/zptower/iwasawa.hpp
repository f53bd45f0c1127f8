#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zptower/cover.hpp"
#include "zptower/forests.hpp"
#include "zptower/linalg.hpp"
#include "zptower/seal.hpp"

namespace zpt {

// Vertices are ordered unramified first, each block in graph order.
struct GraphMatrices {
  std::vector<std::size_t> order;
  std::size_t unramified = 0;  // r
  IntMatrix D;                 // degree on unramified entries, 1 on ramified
  std::vector<bool> t_entry;   // D' equals D with T on these diagonal entries
  PolyMatrix A_alpha;          // column j (unramified) row i: sum of g^{a_e} over darts v_j -> v_i
  PolyMatrix B;                // the same entries read in the Iwasawa algebra
  PolyMatrix M_alpha;          // unramified block of D - A_alpha
};

GraphMatrices build_matrices(const Multigraph& g, const RamificationData& r,
                             const VoltageAssignment& a);

// D' - B with g = 1 + T substituted entrywise. Needs non-negative voltages
// on every dart that contributes, i.e. an exact polynomial matrix.
Matrix<IntPoly> d_prime_minus_b(const GraphMatrices& m);

// T^{t_power} * body, body the expansion of det(M_alpha) at g = 1 + T.
struct CharElement {
  unsigned long p = 0;
  std::size_t t_power = 0;
  LaurentPoly det;  // det(M_alpha) in Z[g, g^-1]
  IntPoly body;
  std::size_t truncation = 0;
};

CharElement char_element(const Multigraph& g, const RamificationData& r, const VoltageAssignment& a,
                         unsigned long p);

struct InvariantTriple {
  long mu = 0;
  long lambda = 0;
  std::optional<long> nu;
};

InvariantTriple symbolic_invariants(const CharElement& c);

struct TowerLevel {
  unsigned n = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  BigInt count;  // kappa(X_n), or F_t(S_n) for segment towers
  long ord = 0;
};

struct EmpiricalFit {
  std::vector<TowerLevel> levels;
  std::optional<InvariantTriple> fit;        // last three levels
  std::optional<InvariantTriple> previous;   // the window one level earlier
  bool stable = false;
  std::string note;
};

// Exact solution of mu p^k + lambda k + nu = o_k for k = n0, n0+1, n0+2;
// empty when the rational solution is not integral.
std::optional<InvariantTriple> fit_three_levels(unsigned long p, unsigned n0, long o0, long o1, long o2);

EmpiricalFit empirical_invariants(const Multigraph& g, const RamificationData& r,
                                  const VoltageAssignment& a, unsigned long p, unsigned n_max);

unsigned default_nmax(unsigned long p, const RamificationData& r);

struct Verdict {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool holds = false;
  std::vector<std::string> notes;
  std::vector<Verdict> checks;

  bool all_hold() const;
};

Verdict verify_theorem_A(const Multigraph& g, const RamificationData& r, const VoltageAssignment& a,
                         unsigned long p, unsigned n);
Verdict verify_partial_ramification(const Multigraph& g, const RamificationData& r,
                                    const VoltageAssignment& a, unsigned long p, unsigned n);
Verdict verify_general_case(const Multigraph& g, const RamificationData& r, const VoltageAssignment& a,
                            unsigned long p, unsigned n);
Verdict verify_char_factorization(const Multigraph& g, const RamificationData& r,
                                  const VoltageAssignment& a, unsigned long p);

// det(M_alpha) of a segment; 1 when the segment has no unramified vertex.
LaurentPoly segment_factor(const Multigraph& g, const RamificationData& r, const VoltageAssignment& a);

struct SegmentGrowth {
  EmpiricalFit empirical;
  MuLambda symbolic;
  bool agrees = false;
};

SegmentGrowth segment_growth_invariants(const RamifiedGraph& segment, const VoltageAssignment& a,
                                        unsigned long p, unsigned n_max);

}  // namespace zpt
