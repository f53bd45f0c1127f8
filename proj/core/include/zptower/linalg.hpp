#pragma once

#include <stdexcept>

#include "zptower/matrix.hpp"
#include "zptower/poly.hpp"

namespace zpt {

using PolyMatrix = Matrix<LaurentPoly>;

inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }
inline bool is_zero(const IntPoly& x) { return x.is_zero(); }

BigInt exact_div(const BigInt& num, const BigInt& den);
inline IntPoly exact_div(const IntPoly& num, const IntPoly& den) { return IntPoly::divexact(num, den); }

// Fraction-free Gaussian elimination over an integral domain with exact
// division. Every division by the previous pivot is checked.
template <class T>
T bareiss_det(Matrix<T> m) {
  if (!m.square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  bool negate = false;
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t piv = k + 1;
      while (piv < n && is_zero(m(piv, k))) ++piv;
      if (piv == n) return T(0);
      m.swap_rows(k, piv);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = exact_div(v, prev);
      }
      m(i, k) = T(0);
    }
    prev = m(k, k);
  }
  T d = m(n - 1, n - 1);
  if (negate) d = T(0) - d;
  return d;
}

BigInt det_int(const IntMatrix& m);
IntPoly det_poly(const Matrix<IntPoly>& m);
LaurentPoly det_laurent(const PolyMatrix& m);

// Substitutes g = 1 + T. Negative powers use the binomial series of
// (1+T)^-m cut at truncation_degree; the whole result is then cut there too.
// Without negative powers the expansion is exact and the cut is ignored.
IntPoly expand_at_gamma(const LaurentPoly& f, std::size_t truncation_degree);

// Truncation degree large enough to read mu and lambda exactly for a
// determinant of a dim x dim matrix whose entries have exponents bounded by
// max_abs_exponent (span = max - min exponent of the determinant).
std::size_t default_truncation(std::size_t dim, long max_abs_exponent, long span = 0);

struct MuLambda {
  long mu = 0;
  long lambda = 0;
  friend bool operator==(const MuLambda&, const MuLambda&) = default;
};

MuLambda mu_lambda(const IntPoly& f, unsigned long p);

}  // namespace zpt
