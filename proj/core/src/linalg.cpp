#include "zptower/linalg.hpp"

#include <algorithm>

namespace zpt {

BigInt exact_div(const BigInt& num, const BigInt& den) {
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::logic_error("inexact Bareiss division");
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

BigInt det_int(const IntMatrix& m) { return bareiss_det(m); }

IntPoly det_poly(const Matrix<IntPoly>& m) { return bareiss_det(m); }

LaurentPoly det_laurent(const PolyMatrix& m) {
  if (!m.square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<IntPoly> cleared(n, n);
  long total_shift = 0;
  for (std::size_t i = 0; i < n; ++i) {
    long lo = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (!m(i, j).is_zero()) lo = std::min(lo, m(i, j).min_exponent());
    total_shift += -lo;
    for (std::size_t j = 0; j < n; ++j) cleared(i, j) = m(i, j).shifted(-lo).to_poly();
  }
  return LaurentPoly::from_poly(det_poly(cleared), -total_shift);
}

namespace {

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

IntPoly expand_at_gamma(const LaurentPoly& f, std::size_t truncation_degree) {
  if (f.is_zero()) return IntPoly();
  const bool has_negative = f.min_exponent() < 0;
  const std::size_t width = has_negative ? truncation_degree + 1
                                        : static_cast<std::size_t>(f.max_exponent()) + 1;
  std::vector<BigInt> out(width, BigInt(0));
  for (const auto& [e, c] : f.terms()) {
    if (e >= 0) {
      const auto ue = static_cast<unsigned long>(e);
      for (unsigned long i = 0; i <= ue && i < out.size(); ++i) out[i] += c * binomial(ue, i);
    } else {
      // (1+T)^-m = sum_i C(m+i-1, i) (-T)^i
      const auto m = static_cast<unsigned long>(-e);
      for (unsigned long i = 0; i < out.size(); ++i) {
        BigInt term = c * binomial(m + i - 1, i);
        if (i % 2 == 1) out[i] -= term;
        else out[i] += term;
      }
    }
  }
  return IntPoly(std::move(out));
}

std::size_t default_truncation(std::size_t dim, long max_abs_exponent, long span) {
  const std::size_t a = dim * static_cast<std::size_t>(std::max(0L, max_abs_exponent)) + 8;
  const std::size_t b = static_cast<std::size_t>(std::max(0L, span)) + 1;
  return std::max(a, b);
}

MuLambda mu_lambda(const IntPoly& f, unsigned long p) {
  if (f.is_zero()) throw std::domain_error("mu/lambda of the zero polynomial");
  MuLambda r{-1, 0};
  const auto& c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    long o = ord_p(c[i], p);
    if (r.mu < 0 || o < r.mu) {
      r.mu = o;
      r.lambda = static_cast<long>(i);
    }
  }
  return r;
}

}  // namespace zpt
