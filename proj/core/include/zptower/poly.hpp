#pragma once

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "zptower/bigint.hpp"

namespace zpt {

// Polynomial in T with integer coefficients, lowest degree first.
class IntPoly {
 public:
  static constexpr long kZeroDegree = std::numeric_limits<long>::min();

  IntPoly() = default;
  IntPoly(const BigInt& c);  // NOLINT: constants convert implicitly
  IntPoly(long c) : IntPoly(BigInt(c)) {}  // NOLINT
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly monomial(const BigInt& c, std::size_t deg);
  static IntPoly variable() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return c_.empty() ? kZeroDegree : static_cast<long>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

  // Drops every term of degree > deg.
  IntPoly truncated(std::size_t deg) const;
  BigInt eval(const BigInt& x) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator-(IntPoly a);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  // Quotient when den divides num exactly in Z[T]; throws std::logic_error otherwise.
  static IntPoly divexact(const IntPoly& num, const IntPoly& den);

  std::string to_string(const char* var = "T") const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

// Element of Z[g, g^-1], stored sparsely by exponent of g.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const BigInt& c);  // NOLINT
  LaurentPoly(long c) : LaurentPoly(BigInt(c)) {}  // NOLINT

  static LaurentPoly monomial(const BigInt& c, long exponent);
  // p(g) * g^shift for p read as a polynomial in g.
  static LaurentPoly from_poly(const IntPoly& p, long shift = 0);

  bool is_zero() const { return t_.empty(); }
  const std::map<long, BigInt>& terms() const { return t_; }
  BigInt coeff(long e) const;
  long min_exponent() const;
  long max_exponent() const;
  long max_abs_exponent() const;

  LaurentPoly shifted(long k) const;
  // Coefficients as a polynomial in g; requires min_exponent() >= 0.
  IntPoly to_poly() const;
  BigInt eval_at_one() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  std::string to_string(const char* var = "g") const;

 private:
  void add_term(long e, const BigInt& c);
  std::map<long, BigInt> t_;
};

}  // namespace zpt
