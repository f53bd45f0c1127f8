#include "zptower/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zpt {

IntPoly::IntPoly(const BigInt& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t deg) {
  IntPoly p;
  if (sgn(c) == 0) return p;
  p.c_.assign(deg + 1, BigInt(0));
  p.c_[deg] = c;
  return p;
}

void IntPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

IntPoly IntPoly::truncated(std::size_t deg) const {
  if (c_.size() <= deg + 1) return *this;
  return IntPoly(std::vector<BigInt>(c_.begin(), c_.begin() + static_cast<long>(deg) + 1));
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly operator-(IntPoly a) {
  for (auto& c : a.c_) c = -c;
  return a;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(r));
}

IntPoly IntPoly::divexact(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  if (num.is_zero()) return IntPoly();
  std::vector<BigInt> rem = num.c_;
  const std::size_t dn = den.c_.size();
  if (rem.size() < dn) throw std::logic_error("inexact polynomial division");
  std::vector<BigInt> q(rem.size() - dn + 1, BigInt(0));
  const BigInt& lead = den.c_.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const BigInt& top = rem[k + dn - 1];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw std::logic_error("inexact polynomial division");
    BigInt c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= c * den.c_[j];
    q[k] = c;
  }
  for (const auto& r : rem)
    if (sgn(r) != 0) throw std::logic_error("inexact polynomial division");
  return IntPoly(std::move(q));
}

namespace {

void write_term(std::ostringstream& os, bool first, const BigInt& c, long e, const char* var) {
  BigInt a = abs(c);
  if (first) {
    if (sgn(c) < 0) os << "-";
  } else {
    os << (sgn(c) < 0 ? " - " : " + ");
  }
  if (e == 0 || a != 1) os << a.get_str();
  if (e != 0) {
    if (a != 1) os << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
}

}  // namespace

std::string IntPoly::to_string(const char* var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    write_term(os, first, c_[i], static_cast<long>(i), var);
    first = false;
  }
  return os.str();
}

LaurentPoly::LaurentPoly(const BigInt& c) {
  if (sgn(c) != 0) t_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(const BigInt& c, long exponent) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::from_poly(const IntPoly& p, long shift) {
  LaurentPoly r;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    r.add_term(static_cast<long>(i) + shift, p.coeffs()[i]);
  return r;
}

void LaurentPoly::add_term(long e, const BigInt& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = t_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) t_.erase(it);
  }
}

BigInt LaurentPoly::coeff(long e) const {
  auto it = t_.find(e);
  return it == t_.end() ? BigInt(0) : it->second;
}

long LaurentPoly::min_exponent() const {
  if (t_.empty()) throw std::domain_error("min_exponent of zero Laurent polynomial");
  return t_.begin()->first;
}

long LaurentPoly::max_exponent() const {
  if (t_.empty()) throw std::domain_error("max_exponent of zero Laurent polynomial");
  return t_.rbegin()->first;
}

long LaurentPoly::max_abs_exponent() const {
  if (t_.empty()) return 0;
  return std::max(std::labs(t_.begin()->first), std::labs(t_.rbegin()->first));
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r;
  for (const auto& [e, c] : t_) r.t_.emplace(e + k, c);
  return r;
}

IntPoly LaurentPoly::to_poly() const {
  if (t_.empty()) return IntPoly();
  if (min_exponent() < 0) throw std::domain_error("to_poly with negative exponent");
  std::vector<BigInt> c(static_cast<std::size_t>(max_exponent()) + 1, BigInt(0));
  for (const auto& [e, v] : t_) c[static_cast<std::size_t>(e)] = v;
  return IntPoly(std::move(c));
}

BigInt LaurentPoly::eval_at_one() const {
  BigInt s = 0;
  for (const auto& kv : t_) s += kv.second;
  return s;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) r.add_term(ea + eb, ca * cb);
  return r;
}

std::string LaurentPoly::to_string(const char* var) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : t_) {
    write_term(os, first, c, e, var);
    first = false;
  }
  return os.str();
}

}  // namespace zpt
