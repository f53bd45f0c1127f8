#include "zptower/bigint.hpp"

#include <stdexcept>

namespace zpt {

BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

std::uint64_t upow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) {
    if (base != 0 && r > UINT64_MAX / base) throw std::overflow_error("upow overflow");
    r *= base;
  }
  return r;
}

long ord_p(const BigInt& x, unsigned long p) {
  if (sgn(x) == 0) throw std::domain_error("ord_p of zero");
  if (p < 2) throw std::domain_error("ord_p with p < 2");
  BigInt q = abs(x);
  long k = 0;
  while (mpz_divisible_ui_p(q.get_mpz_t(), p)) {
    mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), p);
    ++k;
  }
  return k;
}

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace zpt
