#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace zpt {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline std::string to_string(const BigInt& x) { return x.get_str(); }

BigInt ipow(const BigInt& base, unsigned long e);
std::uint64_t upow(std::uint64_t base, unsigned e);

// p-adic valuation of a nonzero integer.
long ord_p(const BigInt& x, unsigned long p);

bool is_prime(unsigned long p);

}  // namespace zpt
