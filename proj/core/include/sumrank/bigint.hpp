#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace sumrank {

using BigInt = mpz_class;
using BigRational = mpq_class;

BigInt ipow(std::uint64_t base, std::uint64_t exp);
BigInt factorial(std::uint64_t n);
BigInt binomial(std::int64_t n, std::int64_t k);

// log2 of a positive big number, computed from the leading 53 bits and the
// bit length so values with thousands of bits keep full double precision.
// Returns -inf for zero.
double log2_big(const BigInt& x);
double log2_big(const BigRational& x);

std::string to_decimal(const BigInt& x);
std::string to_decimal(const BigRational& x);

} // namespace sumrank
