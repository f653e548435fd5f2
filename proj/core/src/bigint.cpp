#include "sumrank/bigint.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sumrank {

BigInt ipow(std::uint64_t base, std::uint64_t exp)
{
    BigInt b(static_cast<unsigned long>(base));
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

BigInt factorial(std::uint64_t n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt binomial(std::int64_t n, std::int64_t k)
{
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

double log2_big(const BigInt& x)
{
    if (sgn(x) == 0) return -std::numeric_limits<double>::infinity();
    if (sgn(x) < 0) throw std::domain_error("log2_big: negative argument");
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
    return std::log2(mant) + static_cast<double>(exp);
}

double log2_big(const BigRational& x)
{
    if (sgn(x) == 0) return -std::numeric_limits<double>::infinity();
    return log2_big(BigInt(x.get_num())) - log2_big(BigInt(x.get_den()));
}

std::string to_decimal(const BigInt& x) { return x.get_str(10); }

std::string to_decimal(const BigRational& x) { return x.get_str(10); }

} // namespace sumrank
