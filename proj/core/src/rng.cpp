#include "sumrank/rng.hpp"

#include <stdexcept>

namespace sumrank {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t mix64(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t Rng::next()
{
    ++counter_;
    return mix64(seed_ + counter_ * kGolden);
}

std::uint64_t Rng::below(std::uint64_t bound)
{
    if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
    if ((bound & (bound - 1)) == 0) return next() & (bound - 1);
    // Reject the top partial block so every residue is equally likely.
    const std::uint64_t limit = (~std::uint64_t{0}) - ((~std::uint64_t{0}) % bound + 1) % bound;
    for (;;) {
        std::uint64_t v = next();
        if (v <= limit) return v % bound;
    }
}

BigInt Rng::below(const BigInt& bound)
{
    if (sgn(bound) <= 0) throw std::invalid_argument("Rng::below: non-positive bound");
    if (bound == 1) return 0;
    BigInt top = bound - 1;
    const std::size_t bits = mpz_sizeinbase(top.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    const unsigned spare = static_cast<unsigned>(words * 64 - bits);
    for (;;) {
        BigInt v = 0;
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t word = next();
            if (w == 0 && spare) word >>= spare;
            v <<= 64;
            BigInt part;
            mpz_import(part.get_mpz_t(), 1, 1, sizeof(word), 0, 0, &word);
            v += part;
        }
        if (v < bound) return v;
    }
}

double Rng::uniform01()
{
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

Rng Rng::split(std::uint64_t stream) const
{
    return Rng(mix64(seed_ ^ mix64(stream + kGolden)));
}

} // namespace sumrank
