#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sumrank/bigint.hpp"

namespace sumrank {

// Counter-based generator: output i is a SplitMix64 finalizer applied to
// seed + i * golden. The stream is a pure function of (seed, counter), so
// results are identical on every platform. Child streams come from split().
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : seed_(seed) {}

    std::uint64_t next();

    // Uniform integer in [0, bound). bound must be nonzero.
    std::uint64_t below(std::uint64_t bound);

    // Uniform big integer in [0, bound) by rejection on ceil(log2 bound) bits.
    BigInt below(const BigInt& bound);

    double uniform01();

    // Independent child stream; deterministic in (seed, stream).
    Rng split(std::uint64_t stream) const;

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t counter() const noexcept { return counter_; }

    template <class T>
    void shuffle(std::span<T> items)
    {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

    template <class T>
    void shuffle(std::vector<T>& items) { shuffle(std::span<T>(items)); }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

std::uint64_t mix64(std::uint64_t z) noexcept;

} // namespace sumrank
