#pragma once

#include <cstdint>
#include <vector>

#include "sumrank/bigint.hpp"
#include "sumrank/srspace.hpp"

namespace sumrank {

// Number of b-dimensional subspaces of GF(q)^a; 0 when b > a or b < 0.
BigInt gaussian_binomial(int a, int b, std::uint64_t q);

// a x b matrices over GF(q) of rank exactly i. Throws IndexOutOfRange.
BigInt num_matrices_of_rank(int a, int b, int i, std::uint64_t q);

// |T_{t,ell,mu}|: vectors in {0..mu}^ell summing to t.
BigInt num_decompositions(int t, int ell, int mu);

// All of T_{t,ell,mu} in lexicographic order.
std::vector<IntVector> all_decompositions(int t, int ell, int mu);
// The non-increasing members of T_{t,ell,mu}, lexicographically ascending.
std::vector<IntVector> ordered_decompositions(int t, int ell, int mu);
// Number of distinct permutations of v.
BigInt multiset_permutations(const IntVector& v);

// Table of sphere sizes N(t', ell') for t' <= t_max, ell' <= ell_max.
class SphereTable {
public:
    SphereTable(std::uint64_t q, int eta, int m, int t_max, int ell_max);

    const BigInt& at(int t, int ell) const;
    int t_max() const noexcept { return t_max_; }
    int ell_max() const noexcept { return ell_max_; }
    int mu() const noexcept { return mu_; }
    // NM(m, eta, i).
    const BigInt& block_count(int i) const;

private:
    std::uint64_t q_;
    int eta_, m_, mu_, t_max_, ell_max_;
    std::vector<BigInt> nm_;
    std::vector<BigInt> table_; // (t_max+1) x (ell_max+1), t-major
};

BigInt sphere_size(int t, int ell, std::uint64_t q, int eta, int m);

// gamma_q = prod_{i>=1} (1 - q^-i)^-1, as an upper bound: 64 factors times (1 + 2 q^-64).
double log2_gamma_upper(std::uint64_t q);
BigRational gamma_upper_rational(std::uint64_t q);

// log2 of gamma_q^ell * C(ell+t-1, ell-1) * q^{t(m+eta-t/ell)}. Throws InvalidParams for ell < 1.
double sphere_size_log2_upper_bound(int t, int ell, std::uint64_t q, int eta, int m);

} // namespace sumrank
