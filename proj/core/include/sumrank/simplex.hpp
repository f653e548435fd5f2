#pragma once

#include <cstddef>
#include <vector>

#include "sumrank/bigint.hpp"

namespace sumrank {

using RationalMatrix = std::vector<std::vector<BigRational>>;
using RationalVector = std::vector<BigRational>;

struct LpResult {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status = Status::Infeasible;
    RationalVector x;          // original variables
    BigRational value;         // c^T x
    std::vector<std::size_t> basis; // indices into [x | slacks]
};

// maximize c^T x subject to A x <= b, x >= 0, by two-phase simplex with
// Bland's rule over exact rationals.
LpResult simplex_maximize(const RationalMatrix& a, const RationalVector& b, const RationalVector& c);

struct LpCertificate {
    bool valid = false;
    RationalVector y; // dual solution
};

// Recomputes duals from the final basis (B^T y = c_B) and checks primal
// feasibility, y >= 0, A^T y >= c and c^T x = b^T y, all exactly.
LpCertificate verify_optimality(const RationalMatrix& a, const RationalVector& b, const RationalVector& c,
                                const LpResult& result);

} // namespace sumrank
