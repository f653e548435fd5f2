#include "sumrank/simplex.hpp"

#include <optional>

#include "sumrank/error.hpp"

namespace sumrank {

namespace {

struct Tableau {
    std::vector<RationalVector> rows; // each row: coefficients then rhs
    std::vector<std::size_t> basis;
    std::size_t ncols = 0;

    void pivot(std::size_t r, std::size_t c)
    {
        RationalVector& pr = rows[r];
        const BigRational inv = 1 / pr[c];
        for (auto& v : pr)
            if (v != 0) v *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const BigRational f = rows[i][c];
            for (std::size_t j = 0; j <= ncols; ++j)
                if (pr[j] != 0) rows[i][j] -= f * pr[j];
        }
        basis[r] = c;
    }

    // Reduced costs c_j - c_B^T column_j.
    RationalVector reduced(const RationalVector& cost) const
    {
        RationalVector red(ncols);
        for (std::size_t j = 0; j < ncols; ++j) {
            BigRational v = cost[j];
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (rows[i][j] != 0 && cost[basis[i]] != 0) v -= cost[basis[i]] * rows[i][j];
            red[j] = v;
        }
        return red;
    }

    // Returns false when unbounded.
    bool optimize(const RationalVector& cost, const std::vector<char>& allowed)
    {
        for (;;) {
            RationalVector red = reduced(cost);
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < ncols; ++j)
                if (allowed[j] && red[j] > 0) {
                    enter = j;
                    break;
                }
            if (!enter) return true;
            std::optional<std::size_t> leave;
            BigRational best;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const BigRational& a = rows[i][*enter];
                if (a <= 0) continue;
                BigRational ratio = rows[i][ncols] / a;
                if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (!leave) return false;
            pivot(*leave, *enter);
        }
    }
};

} // namespace

LpResult simplex_maximize(const RationalMatrix& a, const RationalVector& b, const RationalVector& c)
{
    const std::size_t m = a.size();
    const std::size_t n = c.size();
    if (b.size() != m) throw Error(ErrorCode::DimensionMismatch, "b length must equal row count");
    for (const auto& row : a)
        if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "row length must equal c length");

    std::vector<std::size_t> art_rows;
    for (std::size_t i = 0; i < m; ++i)
        if (b[i] < 0) art_rows.push_back(i);
    // Columns: x (n), slacks (m), artificials.
    Tableau tab;
    tab.ncols = n + m + art_rows.size();
    tab.rows.assign(m, RationalVector(tab.ncols + 1));
    tab.basis.resize(m);
    std::size_t art = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const bool neg = b[i] < 0;
        auto& row = tab.rows[i];
        for (std::size_t j = 0; j < n; ++j) row[j] = neg ? BigRational(-a[i][j]) : a[i][j];
        row[n + i] = neg ? -1 : 1;
        row[tab.ncols] = neg ? BigRational(-b[i]) : b[i];
        if (neg) {
            const std::size_t col = n + m + art++;
            row[col] = 1;
            tab.basis[i] = col;
        } else {
            tab.basis[i] = n + i;
        }
    }

    LpResult result;
    std::vector<char> allowed(tab.ncols, 1);
    if (!art_rows.empty()) {
        RationalVector phase1(tab.ncols, 0);
        for (std::size_t j = n + m; j < tab.ncols; ++j) phase1[j] = -1;
        tab.optimize(phase1, allowed);
        for (std::size_t i = 0; i < tab.rows.size(); ++i)
            if (tab.basis[i] >= n + m && tab.rows[i][tab.ncols] != 0) {
                result.status = LpResult::Status::Infeasible;
                return result;
            }
        // Drive zero-level artificials out of the basis, dropping redundant rows.
        for (std::size_t i = 0; i < tab.rows.size();) {
            if (tab.basis[i] < n + m) {
                ++i;
                continue;
            }
            std::optional<std::size_t> col;
            for (std::size_t j = 0; j < n + m; ++j)
                if (tab.rows[i][j] != 0) {
                    col = j;
                    break;
                }
            if (col) {
                tab.pivot(i, *col);
                ++i;
            } else {
                tab.rows.erase(tab.rows.begin() + static_cast<std::ptrdiff_t>(i));
                tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
        for (std::size_t j = n + m; j < tab.ncols; ++j) allowed[j] = 0;
    }

    RationalVector cost(tab.ncols, 0);
    for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
    if (!tab.optimize(cost, allowed)) {
        result.status = LpResult::Status::Unbounded;
        return result;
    }
    result.status = LpResult::Status::Optimal;
    result.x.assign(n, 0);
    for (std::size_t i = 0; i < tab.rows.size(); ++i)
        if (tab.basis[i] < n) result.x[tab.basis[i]] = tab.rows[i][tab.ncols];
    result.value = 0;
    for (std::size_t j = 0; j < n; ++j) result.value += c[j] * result.x[j];
    result.basis = tab.basis;
    return result;
}

LpCertificate verify_optimality(const RationalMatrix& a, const RationalVector& b, const RationalVector& c,
                                const LpResult& result)
{
    LpCertificate cert;
    if (result.status != LpResult::Status::Optimal) return cert;
    const std::size_t m = a.size(), n = c.size();
    if (result.x.size() != n) return cert;
    auto column = [&](std::size_t j, std::size_t i) -> BigRational {
        if (j < n) return a[i][j];
        return j - n == i ? 1 : 0;
    };
    // Primal feasibility.
    for (const auto& v : result.x)
        if (v < 0) return cert;
    for (std::size_t i = 0; i < m; ++i) {
        BigRational lhs = 0;
        for (std::size_t j = 0; j < n; ++j) lhs += a[i][j] * result.x[j];
        if (lhs > b[i]) return cert;
    }
    // Solve B^T y = c_B. Basis may have fewer than m columns if rows were
    // redundant; then solve in the least-squares-free sense by elimination
    // with free variables fixed at 0.
    const std::size_t k = result.basis.size();
    RationalMatrix sys(k, RationalVector(m + 1));
    for (std::size_t r = 0; r < k; ++r) {
        const std::size_t j = result.basis[r];
        for (std::size_t i = 0; i < m; ++i) sys[r][i] = column(j, i);
        sys[r][m] = j < n ? c[j] : BigRational(0);
    }
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m && row < k; ++col) {
        std::size_t p = row;
        while (p < k && sys[p][col] == 0) ++p;
        if (p == k) continue;
        std::swap(sys[p], sys[row]);
        const BigRational inv = 1 / sys[row][col];
        for (auto& v : sys[row]) v *= inv;
        for (std::size_t r = 0; r < k; ++r) {
            if (r == row || sys[r][col] == 0) continue;
            const BigRational f = sys[r][col];
            for (std::size_t j = 0; j <= m; ++j) sys[r][j] -= f * sys[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < k; ++r)
        if (sys[r][m] != 0) return cert;
    RationalVector y(m, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) y[pivots[r]] = sys[r][m];
    for (const auto& v : y)
        if (v < 0) return cert;
    for (std::size_t j = 0; j < n; ++j) {
        BigRational aty = 0;
        for (std::size_t i = 0; i < m; ++i) aty += a[i][j] * y[i];
        if (aty < c[j]) return cert;
    }
    BigRational by = 0, cx = 0;
    for (std::size_t i = 0; i < m; ++i) by += b[i] * y[i];
    for (std::size_t j = 0; j < n; ++j) cx += c[j] * result.x[j];
    if (by != cx) return cert;
    cert.valid = true;
    cert.y = std::move(y);
    return cert;
}

} // namespace sumrank
