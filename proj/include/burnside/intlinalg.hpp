#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace burnside {

using Int = mpz_class;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>; // row-major

// Finds an integer solution x of A x = b, or nullopt if none exists.
// Column reduction to Hermite form with a tracked unimodular transform,
// then forward substitution with divisibility checks.
inline std::optional<IntVec> solve_integer(IntMat a, const IntVec& b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    if (rows == 0) return IntVec(cols, 0);

    // u tracks column operations: a_original * u == a.
    IntMat u(cols, IntVec(cols, 0));
    for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;

    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
        for (std::size_t r = 0; r < cols; ++r) std::swap(u[r][i], u[r][j]);
    };
    // (col_i, col_j) <- (p*col_i + q*col_j, r*col_i + s*col_j)
    auto col_combine = [&](std::size_t i, std::size_t j, const Int& p, const Int& q,
                           const Int& r, const Int& s) {
        for (std::size_t k = 0; k < rows; ++k) {
            Int ni = p * a[k][i] + q * a[k][j];
            Int nj = r * a[k][i] + s * a[k][j];
            a[k][i] = ni;
            a[k][j] = nj;
        }
        for (std::size_t k = 0; k < cols; ++k) {
            Int ni = p * u[k][i] + q * u[k][j];
            Int nj = r * u[k][i] + s * u[k][j];
            u[k][i] = ni;
            u[k][j] = nj;
        }
    };

    std::vector<long> pivot_col(rows, -1);
    std::size_t next = 0; // next free column
    for (std::size_t r = 0; r < rows && next < cols; ++r) {
        // Clear row r to a single nonzero entry among columns >= next.
        for (std::size_t j = next + 1; j < cols; ++j) {
            if (a[r][j] == 0) continue;
            if (a[r][next] == 0) {
                col_swap(next, j);
                continue;
            }
            Int g, p, q;
            mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(),
                       a[r][next].get_mpz_t(), a[r][j].get_mpz_t());
            Int s = a[r][next] / g, t = a[r][j] / g;
            // new col_next = p*next + q*j has entry g; new col_j = -t*next + s*j has entry 0
            col_combine(next, j, p, q, -t, s);
        }
        if (a[r][next] != 0) {
            pivot_col[r] = static_cast<long>(next);
            ++next;
        }
    }

    // Solve the triangular system for y, then x = u * y.
    IntVec y(cols, 0);
    for (std::size_t r = 0; r < rows; ++r) {
        Int residual = b[r];
        for (std::size_t j = 0; j < cols; ++j) residual -= a[r][j] * y[j];
        if (pivot_col[r] < 0) {
            if (residual != 0) return std::nullopt;
            continue;
        }
        std::size_t p = static_cast<std::size_t>(pivot_col[r]);
        if (residual % a[r][p] != 0) return std::nullopt;
        y[p] = residual / a[r][p];
    }

    IntVec x(cols, 0);
    for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = 0; j < cols; ++j) x[i] += u[i][j] * y[j];
    return x;
}

} // namespace burnside
