#pragma once

// Exact polynomial interpolation on integer grids and exact linear solves.

#include "hodge/rational.hpp"

#include <vector>

namespace hodge {

using Matrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form in place; returns the pivot column of each nonzero row.
inline std::vector<int> row_reduce(Matrix& m, int columns)
{
    std::vector<int> pivots;
    std::size_t row = 0;
    for (int col = 0; col < columns && row < m.size(); ++col) {
        std::size_t pick = row;
        while (pick < m.size() && m[pick][static_cast<std::size_t>(col)] == 0) ++pick;
        if (pick == m.size()) continue;
        std::swap(m[row], m[pick]);
        const Rational inv = 1 / m[row][static_cast<std::size_t>(col)];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row) continue;
            const Rational f = m[r][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Solves A x = b exactly. Overdetermined systems are allowed but must be consistent;
/// throws VerificationError when inconsistent and ArgumentError when rank deficient.
inline std::vector<Rational> solve_exact(const Matrix& a, const std::vector<Rational>& b)
{
    if (a.size() != b.size()) throw ArgumentError("solve_exact: row count mismatch");
    const int cols = a.empty() ? 0 : static_cast<int>(a.front().size());
    Matrix aug = a;
    for (std::size_t r = 0; r < aug.size(); ++r) {
        if (static_cast<int>(aug[r].size()) != cols) throw ArgumentError("solve_exact: ragged matrix");
        aug[r].push_back(b[r]);
    }
    const auto pivots = row_reduce(aug, cols + 1);
    if (!pivots.empty() && pivots.back() == cols) throw VerificationError("solve_exact: inconsistent system");
    if (static_cast<int>(pivots.size()) < cols) throw ArgumentError("solve_exact: singular system");
    std::vector<Rational> x(static_cast<std::size_t>(cols));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[static_cast<std::size_t>(pivots[r])] = aug[r][static_cast<std::size_t>(cols)];
    return x;
}

/// Inverse of the Vandermonde matrix on nodes 1..D: coefficients = V^{-1} * values.
inline Matrix vandermonde_inverse(int nodes)
{
    if (nodes < 1) throw ArgumentError("vandermonde_inverse needs at least one node");
    const auto n = static_cast<std::size_t>(nodes);
    Matrix aug(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        Rational p = 1;
        for (std::size_t k = 0; k < n; ++k) {
            aug[i][k] = p;
            p *= static_cast<long>(i + 1);
        }
        aug[i][n + i] = 1;
    }
    row_reduce(aug, nodes);
    Matrix inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) inv[i][k] = aug[i][n + k];
    return inv;
}

/// Coefficients c_0..c_{D-1} of the polynomial taking values[i] at z = i+1.
inline std::vector<Rational> interpolate_1d(const std::vector<Rational>& values)
{
    const Matrix inv = vandermonde_inverse(static_cast<int>(values.size()));
    std::vector<Rational> c(values.size());
    for (std::size_t k = 0; k < values.size(); ++k)
        for (std::size_t i = 0; i < values.size(); ++i) c[k] += inv[k][i] * values[i];
    return c;
}

/// Tensor-product interpolation on {1..D}^n. Values are row-major (last index fastest);
/// the result holds monomial coefficients in the same layout, exponent = index.
inline std::vector<Rational> interpolate_grid(std::vector<Rational> values, int nodes, int vars)
{
    std::size_t total = 1;
    for (int v = 0; v < vars; ++v) total *= static_cast<std::size_t>(nodes);
    if (values.size() != total) throw ArgumentError("interpolate_grid: wrong number of values");
    const Matrix inv = vandermonde_inverse(nodes);
    const auto d = static_cast<std::size_t>(nodes);
    std::size_t stride = 1;
    for (int axis = vars - 1; axis >= 0; --axis) {
        std::vector<Rational> next(total);
        for (std::size_t idx = 0; idx < total; ++idx) {
            const std::size_t pos = (idx / stride) % d;
            const std::size_t base = idx - pos * stride;
            Rational acc = 0;
            for (std::size_t i = 0; i < d; ++i) acc += inv[pos][i] * values[base + i * stride];
            next[idx] = acc;
        }
        values = std::move(next);
        stride *= d;
    }
    return values;
}

} // namespace hodge
