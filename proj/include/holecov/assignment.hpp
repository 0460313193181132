#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "holecov/error.hpp"

namespace holecov {

/// Minimum-cost assignment of every row to a distinct column (rows ≤ columns),
/// shortest augmenting paths with potentials, O(rows²·columns).
/// `cost` is row-major; returns the column chosen for each row.
inline std::vector<std::size_t> min_cost_assignment(const std::vector<double>& cost, std::size_t rows,
                                                    std::size_t cols)
{
    if (cost.size() != rows * cols) {
        fail(ErrorCode::InvalidInput, "cost matrix size does not match its shape");
    }
    if (rows > cols) {
        fail(ErrorCode::InvalidInput, "assignment needs at least as many columns as rows");
    }
    if (rows == 0) {
        return {};
    }
    constexpr double inf = std::numeric_limits<double>::infinity();
    constexpr std::size_t none = 0;
    // 1-based internally; column 0 is the virtual source.
    std::vector<double> u(rows + 1, 0.0), v(cols + 1, 0.0);
    std::vector<std::size_t> owner(cols + 1, none), way(cols + 1, 0);
    for (std::size_t row = 1; row <= rows; ++row) {
        owner[0] = row;
        std::size_t col0 = 0;
        std::vector<double> min_reduced(cols + 1, inf);
        std::vector<bool> used(cols + 1, false);
        do {
            used[col0] = true;
            const std::size_t r = owner[col0];
            double delta = inf;
            std::size_t col1 = 0;
            for (std::size_t c = 1; c <= cols; ++c) {
                if (used[c]) {
                    continue;
                }
                const double reduced = cost[(r - 1) * cols + (c - 1)] - u[r] - v[c];
                if (reduced < min_reduced[c]) {
                    min_reduced[c] = reduced;
                    way[c] = col0;
                }
                if (min_reduced[c] < delta) {
                    delta = min_reduced[c];
                    col1 = c;
                }
            }
            for (std::size_t c = 0; c <= cols; ++c) {
                if (used[c]) {
                    u[owner[c]] += delta;
                    v[c] -= delta;
                } else {
                    min_reduced[c] -= delta;
                }
            }
            col0 = col1;
        } while (owner[col0] != none);
        do {
            const std::size_t col1 = way[col0];
            owner[col0] = owner[col1];
            col0 = col1;
        } while (col0 != 0);
    }
    std::vector<std::size_t> result(rows);
    for (std::size_t c = 1; c <= cols; ++c) {
        if (owner[c] != none) {
            result[owner[c] - 1] = c - 1;
        }
    }
    return result;
}

} // namespace holecov
