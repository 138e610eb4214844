#ifndef EVAC_TESTS_ORACLES_HPP
#define EVAC_TESTS_ORACLES_HPP

// Brute-force reference implementations used only by tests. These stay
// independent of the library code paths they check.

#include <cmath>
#include <limits>
#include <vector>

#include "evac/grid.hpp"

namespace oracles {

// Dense Gaussian elimination with partial pivoting. a is n x n row-major,
// b length n; returns x solving a x = b.
inline std::vector<double> solve_dense(std::vector<double> a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
        }
        for (std::size_t k = 0; k < n; ++k) std::swap(a[col * n + k], a[piv * n + k]);
        std::swap(b[col], b[piv]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r * n + col] / a[col * n + col];
            for (std::size_t k = col; k < n; ++k) a[r * n + k] -= f * a[col * n + k];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t r = n; r-- > 0;) {
        double s = b[r];
        for (std::size_t k = r + 1; k < n; ++k) s -= a[r * n + k] * x[k];
        x[r] = s / a[r * n + r];
    }
    return x;
}

// Exhaustive shortest-path distances by repeated full relaxation sweeps
// (Bellman-Ford style), same edge rule as the floor field: 8-connected,
// diagonal forbidden only when both flanking orthogonal cells are obstacles.
inline std::vector<double> relaxation_distances(const evac::CellGrid& g) {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> d(g.cells.size(), inf);
    for (int r = 0; r < g.height; ++r)
        for (int c = 0; c < g.width; ++c)
            if (g.at(r, c) == evac::CellKind::Exit) d[g.idx(r, c)] = 0.0;

    auto blocked = [&](int r, int c) {
        return !g.in_bounds(r, c) || g.at(r, c) == evac::CellKind::Obstacle;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int r = 0; r < g.height; ++r) {
            for (int c = 0; c < g.width; ++c) {
                if (blocked(r, c)) continue;
                for (int dr = -1; dr <= 1; ++dr) {
                    for (int dc = -1; dc <= 1; ++dc) {
                        if (dr == 0 && dc == 0) continue;
                        if (blocked(r + dr, c + dc)) continue;
                        if (dr != 0 && dc != 0 && blocked(r + dr, c) && blocked(r, c + dc)) continue;
                        const double w = (dr != 0 && dc != 0) ? g.cell_size * std::sqrt(2.0)
                                                              : g.cell_size;
                        const double cand = d[g.idx(r + dr, c + dc)] + w;
                        if (cand < d[g.idx(r, c)]) {
                            d[g.idx(r, c)] = cand;
                            changed = true;
                        }
                    }
                }
            }
        }
    }
    return d;
}

}  // namespace oracles

#endif
