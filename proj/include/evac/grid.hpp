#ifndef EVAC_GRID_HPP
#define EVAC_GRID_HPP

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "evac/error.hpp"
#include "evac/vec.hpp"

namespace evac {

// Seat cells are walkable spawn locations; everything except Obstacle is
// walkable.
enum class CellKind : std::uint8_t { Obstacle, Free, Seat, Exit };

inline char to_char(CellKind k) {
    switch (k) {
        case CellKind::Obstacle: return '#';
        case CellKind::Free:     return '.';
        case CellKind::Seat:     return 'S';
        case CellKind::Exit:     return 'E';
    }
    return '?';
}

inline bool cell_from_char(char ch, CellKind& out) {
    switch (ch) {
        case '#': out = CellKind::Obstacle; return true;
        case '.': out = CellKind::Free; return true;
        case 'S': out = CellKind::Seat; return true;
        case 'E': out = CellKind::Exit; return true;
        default: return false;
    }
}

// Rectangular cell lattice. Row 0 is the top map line; world coordinates put
// x along columns and y along rows, so y grows downward and the cell owning
// a point is found by flooring against the half-open cell intervals.
struct CellGrid {
    int width = 0;
    int height = 0;
    double cell_size = 0.0;
    std::vector<CellKind> cells;

    CellGrid() = default;
    CellGrid(int w, int h, double cs, CellKind fill = CellKind::Obstacle)
        : width(w), height(h), cell_size(cs),
          cells(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {
        if (w < 1 || h < 1 || !(cs > 0.0)) {
            throw Error(ErrorClass::Validation, "grid needs width >= 1, height >= 1, cell_size > 0");
        }
    }

    std::size_t idx(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(width) +
               static_cast<std::size_t>(c);
    }
    CellKind at(int r, int c) const { return cells[idx(r, c)]; }
    void set(int r, int c, CellKind k) { cells[idx(r, c)] = k; }

    bool in_bounds(int r, int c) const { return r >= 0 && r < height && c >= 0 && c < width; }
    bool walkable(int r, int c) const { return in_bounds(r, c) && at(r, c) != CellKind::Obstacle; }

    Vec2 center_of(int r, int c) const {
        return {(static_cast<double>(c) + 0.5) * cell_size,
                (static_cast<double>(r) + 0.5) * cell_size};
    }

    // Cell owning a world position; each cell owns [k*cell_size, (k+1)*cell_size).
    std::pair<int, int> cell_of(const Vec2& p) const {
        return {static_cast<int>(std::floor(p.y / cell_size)),
                static_cast<int>(std::floor(p.x / cell_size))};
    }
    bool contains(const Vec2& p) const {
        const auto [r, c] = cell_of(p);
        return in_bounds(r, c);
    }

    int count(CellKind k) const {
        int n = 0;
        for (const CellKind c : cells) n += (c == k) ? 1 : 0;
        return n;
    }

    std::vector<std::pair<int, int>> cells_of_kind(CellKind k) const {
        std::vector<std::pair<int, int>> out;
        for (int r = 0; r < height; ++r)
            for (int c = 0; c < width; ++c)
                if (at(r, c) == k) out.emplace_back(r, c);
        return out;
    }

    // The world is closed: every boundary cell is Obstacle or Exit.
    bool boundary_closed() const {
        for (int r = 0; r < height; ++r) {
            for (int c = 0; c < width; ++c) {
                if (r != 0 && r != height - 1 && c != 0 && c != width - 1) continue;
                const CellKind k = at(r, c);
                if (k != CellKind::Obstacle && k != CellKind::Exit) return false;
            }
        }
        return true;
    }
};

}  // namespace evac

#endif
