#ifndef EVAC_FLOORFIELD_HPP
#define EVAC_FLOORFIELD_HPP

#include <cmath>
#include <limits>
#include <ostream>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "evac/error.hpp"
#include "evac/format.hpp"
#include "evac/grid.hpp"
#include "evac/vec.hpp"

// Per-cell guidance fields: the exact geodesic distance potential to the
// nearest exit, the descent-direction velocity field derived from it, and
// the naive straight-at-the-doors field kept around to demonstrate why the
// potential is needed (dead ends trap the naive walker).
namespace evac {

inline constexpr double kInfiniteDistance = std::numeric_limits<double>::infinity();

// Fixed neighbor scan order: E, N, W, S, NE, NW, SW, SE (ties in the
// velocity field resolve to the earliest entry). Offsets are (dr, dc) with
// row 0 at the top.
inline constexpr int kNeighborOffsets[8][2] = {
    {0, 1}, {-1, 0}, {0, -1}, {1, 0}, {-1, 1}, {-1, -1}, {1, -1}, {1, 1},
};

// A diagonal step may not cut a corner: it is forbidden when both flanking
// orthogonal cells are obstacles. Out-of-bounds counts as obstacle.
inline bool step_admissible(const CellGrid& g, int r, int c, int dr, int dc) {
    if (!g.walkable(r + dr, c + dc)) return false;
    if (dr != 0 && dc != 0 && !g.walkable(r + dr, c) && !g.walkable(r, c + dc)) return false;
    return true;
}

struct DistanceField {
    int width = 0;
    int height = 0;
    std::vector<double> dist;

    double at(int r, int c) const {
        return dist[static_cast<std::size_t>(r) * static_cast<std::size_t>(width) +
                    static_cast<std::size_t>(c)];
    }
    bool finite_at(int r, int c) const { return std::isfinite(at(r, c)); }
};

// Multi-source shortest path over walkable cells, seeded at every exit.
// Obstacles and unreachable walkable cells carry the infinity marker.
inline DistanceField compute_distance_field(const CellGrid& g) {
    if (g.count(CellKind::Exit) == 0) {
        throw Error(ErrorClass::Validation, "distance field needs at least one exit cell");
    }
    DistanceField f;
    f.width = g.width;
    f.height = g.height;
    f.dist.assign(g.cells.size(), kInfiniteDistance);

    using Item = std::pair<double, std::size_t>;  // (distance, cell index)
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> open;
    for (int r = 0; r < g.height; ++r) {
        for (int c = 0; c < g.width; ++c) {
            if (g.at(r, c) == CellKind::Exit) {
                f.dist[g.idx(r, c)] = 0.0;
                open.emplace(0.0, g.idx(r, c));
            }
        }
    }
    const double diag = g.cell_size * std::sqrt(2.0);
    while (!open.empty()) {
        const auto [d, i] = open.top();
        open.pop();
        if (d > f.dist[i]) continue;  // stale entry
        const int r = static_cast<int>(i) / g.width;
        const int c = static_cast<int>(i) % g.width;
        for (const auto& off : kNeighborOffsets) {
            const int dr = off[0];
            const int dc = off[1];
            if (!step_admissible(g, r, c, dr, dc)) continue;
            const double w = (dr != 0 && dc != 0) ? diag : g.cell_size;
            const std::size_t j = g.idx(r + dr, c + dc);
            if (d + w < f.dist[j]) {
                f.dist[j] = d + w;
                open.emplace(d + w, j);
            }
        }
    }
    return f;
}

// Cell-constant desired velocities: unit direction times the common desired
// speed. Exit cells carry the zero vector; cells listed in `flagged` carry a
// zero vector for a diagnostic reason (unreachable, or a cancelled naive
// resultant) rather than by contract.
struct VelocityField {
    int width = 0;
    int height = 0;
    double cell_size = 0.0;
    double desired_speed = 0.0;
    std::vector<Vec2> vectors;
    std::vector<std::size_t> flagged;

    Vec2 at(int r, int c) const {
        return vectors[static_cast<std::size_t>(r) * static_cast<std::size_t>(width) +
                       static_cast<std::size_t>(c)];
    }
};

// Direction of steepest admissible descent of the distance potential,
// breaking ties by the fixed neighbor scan order.
inline VelocityField compute_velocity_field(const CellGrid& g, const DistanceField& dist,
                                            double desired_speed) {
    if (dist.width != g.width || dist.height != g.height) {
        throw Error(ErrorClass::Validation, "distance field dimensions do not match the grid");
    }
    if (!(desired_speed > 0.0)) {
        throw Error(ErrorClass::Validation, "desired speed must be positive");
    }
    VelocityField vf;
    vf.width = g.width;
    vf.height = g.height;
    vf.cell_size = g.cell_size;
    vf.desired_speed = desired_speed;
    vf.vectors.assign(g.cells.size(), Vec2{});

    for (int r = 0; r < g.height; ++r) {
        for (int c = 0; c < g.width; ++c) {
            const CellKind k = g.at(r, c);
            if (k == CellKind::Obstacle || k == CellKind::Exit) continue;
            if (!dist.finite_at(r, c)) {
                vf.flagged.push_back(g.idx(r, c));
                continue;
            }
            double best = kInfiniteDistance;
            int best_dr = 0;
            int best_dc = 0;
            for (const auto& off : kNeighborOffsets) {
                const int dr = off[0];
                const int dc = off[1];
                if (!step_admissible(g, r, c, dr, dc)) continue;
                const double d = dist.at(r + dr, c + dc);
                if (d < best) {
                    best = d;
                    best_dr = dr;
                    best_dc = dc;
                }
            }
            // A finite-distance cell always has a finite admissible neighbor
            // (its shortest-path parent).
            const Vec2 dir = (g.center_of(r + best_dr, c + best_dc) - g.center_of(r, c)).normalized();
            vf.vectors[g.idx(r, c)] = dir * desired_speed;
        }
    }
    return vf;
}

// Straight-line attraction summed over all exits, obstacles ignored: the
// field that strands walkers in dead ends. Exactly cancelling exits leave a
// zero vector and a diagnostic flag.
inline VelocityField compute_naive_field(const CellGrid& g, double desired_speed) {
    if (g.count(CellKind::Exit) == 0) {
        throw Error(ErrorClass::Validation, "naive field needs at least one exit cell");
    }
    if (!(desired_speed > 0.0)) {
        throw Error(ErrorClass::Validation, "desired speed must be positive");
    }
    const auto exits = g.cells_of_kind(CellKind::Exit);
    VelocityField vf;
    vf.width = g.width;
    vf.height = g.height;
    vf.cell_size = g.cell_size;
    vf.desired_speed = desired_speed;
    vf.vectors.assign(g.cells.size(), Vec2{});

    for (int r = 0; r < g.height; ++r) {
        for (int c = 0; c < g.width; ++c) {
            const CellKind k = g.at(r, c);
            if (k == CellKind::Obstacle || k == CellKind::Exit) continue;
            Vec2 sum{};
            for (const auto& [er, ec] : exits) {
                sum += (g.center_of(er, ec) - g.center_of(r, c)).normalized();
            }
            if (sum.norm() < 1e-12) {
                vf.flagged.push_back(g.idx(r, c));
                continue;
            }
            vf.vectors[g.idx(r, c)] = sum.normalized() * desired_speed;
        }
    }
    return vf;
}

// Desired velocity of the cell containing the position; cells own the
// half-open interval [k*cell_size, (k+1)*cell_size) on each axis.
inline Vec2 lookup_desired_velocity(const VelocityField& f, const Vec2& position) {
    const int c = static_cast<int>(std::floor(position.x / f.cell_size));
    const int r = static_cast<int>(std::floor(position.y / f.cell_size));
    if (r < 0 || r >= f.height || c < 0 || c >= f.width) {
        throw Error(ErrorClass::Validation, "position outside the grid");
    }
    return f.at(r, c);
}

// Compass octant of a nonzero direction, 0 = E, continuing clockwise on the
// map (1 = SE since y grows downward). Boundaries between octants round down.
inline int direction_octant(const Vec2& v) {
    constexpr double kPi = 3.14159265358979323846;
    const double angle = std::atan2(v.y, v.x);
    int sector = static_cast<int>(std::floor((angle + kPi / 8.0) / (kPi / 4.0)));
    return ((sector % 8) + 8) % 8;
}

inline constexpr int kOctantOffsets[8][2] = {
    {0, 1}, {1, 1}, {1, 0}, {1, -1}, {0, -1}, {-1, -1}, {-1, 0}, {-1, 1},
};

// Greedy path following: hop to the cell the field points at, at most one
// hop per walkable cell. A walker is stranded if its field vector vanishes,
// the pointed-at step is inadmissible, or the hop budget runs out (a cycle).
inline std::vector<std::pair<int, int>> stranded_cells(const CellGrid& g,
                                                       const VelocityField& field) {
    int walkable_count = 0;
    for (const CellKind k : g.cells) walkable_count += (k != CellKind::Obstacle) ? 1 : 0;

    std::vector<std::pair<int, int>> out;
    for (int r0 = 0; r0 < g.height; ++r0) {
        for (int c0 = 0; c0 < g.width; ++c0) {
            if (!g.walkable(r0, c0) || g.at(r0, c0) == CellKind::Exit) continue;
            int r = r0;
            int c = c0;
            bool reached = false;
            for (int hop = 0; hop < walkable_count; ++hop) {
                if (g.at(r, c) == CellKind::Exit) {
                    reached = true;
                    break;
                }
                const Vec2 v = field.at(r, c);
                if (v.x == 0.0 && v.y == 0.0) break;
                const int* off = kOctantOffsets[direction_octant(v)];
                if (!step_admissible(g, r, c, off[0], off[1])) break;
                r += off[0];
                c += off[1];
            }
            if (!reached && g.at(r, c) != CellKind::Exit) out.emplace_back(r0, c0);
        }
    }
    return out;
}

inline int count_stranded_cells(const CellGrid& g, const VelocityField& field) {
    return static_cast<int>(stranded_cells(g, field).size());
}

// CSV rendition of the final velocity table: one line per walkable cell.
inline void write_field_csv(std::ostream& os, const CellGrid& g, const VelocityField& f) {
    os << "row,col,vx,vy\n";
    for (int r = 0; r < g.height; ++r) {
        for (int c = 0; c < g.width; ++c) {
            if (!g.walkable(r, c)) continue;
            const Vec2 v = f.at(r, c);
            os << r << ',' << c << ',' << fmt_g(v.x) << ',' << fmt_g(v.y) << '\n';
        }
    }
}

// Arrow-glyph rendering for quick inspection: octants map to > \ v / < \ ^ /
// and '!' marks a flagged (zero-vector) walkable cell.
inline std::string ascii_field(const CellGrid& g, const VelocityField& f) {
    constexpr char kArrows[8] = {'>', '\\', 'v', '/', '<', '\\', '^', '/'};
    std::string out;
    out.reserve(static_cast<std::size_t>((g.width + 1) * g.height));
    for (int r = 0; r < g.height; ++r) {
        for (int c = 0; c < g.width; ++c) {
            const CellKind k = g.at(r, c);
            if (k == CellKind::Obstacle) {
                out += '#';
            } else if (k == CellKind::Exit) {
                out += 'E';
            } else {
                const Vec2 v = f.at(r, c);
                out += (v.x == 0.0 && v.y == 0.0) ? '!' : kArrows[direction_octant(v)];
            }
        }
        out += '\n';
    }
    return out;
}

}  // namespace evac

#endif
