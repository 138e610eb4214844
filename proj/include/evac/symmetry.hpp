#ifndef EVAC_SYMMETRY_HPP
#define EVAC_SYMMETRY_HPP

#include <array>
#include <cmath>
#include <cstdlib>

#include "evac/error.hpp"
#include "evac/vec.hpp"

// Pmm2 point action at k=(0,0,0) on Wyckoff site 4i: the four 1-D irreps
// tau_1..tau_4, their polar-vector and scalar basis rows, composition and
// projection of fields on the orbit, and the symmetry-adapted displacement
// field (tau_4 in-plane + tau_1 vertical) used to lay out stadium sectors.
namespace evac::sym {

enum class GroupOp : int { E = 0, C2z = 1, Mx = 2, My = 3 };
enum class Irrep : int { Tau1 = 0, Tau2 = 1, Tau3 = 2, Tau4 = 3 };
enum class BasisVersion : int { VectorI = 0, VectorII = 1, VectorIII = 2, Scalar = 3 };

inline constexpr std::array<GroupOp, 4> kGroupOps{GroupOp::E, GroupOp::C2z, GroupOp::Mx, GroupOp::My};
inline constexpr std::array<Irrep, 4> kIrreps{Irrep::Tau1, Irrep::Tau2, Irrep::Tau3, Irrep::Tau4};
inline constexpr std::array<BasisVersion, 3> kVectorVersions{
    BasisVersion::VectorI, BasisVersion::VectorII, BasisVersion::VectorIII};

inline const char* to_string(GroupOp g) {
    switch (g) {
        case GroupOp::E:   return "E";
        case GroupOp::C2z: return "C2z";
        case GroupOp::Mx:  return "Mx";
        case GroupOp::My:  return "My";
    }
    return "?";
}

// Orbit index permutation of each element. Orbit order is
//   0:(x,y,0)  1:(1-x,1-y,0)  2:(1-x,y,0)  3:(x,1-y,0)
// so C2z swaps 0<->1, 2<->3; Mx (x -> 1-x) swaps 0<->2, 1<->3;
// My (y -> 1-y) swaps 0<->3, 1<->2.
inline constexpr int kPositionAction[4][4] = {
    {0, 1, 2, 3},  // E
    {1, 0, 3, 2},  // C2z
    {2, 3, 0, 1},  // Mx
    {3, 2, 1, 0},  // My
};

// Component signs of each element acting on a polar vector: a mirror flips
// the component normal to its plane, C2z flips both in-plane components.
inline constexpr int kVectorAction[4][3] = {
    {+1, +1, +1},  // E
    {-1, -1, +1},  // C2z
    {-1, +1, +1},  // Mx
    {+1, -1, +1},  // My
};

// chi_nu(g), indexed [irrep][op] in (E, C2z, Mx, My) order.
inline constexpr int kCharacter[4][4] = {
    {+1, +1, +1, +1},  // tau_1
    {+1, +1, -1, -1},  // tau_2
    {+1, -1, +1, -1},  // tau_3
    {+1, -1, -1, +1},  // tau_4
};

inline constexpr const char* kDestinationGroup[4] = {"Pmm2", "P112", "Pm11", "P1m1"};

// Sign pattern over the 4 orbit positions for each basis row. Every row has
// a single nonzero cartesian component (x for version I, y for II, z for
// III); the Scalar row carries the pattern alone.
inline constexpr int kBasisPattern[4][4][4] = {
    // tau_1:  A1            B1            C1            P1
    {{+1, -1, -1, +1}, {+1, -1, +1, -1}, {+1, +1, +1, +1}, {+1, +1, +1, +1}},
    // tau_2:  A2            B2            C2            P2
    {{+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}, {+1, +1, -1, -1}},
    // tau_3:  A3            B3            C3            P3
    {{+1, +1, -1, -1}, {+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, +1, -1}},
    // tau_4:  A4            B4            C4            P4
    {{+1, +1, +1, +1}, {+1, +1, -1, -1}, {+1, -1, -1, +1}, {+1, -1, -1, +1}},
};

// The orbit of a general point (x, y, 0) under the Pmm2 point action.
struct OrbitPositions4i {
    double x = 0.0;
    double y = 0.0;
    std::array<Vec3, 4> positions{};
};

inline OrbitPositions4i orbit_positions(double x, double y) {
    if (!(x >= 0.0 && x < 1.0) || !(y >= 0.0 && y < 1.0)) {
        throw Error(ErrorClass::Validation, "orbit coordinates must lie in [0,1)");
    }
    OrbitPositions4i o;
    o.x = x;
    o.y = y;
    o.positions = {Vec3{x, y, 0.0}, Vec3{1.0 - x, 1.0 - y, 0.0},
                   Vec3{1.0 - x, y, 0.0}, Vec3{x, 1.0 - y, 0.0}};
    return o;
}

// A vector or scalar field on the 4 orbit positions. Scalar fields keep the
// value in the x slot (y = z = 0).
struct FieldOn4i {
    enum class Kind { Vector, Scalar };
    Kind kind = Kind::Vector;
    std::array<Vec3, 4> values{};

    double scalar_at(int i) const { return values[static_cast<std::size_t>(i)].x; }
    bool operator==(const FieldOn4i&) const = default;
};

// Free parameters of the 16 Table rows: vec[irrep][0..2] are A_i, B_i, C_i,
// scal[irrep] is P_i. All default to zero.
struct CoefficientSet {
    std::array<std::array<double, 3>, 4> vec{};
    std::array<double, 4> scal{};

    double& coeff(Irrep t, BasisVersion v) {
        if (v == BasisVersion::Scalar) return scal[static_cast<std::size_t>(t)];
        return vec[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)];
    }
    double coeff(Irrep t, BasisVersion v) const {
        if (v == BasisVersion::Scalar) return scal[static_cast<std::size_t>(t)];
        return vec[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)];
    }
    bool operator==(const CoefficientSet&) const = default;
};

inline FieldOn4i basis_vector(Irrep t, BasisVersion v) {
    const int ti = static_cast<int>(t);
    const int vi = static_cast<int>(v);
    FieldOn4i f;
    f.kind = (v == BasisVersion::Scalar) ? FieldOn4i::Kind::Scalar : FieldOn4i::Kind::Vector;
    for (int p = 0; p < 4; ++p) {
        const double s = kBasisPattern[ti][vi][p];
        Vec3& out = f.values[static_cast<std::size_t>(p)];
        if (v == BasisVersion::Scalar || v == BasisVersion::VectorI) out.x = s;
        else if (v == BasisVersion::VectorII) out.y = s;
        else out.z = s;
    }
    return f;
}

// Linear combination over the 12 vector rows.
inline FieldOn4i compose_field(const CoefficientSet& c) {
    FieldOn4i f;
    f.kind = FieldOn4i::Kind::Vector;
    for (int p = 0; p < 4; ++p) {
        Vec3 v{};
        for (const Irrep t : kIrreps) {
            const int ti = static_cast<int>(t);
            v.x += c.vec[ti][0] * kBasisPattern[ti][0][p];
            v.y += c.vec[ti][1] * kBasisPattern[ti][1][p];
            v.z += c.vec[ti][2] * kBasisPattern[ti][2][p];
        }
        f.values[static_cast<std::size_t>(p)] = v;
    }
    return f;
}

// Scalar variant: combination of the 4 scalar rows.
inline FieldOn4i compose_scalar_field(const CoefficientSet& c) {
    FieldOn4i f;
    f.kind = FieldOn4i::Kind::Scalar;
    for (int p = 0; p < 4; ++p) {
        double s = 0.0;
        for (const Irrep t : kIrreps) {
            const int ti = static_cast<int>(t);
            s += c.scal[ti] * kBasisPattern[ti][3][p];
        }
        f.values[static_cast<std::size_t>(p)].x = s;
    }
    return f;
}

// Exact inverse of compose_field: the 12 vector rows are orthogonal with
// squared norm 4, so each coefficient is an inner product over 4.
inline CoefficientSet project_field(const FieldOn4i& f) {
    if (f.kind != FieldOn4i::Kind::Vector) {
        throw Error(ErrorClass::Validation, "project_field requires a vector field");
    }
    CoefficientSet c;
    for (const Irrep t : kIrreps) {
        const int ti = static_cast<int>(t);
        double ip[3] = {0.0, 0.0, 0.0};
        for (int p = 0; p < 4; ++p) {
            const Vec3& v = f.values[static_cast<std::size_t>(p)];
            ip[0] += v.x * kBasisPattern[ti][0][p];
            ip[1] += v.y * kBasisPattern[ti][1][p];
            ip[2] += v.z * kBasisPattern[ti][2][p];
        }
        for (int a = 0; a < 3; ++a) c.vec[ti][a] = ip[a] / 4.0;
    }
    return c;
}

// (g.S) at position g(i) is the sign-transformed value of S at position i;
// scalars transform by the permutation alone.
inline FieldOn4i apply_group_element(GroupOp g, const FieldOn4i& f) {
    const int gi = static_cast<int>(g);
    FieldOn4i out;
    out.kind = f.kind;
    for (int p = 0; p < 4; ++p) {
        const Vec3& in = f.values[static_cast<std::size_t>(p)];
        Vec3 v = in;
        if (f.kind == FieldOn4i::Kind::Vector) {
            v = Vec3{in.x * kVectorAction[gi][0], in.y * kVectorAction[gi][1],
                     in.z * kVectorAction[gi][2]};
        }
        out.values[static_cast<std::size_t>(kPositionAction[gi][p])] = v;
    }
    return out;
}

inline std::array<int, 4> characters_of(Irrep t) {
    const int ti = static_cast<int>(t);
    return {kCharacter[ti][0], kCharacter[ti][1], kCharacter[ti][2], kCharacter[ti][3]};
}

// Characters read off the scalar row: chi(g) is the row value at the orbit
// index g maps index 0 to.
inline std::array<int, 4> characters_from_table(Irrep t) {
    const int ti = static_cast<int>(t);
    std::array<int, 4> chi{};
    for (int g = 0; g < 4; ++g) chi[static_cast<std::size_t>(g)] = kBasisPattern[ti][3][kPositionAction[g][0]];
    return chi;
}

// Composition by the actual permutation and sign actions. Throws if the
// result is not one of the four elements (it always is; the set is closed).
inline GroupOp group_compose(GroupOp a, GroupOp b) {
    const int ai = static_cast<int>(a);
    const int bi = static_cast<int>(b);
    int perm[4];
    int sign[3];
    for (int p = 0; p < 4; ++p) perm[p] = kPositionAction[ai][kPositionAction[bi][p]];
    for (int k = 0; k < 3; ++k) sign[k] = kVectorAction[ai][k] * kVectorAction[bi][k];
    for (const GroupOp g : kGroupOps) {
        const int gi = static_cast<int>(g);
        bool same = true;
        for (int p = 0; p < 4; ++p) same = same && perm[p] == kPositionAction[gi][p];
        for (int k = 0; k < 3; ++k) same = same && sign[k] == kVectorAction[gi][k];
        if (same) return g;
    }
    throw Error(ErrorClass::Validation, "group composition left the element set");
}

inline bool invariant_under(GroupOp g, const FieldOn4i& f, double tol = 0.0) {
    const FieldOn4i t = apply_group_element(g, f);
    for (int p = 0; p < 4; ++p) {
        const Vec3 d = t.values[static_cast<std::size_t>(p)] - f.values[static_cast<std::size_t>(p)];
        if (std::abs(d.x) > tol || std::abs(d.y) > tol || std::abs(d.z) > tol) return false;
    }
    return true;
}

// tau_4 in-plane displacements plus the tau_1 vertical component: the
// composition that breaks Pmm2 down to P1m1 while keeping every z
// displacement pointing up the stands.
inline FieldOn4i sam_displacement_field(double a4, double b4, double c1) {
    if (c1 < 0.0) {
        throw Error(ErrorClass::Validation, "vertical coefficient c1 must be non-negative");
    }
    CoefficientSet c;
    c.vec[static_cast<int>(Irrep::Tau4)][0] = a4;
    c.vec[static_cast<int>(Irrep::Tau4)][1] = b4;
    c.vec[static_cast<int>(Irrep::Tau1)][2] = c1;
    return compose_field(c);
}

// Field value at the fractional point (u, v) of the cell: every point
// coincides with exactly one orbit position of (fold(u), fold(v)). Points on
// the u = 1/2 or v = 1/2 lines are assigned the lower orbit index.
inline Vec3 sample_at(const FieldOn4i& f, double u, double v) {
    if (!(u >= 0.0 && u <= 1.0 && v >= 0.0 && v <= 1.0)) {
        throw Error(ErrorClass::Validation, "sample point must lie in the unit cell");
    }
    int idx;
    if (u <= 0.5) idx = (v <= 0.5) ? 0 : 3;
    else idx = (v <= 0.5) ? 2 : 1;
    return f.values[static_cast<std::size_t>(idx)];
}

}  // namespace evac::sym

#endif
