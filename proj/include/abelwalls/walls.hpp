#pragma once

// Numerical wall loci between Chern characters, complete wall enumeration at
// s = 0 with pseudo-wall filters, and executable checks of the no-wall and
// wall-classification statements.

#include "abelwalls/lattice.hpp"
#include "abelwalls/stability.hpp"

#include <optional>
#include <vector>

namespace abelwalls {

enum class LocusKind {
    s0_point,       // circle meeting the s = 0 axis at t^2 = q0 > 0
    circle,         // circle entirely off the s = 0 axis
    vertical_line,  // line s = const, all t
    everywhere,     // slopes agree identically (proportional characters)
    nowhere,        // no solutions with t > 0
};

const char* to_string(LocusKind k);

// Locus where two characters have equal slope, in the (s, t) half-plane.
// Circles satisfy (s - center)^2 + t^2 = radius_sq.
struct WallLocus {
    LocusKind kind = LocusKind::nowhere;
    std::optional<Rat> q0;         // t^2 at s = 0, present iff the locus meets the axis
    std::optional<Rat> center;     // circles only
    std::optional<Rat> radius_sq;  // circles only
    std::optional<Rat> line_s;     // vertical lines only
};

// Side of a wall (in q = t^2) on which the destabilizer has the larger slope.
enum class FSide { below, above };

const char* to_string(FSide s);

// A wall at s = 0: one locus value q0 with every destabilizing character that
// produces it. Destabilizers are sorted; wall lists are strictly decreasing
// in q0.
struct Wall {
    Rat q0;
    std::vector<Character> destabilizers;
    FSide f_positive_side = FSide::below;
};

// Equal-slope locus of u and v. Preconditions: u, v, v - u nonzero.
// Proportional pairs report kind = everywhere. Symmetric in (u, v) and
// invariant under u -> u + v.
WallLocus numerical_wall(const Surface& S, const Character& u, const Character& v);

// Complete sorted wall list at s = 0 for a target with r in {0, 1} and c >= 1.
// Candidate destabilizers u must pass all of:
//   (a) 1 <= c_u <= c_v - 1   (sub and quotient keep positive Im Z at s = 0)
//   (b) r_u >= 1              (destabilizers are torsion-free sheaves)
//   (c) r_u chi_u <= d c_u^2  (Bogomolov for u)
//   (d) d (c_v - c_u)^2 - (r_v - r_u)(chi_v - chi_u) >= 0  (quotient discriminant)
//   (e) wall value q0 > 0
//   (f) f(u, v) changes sign at q0
// These are necessary conditions; the output is a list of candidate walls.
std::vector<Wall> enumerate_walls_s0(const Surface& S, const Character& v);

// Executable witness that characters (r, l, chi) admit no walls at s = 0:
// the candidate range (a) is empty, and for r in {0, 1} the enumerator
// confirms it. Always true.
bool no_walls_check(const Surface& S, const Int& r, const Int& chi);

// Wall classification for the threshold ideal twist (1, n, n^2 d - k) with
// k = 2d(n-1) - 1, together with exact re-derivations of the rank and twist
// bounds that force every destabilizer into the shape
// (1, n-1, (n-1)^2 d - k') with 0 <= k' < d(n-2) - 1.
struct WallClassification {
    Int d;
    Int n;
    Character target;
    std::vector<Wall> walls;
    Int kprime_limit;            // d(n-2) - 1; empty wall set whenever <= 0
    std::vector<Int> kprimes;    // k' per destabilizer, in wall order
    bool rank_bound_ok = false;  // (1 - 1/n)^2 + 1/n^2 + 1/(d n^2) > 1/2 and all ranks are 1
    bool twist_bound_ok = false; // (1 - m/n)(2dn - dnm - 2d - 1) <= 0 for m >= 2 and all twists are 1
    bool shape_ok = false;       // every destabilizer is (1, n-1, (n-1)^2 d - k') with k' in range

    bool pass() const { return rank_bound_ok && twist_bound_ok && shape_ok; }
};

WallClassification classify_walls(const Surface& S, const Int& n);

// Wall values (q0, q0') of (u, v) and (fm(u), fm(v)); verifies the exact
// correspondence q0' = 1 / (d^2 q0). Both walls must meet s = 0.
std::pair<Rat, Rat> fm_wall_transport(const Surface& S, const Character& u, const Character& v);

}  // namespace abelwalls
