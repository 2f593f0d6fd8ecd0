#pragma once

// k-very-ampleness thresholds for powers of the polarization: the closed phi
// formulas, IT0 predicates, upper/lower bounds, and a pipeline that re-runs
// the wall-classification and induction arguments behind them.

#include "abelwalls/lattice.hpp"
#include "abelwalls/walls.hpp"

#include <optional>
#include <vector>

namespace abelwalls {

// Comparison bounds for phi(L^n): the section-count bound n^2 d - 1, the
// divisor-criterion bound (n^2 d - 3)/2 kept as an exact rational, and the
// Reider-type lower bound ceil(n sqrt(2d)) - 3.
struct BoundsRecord {
    Int trivial_upper;
    Rat terakawa;
    Int reider_lower;
};

// Character chain showing L^n on a principally polarized surface is not
// (2n-3)-very ample: a collinear length-2(n-1) subscheme forces the quotient
// (0, 1, 1), whose transform (1, -1, 0) cannot be locally free.
struct PpavObstruction {
    Int n;
    Character quotient;   // (0, 1, 1)
    Character transform;  // (1, -1, 0)
    Int bound;            // 2n - 4
};

struct PhiReport {
    Int d;
    Int n;
    Int phi_formula;
    Int phi_pipeline;
    std::vector<Wall> walls_used;        // walls for the top-level target (n >= 2)
    BoundsRecord bounds;
    std::optional<Int> witness_euler;    // d(3 - 2n) upper-bound witness, n >= 2
    bool base_case_ok = false;
    bool induction_ok = false;
    bool z_bound_ok = false;

    bool ok() const {
        return base_case_ok && induction_ok && z_bound_ok && phi_formula == phi_pipeline;
    }
};

// phi(L) = floor((d-3)/2) (floor toward -infinity); phi(L^n) = 2d(n-1) - 2
// for n >= 2.
Int phi_formula(const Surface& S, const Int& n);

// The moduli of torsion classes (0, l, chi) is IT0 iff chi >= d + 1;
// equivalently, iff (chi, 1, 1) violates Bogomolov.
bool it0_torsion_moduli(const Surface& S, const Int& chi);

// phi(L) by the Bogomolov route: the largest subscheme length x whose twist
// transforms to a locally-free-only class (no stable (d-x, -l, 2) exists),
// minus one. Equals floor((d-3)/2).
Int phi1_pipeline(const Surface& S);

// Upper bound 2d(n-1) - 2 for n >= 2, with the negative Euler pairing
// chi((1, n-1, (n-1)^2 d), (0, 1, d)) = d(3-2n) witnessing the nontrivial
// extension of length 2d(n-1). The witness is Euler-characteristic-level
// only; the report labels it as such.
std::pair<Int, Int> phi_upper_witness(const Surface& S, const Int& n);

// Principally polarized obstruction chain (d = 1, n >= 2); asserts its bound
// 2n - 4 agrees with phi_formula.
PpavObstruction ppav_obstruction(const Surface& S, const Int& n);

// Largest z >= 0 with ((n-1)^2 d + d + 1)(1 + z) <= n^2 d, or -1 if none;
// asserts (2d(n-1) - 1)/(d n^2 - 2d(n-1) + 1) < 1, which pins z = 0.
Int z_length_bound(const Surface& S, const Int& n);

// Full verification pipeline: for n = 1 delegates to phi1_pipeline; for
// n >= 2 checks, inductively from n = 2, that the z bound gives 0, that
// every wall destabilizer has the classified shape with k' small enough for
// the inductive hypothesis, and that each quotient has chi = 1 + d + k' >= d+1,
// then combines with phi_upper_witness to report phi = 2d(n-1) - 2.
PhiReport phi_pipeline(const Surface& S, const Int& n);

BoundsRecord bounds(const Surface& S, const Int& n);

}  // namespace abelwalls
