#include "abelwalls/ampleness.hpp"

namespace abelwalls {

Int phi_formula(const Surface& S, const Int& n) {
    if (n < 1) throw precondition_error("phi_formula: n must be >= 1");
    if (n == 1) return floor_div(S.d - 3, 2);
    return 2 * S.d * (n - 1) - 2;
}

bool it0_torsion_moduli(const Surface& S, const Int& chi) {
    // Non-locally-free members of the transformed moduli exist exactly when
    // (chi, 1, 1) satisfies Bogomolov, i.e. chi <= d.
    return !bogomolov_holds(S, Character{chi, 1, 1});
}

Int phi1_pipeline(const Surface& S) {
    Int largest_safe = -1;
    for (Int x = 0;; ++x) {
        Character e = ideal_twist_character(S, 1, x);  // (1, 1, d - x)
        if (fm(e) != Character{S.d - x, -1, 1})
            throw std::logic_error("phi1_pipeline: transform of the ideal twist is off");
        // a stable class (d-x, -l, 2) exists iff its dual satisfies Bogomolov
        if (bogomolov_holds(S, dual(Character{S.d - x, -1, 2}))) break;
        largest_safe = x;
    }
    return largest_safe - 1;
}

std::pair<Int, Int> phi_upper_witness(const Surface& S, const Int& n) {
    if (n < 2) throw precondition_error("phi_upper_witness: n must be >= 2");
    Int bound = 2 * S.d * (n - 1) - 2;
    Character power{1, n - 1, (n - 1) * (n - 1) * S.d};  // ch(L^{n-1})
    Character torsion{0, 1, S.d};                        // non-IT0 class of Q
    Int witness = euler_pairing(S, power, torsion);
    if (witness >= 0)
        throw std::logic_error("phi_upper_witness: expected a negative Euler pairing");
    return {bound, witness};
}

PpavObstruction ppav_obstruction(const Surface& S, const Int& n) {
    if (S.d != 1)
        throw precondition_error("ppav_obstruction: requires a principal polarization (d = 1)");
    if (n < 2) throw precondition_error("ppav_obstruction: n must be >= 2");
    Int x = 2 * (n - 1);
    Character quotient{0, 1, 2 * n - 1 - x};
    if (quotient != Character{0, 1, 1})
        throw std::logic_error("ppav_obstruction: quotient character is off");
    Character transform = fm(quotient);  // (1, -1, 0): would be locally free, impossible
    Int bound = 2 * n - 4;
    if (bound != phi_formula(S, n))
        throw std::logic_error("ppav_obstruction: bound disagrees with phi_formula");
    return {n, quotient, transform, bound};
}

Int z_length_bound(const Surface& S, const Int& n) {
    if (n < 2) throw precondition_error("z_length_bound: n must be >= 2");
    Int cap = n * n * S.d;
    Int block = (n - 1) * (n - 1) * S.d + S.d + 1;
    Int z = floor_div(cap, block) - 1;
    // the admissible ratio stays below 1, pinning z at 0
    Rat ratio = make_rat(2 * S.d * (n - 1) - 1, S.d * n * n - 2 * S.d * (n - 1) + 1);
    if (!(ratio < 1)) throw std::logic_error("z_length_bound: ratio bound violated");
    return z;
}

PhiReport phi_pipeline(const Surface& S, const Int& n) {
    if (n < 1) throw precondition_error("phi_pipeline: n must be >= 1");
    PhiReport rep;
    rep.d = S.d;
    rep.n = n;
    rep.phi_formula = phi_formula(S, n);
    rep.bounds = bounds(S, n);

    if (n == 1) {
        rep.phi_pipeline = phi1_pipeline(S);
        rep.base_case_ok = rep.induction_ok = rep.z_bound_ok = true;
        return rep;
    }

    bool z_ok = true;
    bool base_ok = false;
    bool ind_ok = true;
    for (Int m = 2; m <= n; ++m) {
        z_ok = z_ok && z_length_bound(S, m) == 0;
        WallClassification cl = classify_walls(S, m);
        if (m == 2)
            base_ok = cl.walls.empty() && cl.pass();
        else
            ind_ok = ind_ok && cl.pass();
        for (const Wall& w : cl.walls) {
            for (const Character& u : w.destabilizers) {
                Int kprime = (m - 1) * (m - 1) * S.d - u.chi;
                // destabilizer twist is covered by phi(L^{m-1}) = 2d(m-2) - 2
                ind_ok = ind_ok && kprime <= 2 * S.d * (m - 2) - 1;
                // quotient has chi = 1 + d + k' and must itself be IT0
                ind_ok = ind_ok && it0_torsion_moduli(S, 1 + S.d + kprime);
            }
        }
        if (m == n) rep.walls_used = cl.walls;
    }

    auto [bound, witness] = phi_upper_witness(S, n);
    rep.witness_euler = witness;
    rep.phi_pipeline = bound;
    rep.base_case_ok = base_ok;
    rep.induction_ok = ind_ok;
    rep.z_bound_ok = z_ok;
    return rep;
}

BoundsRecord bounds(const Surface& S, const Int& n) {
    if (n < 1) throw precondition_error("bounds: n must be >= 1");
    Int sections = n * n * S.d;
    BoundsRecord b;
    b.trivial_upper = sections - 1;
    b.terakawa = make_rat(sections - 3, 2);
    b.reider_lower = ceil_sqrt(2 * S.d * n * n) - 3;
    return b;
}

}  // namespace abelwalls
