#include "abelwalls/walls.hpp"

#include <algorithm>
#include <map>

namespace abelwalls {

const char* to_string(LocusKind k) {
    switch (k) {
        case LocusKind::s0_point: return "s0-point";
        case LocusKind::circle: return "circle";
        case LocusKind::vertical_line: return "vertical-line";
        case LocusKind::everywhere: return "everywhere";
        case LocusKind::nowhere: return "nowhere";
    }
    return "?";
}

const char* to_string(FSide s) { return s == FSide::below ? "below" : "above"; }

WallLocus numerical_wall(const Surface& S, const Character& u, const Character& v) {
    if (u.is_zero() || v.is_zero() || (v - u).is_zero())
        throw precondition_error("numerical_wall: u, v and v - u must be nonzero");

    // Equating mu_{s,t}(u) = mu_{s,t}(v) gives d W (s^2 + t^2) + A s - B = 0.
    Int W = u.r * v.c - v.r * u.c;
    Int A = u.chi * v.r - v.chi * u.r;
    Int B = u.chi * v.c - v.chi * u.c;

    WallLocus locus;
    if (W == 0 && A == 0) {
        locus.kind = (B == 0) ? LocusKind::everywhere : LocusKind::nowhere;
        return locus;
    }
    if (W == 0) {
        // line s = B/A; when B = 0 this is the axis itself and carries no crossing
        locus.kind = LocusKind::vertical_line;
        locus.line_s = make_rat(B, A);
        return locus;
    }
    Rat q0 = make_rat(B, S.d * W);
    Rat center = make_rat(-A, 2 * S.d * W);
    Rat radius_sq = q0 + center * center;
    if (radius_sq <= 0) {
        locus.kind = LocusKind::nowhere;
        return locus;
    }
    locus.center = center;
    locus.radius_sq = radius_sq;
    if (q0 > 0) {
        locus.kind = LocusKind::s0_point;
        locus.q0 = q0;
    } else {
        locus.kind = LocusKind::circle;
    }
    return locus;
}

namespace {

// Filters (a)-(f); necessary conditions for u to cut a candidate wall
// against v at s = 0.
bool wall_candidate(const Surface& S, const Character& u, const Character& v) {
    if (u.c < 1 || u.c > v.c - 1) return false;               // (a)
    if (u.r < 1) return false;                                // (b)
    if (u.r * u.chi > S.d * u.c * u.c) return false;          // (c)
    Character q = v - u;
    if (S.d * q.c * q.c - q.r * q.chi < 0) return false;      // (d)
    Int W = u.r * v.c - v.r * u.c;
    if (W == 0) return false;                                 // (f): f constant in q
    Int B = u.chi * v.c - v.chi * u.c;
    return make_rat(B, S.d * W) > 0;                          // (e)
}

// Upper bound on the destabilizer rank for a fixed c_u, derived from the
// filters. chi_v > 0: B > 0 with Bogomolov gives r_u < d c_u c_v / chi_v.
// chi_v = 0: B > 0 forces chi_u >= 1 and Bogomolov caps r_u at d c_u^2.
// chi_v < 0: B > 0 forces chi_u - chi_v >= 1, so the quotient discriminant
// (d) caps r_u at r_v + d (c_v - c_u)^2.
Int rank_bound(const Surface& S, const Character& v, const Int& cu) {
    if (v.chi > 0) return floor_div(S.d * cu * v.c, v.chi);
    if (v.chi == 0) return S.d * cu * cu;
    Int dc = v.c - cu;
    return v.r + S.d * dc * dc;
}

}  // namespace

std::vector<Wall> enumerate_walls_s0(const Surface& S, const Character& v) {
    if (!(v.r == 0 || v.r == 1) || v.c < 1)
        throw precondition_error(
            "enumerate_walls_s0: unsupported target (need r in {0,1} and c >= 1)");

    std::map<Rat, std::vector<Character>> grouped;
    const Int cv_top = v.c - 1;
    for (Int cu = 1; cu <= cv_top; ++cu) {
        Int rmax = rank_bound(S, v, cu);
        for (Int ru = 1; ru <= rmax; ++ru) {
            Int chi_lo = floor_div(v.chi * cu, v.c) + 1;   // B > 0
            Int chi_hi = floor_div(S.d * cu * cu, ru);     // Bogomolov
            if (ru > v.r) {
                Int dc = v.c - cu;
                Int quot_cap = v.chi + floor_div(S.d * dc * dc, ru - v.r);
                chi_hi = std::min(chi_hi, quot_cap);
            }
            for (Int chi = chi_lo; chi <= chi_hi; ++chi) {
                Character u{ru, cu, chi};
                if (!wall_candidate(S, u, v)) continue;
                Int W = u.r * v.c - v.r * u.c;
                Int B = u.chi * v.c - v.chi * u.c;
                grouped[make_rat(B, S.d * W)].push_back(u);
            }
        }
    }

    std::vector<Wall> walls;
    for (auto it = grouped.rbegin(); it != grouped.rend(); ++it) {
        Wall w;
        w.q0 = it->first;
        w.destabilizers = std::move(it->second);
        std::sort(w.destabilizers.begin(), w.destabilizers.end(), character_less);
        // W >= 1 for every candidate here, so f > 0 on q < q0
        w.f_positive_side = FSide::below;
        walls.push_back(std::move(w));
    }
    return walls;
}

bool no_walls_check(const Surface& S, const Int& r, const Int& chi) {
    const Int cv = 1;
    bool structural = cv - 1 < 1;  // filter (a) admits no c_u at all
    bool enumerated = true;
    if (r == 0 || r == 1) enumerated = enumerate_walls_s0(S, Character{r, cv, chi}).empty();
    return structural && enumerated;
}

WallClassification classify_walls(const Surface& S, const Int& n) {
    if (n < 2) throw precondition_error("classify_walls: n must be >= 2");
    const Int& d = S.d;

    WallClassification rep;
    rep.d = d;
    rep.n = n;
    Int k = 2 * d * (n - 1) - 1;  // threshold subscheme length
    rep.target = ideal_twist_character(S, n, k);
    rep.kprime_limit = d * (n - 2) - 1;
    rep.walls = enumerate_walls_s0(S, rep.target);

    // Rank bound: (1 - 1/n)^2 + 1/n^2 + 1/(d n^2) > 1/2 excludes every rank >= 2.
    Rat one(1);
    Rat inv_n = make_rat(1, n);
    Rat chain = (one - inv_n) * (one - inv_n) + inv_n * inv_n + make_rat(1, d * n * n);
    rep.rank_bound_ok = chain > make_rat(1, 2);

    // Twist bound: for a step m >= 2, (1 - m/n)(2dn - dnm - 2d - 1) <= 0, so no
    // such candidate clears the f > 0 threshold.
    rep.twist_bound_ok = true;
    for (Int m = 2; m <= n - 1; ++m) {
        Rat factor = one - make_rat(m, n);
        Rat margin = factor * Rat(2 * d * n - d * n * m - 2 * d - 1);
        if (margin > 0) rep.twist_bound_ok = false;
    }

    rep.shape_ok = true;
    for (const Wall& w : rep.walls) {
        for (const Character& u : w.destabilizers) {
            if (u.r != 1) rep.rank_bound_ok = false;
            if (u.c != n - 1) rep.twist_bound_ok = false;
            Int kprime = (n - 1) * (n - 1) * d - u.chi;
            rep.kprimes.push_back(kprime);
            if (!(u.r == 1 && u.c == n - 1 && kprime >= 0 && kprime < rep.kprime_limit))
                rep.shape_ok = false;
        }
    }
    if (rep.kprime_limit <= 0 && !rep.walls.empty()) rep.shape_ok = false;
    return rep;
}

std::pair<Rat, Rat> fm_wall_transport(const Surface& S, const Character& u, const Character& v) {
    WallLocus a = numerical_wall(S, u, v);
    WallLocus b = numerical_wall(S, fm(u), fm(v));
    if (!a.q0 || !b.q0)
        throw precondition_error("fm_wall_transport: not applicable (a wall misses s = 0)");
    Rat expected = make_rat(1, S.d * S.d) / *a.q0;
    if (*b.q0 != expected)
        throw std::logic_error("fm_wall_transport: correspondence q0' = 1/(d^2 q0) violated");
    return {*a.q0, *b.q0};
}

}  // namespace abelwalls
