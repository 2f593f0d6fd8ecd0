#pragma once

// The sigma_{s,t} central charge, its slope, heart-membership necessary
// conditions, and the destabilizing numerator f, all exact in (s, q = t^2).

#include "abelwalls/lattice.hpp"
#include "abelwalls/numeric.hpp"

namespace abelwalls {

// Point sigma_{s,t} of the stability family, parametrized by q = t^2 so that
// every derived quantity stays rational. q > 0.
struct StabilityPoint {
    Rat s;
    Rat q;

    StabilityPoint(Rat s_, Rat q_) : s(std::move(s_)), q(std::move(q_)) {
        if (q <= 0) throw precondition_error("StabilityPoint: q must be > 0");
    }
};

// Central charge split as Z = re + t * im_coeff * i. Since t > 0,
// sign(Im Z) = sign(im_coeff).
struct ChargeValue {
    Rat re;
    Rat im_coeff;
};

// Z(u) = -chi + 2 d c s + d r (t^2 - s^2) + 2 t d (c - r s) i. u != 0.
ChargeValue central_charge(const Surface& S, const Character& u, const StabilityPoint& p);

// t * mu_{s,t}(u) = (-Re Z) / im_coeff, or +infinity when Im Z = 0. Order
// comparisons at a common point agree with the mu_{s,t} ordering since the
// scale factor t is shared and positive.
Slope reduced_slope(const Surface& S, const Character& u, const StabilityPoint& p);

// Necessary numeric condition for u to be the character of an object of the
// tilted heart A_s: c - r s >= 0, strictly when r > 0. Not sufficient.
bool heart_necessary(const Surface& S, const Character& u, const Rat& s);

// f(u, v) = [(-re_u) im_v - (-re_v) im_u] / (2d): the numerator of the slope
// difference mu(u) - mu(v), normalized so that at s = 0 against an ideal
// twist v = (1, n, n^2 d - x) it reads n chi_u - c_u (n^2 d - x - d q) - d n r_u q.
// Antisymmetric; sign(f) = sign(mu(u) - mu(v)) when both im_coeffs are positive.
Rat destabilizing_numerator(const Surface& S, const Character& u, const Character& v,
                            const StabilityPoint& p);

// Necessary condition for u to destabilize the ideal twist v = (1, n, n^2 d - x)
// somewhere at s = 0: n chi_u - c_u n^2 d + c_u x > 0 and c_u <= n r_u.
bool necessary_destabilizer_condition(const Surface& S, const Character& u, const Character& v);

}  // namespace abelwalls
