#include "abelwalls/stability.hpp"

namespace abelwalls {

ChargeValue central_charge(const Surface& S, const Character& u, const StabilityPoint& p) {
    if (u.is_zero()) throw precondition_error("central_charge: zero character");
    Rat d(S.d), r(u.r), c(u.c), chi(u.chi);
    Rat re = -chi + 2 * d * c * p.s + d * r * (p.q - p.s * p.s);
    Rat im_coeff = 2 * d * (c - r * p.s);
    return {re, im_coeff};
}

Slope reduced_slope(const Surface& S, const Character& u, const StabilityPoint& p) {
    ChargeValue z = central_charge(S, u, p);
    if (z.im_coeff == 0) return Slope::plus_infinity();
    return Slope::finite(-z.re / z.im_coeff);
}

bool heart_necessary(const Surface& S, const Character& u, const Rat& s) {
    (void)S;
    Rat margin = Rat(u.c) - Rat(u.r) * s;  // Im Z up to the positive factor 2dt
    if (u.r > 0) return margin > 0;
    return margin >= 0;
}

Rat destabilizing_numerator(const Surface& S, const Character& u, const Character& v,
                            const StabilityPoint& p) {
    ChargeValue zu = central_charge(S, u, p);
    ChargeValue zv = central_charge(S, v, p);
    Rat cross = (-zu.re) * zv.im_coeff - (-zv.re) * zu.im_coeff;
    return cross / Rat(2 * S.d);
}

bool necessary_destabilizer_condition(const Surface& S, const Character& u, const Character& v) {
    if (u.is_zero()) throw precondition_error("necessary_destabilizer_condition: zero character");
    if (v.r != 1 || v.c < 1)
        throw precondition_error(
            "necessary_destabilizer_condition: v must be an ideal twist (1, n, n^2 d - x)");
    const Int& n = v.c;
    Int x = n * n * S.d - v.chi;
    if (x < 0)
        throw precondition_error(
            "necessary_destabilizer_condition: v must be an ideal twist (1, n, n^2 d - x)");
    return n * u.chi - u.c * n * n * S.d + u.c * x > 0 && u.c <= n * u.r;
}

}  // namespace abelwalls
