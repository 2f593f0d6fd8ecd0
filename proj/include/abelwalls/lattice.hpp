#pragma once

// Chern-character arithmetic on the rank-one Neron-Severi lattice of a
// polarized abelian surface: twists, Fourier-Mukai action, dualization,
// Euler pairing, Bogomolov discriminant, moduli-dimension predicates.

#include "abelwalls/numeric.hpp"

#include <ostream>

namespace abelwalls {

// Polarized abelian surface of Picard rank one. d is half the
// self-intersection of the polarization class l, so l^2 = 2d.
struct Surface {
    Int d;
    explicit Surface(Int d_) : d(std::move(d_)) {
        if (d < 1) throw precondition_error("Surface: d must be >= 1");
    }
};

// Chern character (r, c*l, chi). On an abelian surface chi equals ch_2.
// The zero character is representable (quotients v - u are formed freely);
// stability operations reject it.
struct Character {
    Int r, c, chi;

    bool is_zero() const { return r == 0 && c == 0 && chi == 0; }
};

inline bool operator==(const Character& a, const Character& b) {
    return a.r == b.r && a.c == b.c && a.chi == b.chi;
}
inline bool operator!=(const Character& a, const Character& b) { return !(a == b); }
inline Character operator+(const Character& a, const Character& b) {
    return {a.r + b.r, a.c + b.c, a.chi + b.chi};
}
inline Character operator-(const Character& a, const Character& b) {
    return {a.r - b.r, a.c - b.c, a.chi - b.chi};
}
std::ostream& operator<<(std::ostream& os, const Character& u);

// Total order by (r, c, chi); used to keep enumerations deterministic.
bool character_less(const Character& a, const Character& b);

// A slope value: an exact rational or +/- infinity.
class Slope {
public:
    static Slope finite(Rat v) { return Slope(Kind::finite, std::move(v)); }
    static Slope plus_infinity() { return Slope(Kind::plus_inf, Rat(0)); }
    static Slope minus_infinity() { return Slope(Kind::minus_inf, Rat(0)); }

    bool is_finite() const { return kind_ == Kind::finite; }
    bool is_plus_infinity() const { return kind_ == Kind::plus_inf; }
    bool is_minus_infinity() const { return kind_ == Kind::minus_inf; }

    // Finite slopes only.
    const Rat& value() const {
        if (!is_finite()) throw std::logic_error("Slope::value: not finite");
        return value_;
    }

    friend bool operator==(const Slope& a, const Slope& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::finite || a.value_ == b.value_);
    }
    friend bool operator<(const Slope& a, const Slope& b) {
        if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
        return a.kind_ == Kind::finite && a.value_ < b.value_;
    }
    friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }
    friend bool operator>(const Slope& a, const Slope& b) { return b < a; }
    friend bool operator<=(const Slope& a, const Slope& b) { return !(b < a); }
    friend bool operator>=(const Slope& a, const Slope& b) { return !(a < b); }

private:
    enum class Kind { minus_inf = 0, finite = 1, plus_inf = 2 };
    Slope(Kind k, Rat v) : kind_(k), value_(std::move(v)) {}
    Kind kind_;
    Rat value_;
};

std::ostream& operator<<(std::ostream& os, const Slope& s);

// ch(L^n tensor I_X) = (1, n, n^2 d - x) for a length-x subscheme X. n >= 1, x >= 0.
Character ideal_twist_character(const Surface& S, const Int& n, const Int& x);

// Multiplication by e^(m l): (r, c, chi) -> (r, c + r m, chi + 2 d m c + d m^2 r).
// Additive in m: twist(twist(u, a), b) = twist(u, a + b).
Character twist(const Surface& S, const Character& u, const Int& m);

// Fourier-Mukai action on characters: (r, c, chi) -> (chi, -c, r). Involution.
Character fm(const Character& u);

// Derived dual on characters: (r, c, chi) -> (r, -c, chi). Involution,
// commutes with fm.
Character dual(const Character& u);

// chi(u, v) = r_u chi_v + r_v chi_u - 2 d c_u c_v. Symmetric, bilinear, and
// invariant under a simultaneous twist of both arguments.
Int euler_pairing(const Surface& S, const Character& u, const Character& v);

// mu = 2 d c / r; +/-infinity for torsion classes (r = 0, c != 0).
Slope mu_slope(const Surface& S, const Character& u);

// Bogomolov inequality 2 r chi <= c_1^2 in the integer form r chi <= d c^2.
bool bogomolov_holds(const Surface& S, const Character& u);

// Expected dimension 2 c^2 d - 2 r chi + 2 of the sheaf moduli space;
// equals 2 - euler_pairing(u, u).
Int virtual_dim(const Surface& S, const Character& u);

// (r > 0) or (r = 0, c > 0) or (r = 0, c = 0, chi > 0).
bool is_positive_character(const Character& u);

// Gieseker/Simpson moduli nonemptiness: virtual_dim >= 2, equivalently the
// Bogomolov inequality. Requires a positive character; callers dualize
// negative-slope classes first.
bool gieseker_nonempty(const Surface& S, const Character& u);

// Reduced Hilbert value chi(twist(u, m)) / r as an exact rational. r != 0.
Rat hilbert_reduced(const Surface& S, const Character& u, const Int& m);

}  // namespace abelwalls
