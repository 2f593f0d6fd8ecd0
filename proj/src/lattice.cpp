#include "abelwalls/lattice.hpp"

namespace abelwalls {

std::ostream& operator<<(std::ostream& os, const Character& u) {
    return os << "[" << u.r << "," << u.c << "," << u.chi << "]";
}

bool character_less(const Character& a, const Character& b) {
    if (a.r != b.r) return a.r < b.r;
    if (a.c != b.c) return a.c < b.c;
    return a.chi < b.chi;
}

std::ostream& operator<<(std::ostream& os, const Slope& s) {
    if (s.is_plus_infinity()) return os << "+inf";
    if (s.is_minus_infinity()) return os << "-inf";
    return os << s.value();
}

Character ideal_twist_character(const Surface& S, const Int& n, const Int& x) {
    if (n < 1) throw precondition_error("ideal_twist_character: n must be >= 1");
    if (x < 0) throw precondition_error("ideal_twist_character: x must be >= 0");
    return {1, n, n * n * S.d - x};
}

Character twist(const Surface& S, const Character& u, const Int& m) {
    return {u.r, u.c + u.r * m, u.chi + 2 * S.d * m * u.c + S.d * m * m * u.r};
}

Character fm(const Character& u) { return {u.chi, -u.c, u.r}; }

Character dual(const Character& u) { return {u.r, -u.c, u.chi}; }

Int euler_pairing(const Surface& S, const Character& u, const Character& v) {
    return u.r * v.chi + v.r * u.chi - 2 * S.d * u.c * v.c;
}

Slope mu_slope(const Surface& S, const Character& u) {
    if (u.is_zero()) throw precondition_error("mu_slope: zero character");
    if (u.r == 0) {
        if (u.c > 0) return Slope::plus_infinity();
        if (u.c < 0) return Slope::minus_infinity();
        throw precondition_error("mu_slope: slope undefined for r = 0, c = 0");
    }
    return Slope::finite(make_rat(2 * S.d * u.c, u.r));
}

bool bogomolov_holds(const Surface& S, const Character& u) {
    return u.r * u.chi <= S.d * u.c * u.c;
}

Int virtual_dim(const Surface& S, const Character& u) {
    return 2 * u.c * u.c * S.d - 2 * u.r * u.chi + 2;
}

bool is_positive_character(const Character& u) {
    if (u.r > 0) return true;
    if (u.r == 0 && u.c > 0) return true;
    return u.r == 0 && u.c == 0 && u.chi > 0;
}

bool gieseker_nonempty(const Surface& S, const Character& u) {
    if (!is_positive_character(u))
        throw precondition_error("gieseker_nonempty: non-positive character (dualize first)");
    return virtual_dim(S, u) >= 2;
}

Rat hilbert_reduced(const Surface& S, const Character& u, const Int& m) {
    if (u.r == 0) throw precondition_error("hilbert_reduced: zero rank");
    return make_rat(twist(S, u, m).chi, u.r);
}

}  // namespace abelwalls
