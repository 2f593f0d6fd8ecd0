#include "abelwalls/numeric.hpp"

#include <algorithm>
#include <cctype>

namespace abelwalls {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw precondition_error("make_rat: denominator must be nonzero");
    Rat x(num, den);
    x.canonicalize();
    return x;
}

Int floor_div(const Int& a, const Int& b) {
    if (b == 0) throw precondition_error("floor_div: division by zero");
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int ceil_div(const Int& a, const Int& b) {
    if (b == 0) throw precondition_error("ceil_div: division by zero");
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int isqrt_floor(const Int& x) {
    if (x < 0) throw precondition_error("isqrt_floor: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

Int ceil_sqrt(const Int& x) {
    Int r = isqrt_floor(x);
    if (r * r < x) ++r;
    return r;
}

Int pow10(unsigned long k) {
    Int t;
    mpz_ui_pow_ui(t.get_mpz_t(), 10, k);
    return t;
}

std::string rat_str(const Rat& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Int parse_int(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (i == s.size()) throw parse_error("not an integer: '" + s + "'");
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw parse_error("not an integer: '" + s + "'");
    return Int(s, 10);
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw parse_error("rational with zero denominator: '" + s + "'");
    return make_rat(num, den);
}

std::string decimal(const Rat& x, int sig) {
    if (sig < 1) throw precondition_error("decimal: precision must be >= 1");
    if (x == 0) return "0";
    Int p = abs(x.get_num());
    Int q = x.get_den();
    // e such that 10^(e-1) <= p/q < 10^e
    long e = static_cast<long>(mpz_sizeinbase(p.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 10));
    auto less_than_pow = [&](long k) {  // p/q < 10^k ?
        return k >= 0 ? p < q * pow10(static_cast<unsigned long>(k))
                      : p * pow10(static_cast<unsigned long>(-k)) < q;
    };
    while (!less_than_pow(e)) ++e;
    while (less_than_pow(e - 1)) --e;

    Int num = p, den = q;
    long shift = sig - e;
    if (shift >= 0)
        num *= pow10(static_cast<unsigned long>(shift));
    else
        den *= pow10(static_cast<unsigned long>(-shift));
    Int digits = floor_div(2 * num + den, 2 * den);  // round half away from zero
    if (digits >= pow10(static_cast<unsigned long>(sig))) {
        digits = pow10(static_cast<unsigned long>(sig - 1));
        ++e;
    }

    std::string ds = digits.get_str();
    std::string out;
    if (e >= sig)
        out = ds + std::string(static_cast<std::size_t>(e - sig), '0');
    else if (e >= 1)
        out = ds.substr(0, static_cast<std::size_t>(e)) + "." + ds.substr(static_cast<std::size_t>(e));
    else
        out = "0." + std::string(static_cast<std::size_t>(-e), '0') + ds;
    return x < 0 ? "-" + out : out;
}

Rat sqrt_approx(const Rat& x, int sig) {
    if (x < 0) throw precondition_error("sqrt_approx: negative argument");
    if (x == 0) return Rat(0);
    const Int& p = x.get_num();
    const Int& q = x.get_den();
    // guard digits cover small values where leading zeros eat precision
    long extra = 0;
    if (p < q)
        extra = (static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 10)) -
                 static_cast<long>(mpz_sizeinbase(p.get_mpz_t(), 10))) / 2 + 2;
    unsigned long m = static_cast<unsigned long>(sig + 15 + extra);
    Int scale = pow10(m);
    Int root = isqrt_floor(p * q * scale * scale);  // sqrt(p/q) = sqrt(pq)/q
    return make_rat(root, q * scale);
}

std::string sqrt_decimal(const Rat& x, int sig) {
    return decimal(sqrt_approx(x, sig), sig);
}

}  // namespace abelwalls
