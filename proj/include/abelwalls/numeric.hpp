#pragma once

// Exact integer/rational arithmetic helpers shared by the whole library.
// Every quantity that feeds a mathematical decision is an mpz/mpq value;
// decimal strings exist for display only and are derived from exact data.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace abelwalls {

using Int = mpz_class;
using Rat = mpq_class;

// A stated precondition of an operation was violated. The message names the
// precondition; the CLI maps this to exit code 3.
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed textual input (integers, rationals, character literals).
// The CLI maps this to exit code 2.
class parse_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Canonical rational num/den: reduced, den > 0.
Rat make_rat(const Int& num, const Int& den);

Int floor_div(const Int& a, const Int& b);  // rounds toward -inf, b != 0
Int ceil_div(const Int& a, const Int& b);   // rounds toward +inf, b != 0

Int isqrt_floor(const Int& x);  // largest m with m*m <= x, x >= 0
Int ceil_sqrt(const Int& x);    // smallest m with m*m >= x, x >= 0

Int pow10(unsigned long k);

// Serialized rational: always "num/den" with positive denominator, e.g. "3/1".
std::string rat_str(const Rat& x);

Int parse_int(const std::string& s);
Rat parse_rat(const std::string& s);  // accepts "p/q" and "p"

// Decimal rendering of x with `sig` significant digits, round half away from
// zero, plain positional notation. Display only.
std::string decimal(const Rat& x, int sig);

// Rational approximation of sqrt(x) good to ~`sig` significant digits.
Rat sqrt_approx(const Rat& x, int sig);

// decimal(sqrt(x), sig) without ever forming a float.
std::string sqrt_decimal(const Rat& x, int sig);

}  // namespace abelwalls
