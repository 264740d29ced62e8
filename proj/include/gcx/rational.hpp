#ifndef GCX_RATIONAL_HPP
#define GCX_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace gcx {

// mpq_class keeps itself in lowest terms with a positive denominator
// as long as every constructor path goes through canonicalize().
using Rational = mpq_class;

// Always "num/den", including "/1", so that exactness is visible in text.
std::string to_string(const Rational& r);

// Accepts "a", "a/b", with optional sign. Throws Error(Parse).
Rational parse_rational(const std::string& s);

inline Rational make_rational(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

} // namespace gcx

#endif
