#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace polyred {

/// Exact rational number. GMP keeps every result in lowest terms with a
/// positive denominator.
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

/// Renders as "num/den", always with an explicit denominator.
std::string to_string(const Rational& q);

/// Accepts "num/den" or a bare integer. Throws ValidationError otherwise.
Rational parse_rational(std::string_view text);

/// num/den in lowest terms. mpq_class(num, den) alone does not reduce, and
/// unreduced values compare wrongly.
inline Rational make_rational(long num, long den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace polyred
