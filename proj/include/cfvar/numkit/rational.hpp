#ifndef CFVAR_NUMKIT_RATIONAL_HPP
#define CFVAR_NUMKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cfvar {

using BigInt = mpz_class;
/// Always canonical: denominator > 0 and gcd(|num|, den) = 1 after every operation.
using BigRational = mpq_class;

/// Parses "p/q", "-p/q" or an integer. Decimal points and exponents are rejected
/// because exact parameters must stay exact.
BigRational parse_rational(std::string_view text);

std::string to_string(const BigInt& v);
std::string to_string(const BigRational& v);

BigInt lcm(const BigInt& a, const BigInt& b);
BigInt gcd(const BigInt& a, const BigInt& b);

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

/// Power with a signed integer exponent; q must be nonzero when exp < 0.
BigRational pow(const BigRational& q, long exp);

/// Binomial coefficient C(n, k) for n, k >= 0.
BigInt binomial(unsigned long n, unsigned long k);

/// 2-adic valuation of a nonzero rational.
long valuation2(const BigRational& q);

}  // namespace cfvar

#endif  // CFVAR_NUMKIT_RATIONAL_HPP
