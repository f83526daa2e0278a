#ifndef BETTI_RATIONAL_HPP
#define BETTI_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace betti {

// Exact rational arithmetic for the whole library. GMP's mpq_class already
// keeps values in lowest terms with a positive denominator, which is the
// representation contract everywhere a coefficient is stored. No floating
// point is used anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

// num/den reduced to lowest terms; throws std::invalid_argument on den == 0.
Rational make_rational(std::int64_t num, std::int64_t den = 1);
Rational make_rational(const Integer& num, const Integer& den);

// Strict grammar: -?digits or -?digits/digits with nonzero denominator,
// e.g. "26", "-3", "7/13". Anything else throws std::invalid_argument.
Rational parse_rational(const std::string& text);

// Lowest-terms rendering: "a" when the value is integral, otherwise "a/b".
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

// Exact n! as an Integer; n must be >= 0.
Integer factorial_int(std::int64_t n);

// Exact binomial(n, k); zero when k < 0 or k > n.
Integer binomial_int(std::int64_t n, std::int64_t k);

}  // namespace betti

#endif
