#ifndef BETTI_HILBERT_HPP
#define BETTI_HILBERT_HPP

#include <cstdint>
#include <map>
#include <string>

#include "diagram.hpp"
#include "rational.hpp"

namespace betti {

// Exact polynomial in one variable t with rational coefficients, sparse by
// degree. No explicit zero coefficients are stored.
class RatPolynomial {
 public:
  RatPolynomial() = default;

  Rational coefficient(std::int64_t degree) const;
  void set_coefficient(std::int64_t degree, const Rational& value);
  void add_term(std::int64_t degree, const Rational& value);

  bool zero() const { return coefficients_.empty(); }
  std::int64_t degree() const;  // throws on the zero polynomial

  Rational evaluate(const Rational& t) const;

  const std::map<std::int64_t, Rational>& coefficients() const {
    return coefficients_;
  }

  // Human-readable, e.g. "1 - t^2 - 2*t^3 + 2*t^4".
  std::string to_string() const;

  friend bool operator==(const RatPolynomial&, const RatPolynomial&) = default;

  friend RatPolynomial operator*(const RatPolynomial& a,
                                 const RatPolynomial& b);
  friend RatPolynomial operator+(const RatPolynomial& a,
                                 const RatPolynomial& b);

 private:
  std::map<std::int64_t, Rational> coefficients_;
};

// K(t) = sum_{p,q} (-1)^p b_{p,q} t^{p+q}: the Hilbert-series numerator of a
// module with the given Betti table over (1-t)^#variables. Throws
// std::invalid_argument on the empty diagram.
RatPolynomial alternating_numerator(const BettiDiagram& d);

// p / (1-t)^c by synthetic division (each pass is a prefix sum; the pass is
// exact iff the polynomial vanishes at t = 1). Throws NotDivisibleError if
// any step leaves a remainder.
RatPolynomial divide_exact(const RatPolynomial& p, std::int64_t c);

// divide_exact(alternating_numerator(d), pdim(d)) evaluated at t = 1. The
// codimension exponent is the diagram's projective dimension: every diagram
// in scope is Cohen-Macaulay, where codim = pdim, and NotDivisibleError
// surfaces violations instead of guessing. (The ambient variable count never
// enters: multiplicity only needs the numerator after clearing (1-t)^pdim.)
Rational multiplicity(const BettiDiagram& d);

}  // namespace betti

#endif
