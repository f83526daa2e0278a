#include "hilbert.hpp"

#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace betti {

Rational RatPolynomial::coefficient(std::int64_t degree) const {
  auto it = coefficients_.find(degree);
  return it == coefficients_.end() ? Rational(0) : it->second;
}

void RatPolynomial::set_coefficient(std::int64_t degree, const Rational& value) {
  if (degree < 0) throw std::invalid_argument("polynomial degree must be >= 0");
  if (value == 0) {
    coefficients_.erase(degree);
  } else {
    coefficients_[degree] = value;
  }
}

void RatPolynomial::add_term(std::int64_t degree, const Rational& value) {
  if (degree < 0) throw std::invalid_argument("polynomial degree must be >= 0");
  if (value == 0) return;
  auto [it, inserted] = coefficients_.try_emplace(degree, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) coefficients_.erase(it);
  }
}

std::int64_t RatPolynomial::degree() const {
  if (coefficients_.empty()) {
    throw std::invalid_argument("zero polynomial has no degree");
  }
  return coefficients_.rbegin()->first;
}

Rational RatPolynomial::evaluate(const Rational& t) const {
  if (coefficients_.empty()) return Rational(0);
  // Horner over the dense range 0..deg; the polynomials here are short.
  Rational acc(0);
  std::int64_t current = degree();
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    while (current > it->first) {
      acc *= t;
      --current;
    }
    acc += it->second;
  }
  while (current > 0) {
    acc *= t;
    --current;
  }
  return acc;
}

std::string RatPolynomial::to_string() const {
  if (coefficients_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [deg, coeff] : coefficients_) {
    Rational magnitude = coeff;
    if (first) {
      if (coeff < 0) {
        out << '-';
        magnitude = -coeff;
      }
    } else {
      out << (coeff < 0 ? " - " : " + ");
      magnitude = abs(coeff);
    }
    first = false;
    if (deg == 0) {
      out << betti::to_string(magnitude);
    } else {
      if (magnitude != 1) out << betti::to_string(magnitude) << '*';
      out << 't';
      if (deg > 1) out << '^' << deg;
    }
  }
  return out.str();
}

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial out;
  for (const auto& [da, ca] : a.coefficients_) {
    for (const auto& [db, cb] : b.coefficients_) {
      out.add_term(da + db, ca * cb);
    }
  }
  return out;
}

RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial out = a;
  for (const auto& [deg, coeff] : b.coefficients_) out.add_term(deg, coeff);
  return out;
}

RatPolynomial alternating_numerator(const BettiDiagram& d) {
  if (d.empty()) {
    throw std::invalid_argument("alternating numerator of the empty diagram");
  }
  RatPolynomial out;
  for (const auto& [pos, value] : d.entries()) {
    if (pos.p + pos.q < 0) {
      throw std::invalid_argument(
          "diagram entry of negative total degree p+q; the Hilbert numerator "
          "is a plain polynomial in t");
    }
    out.add_term(pos.p + pos.q, (pos.p % 2 == 0) ? value : -value);
  }
  return out;
}

RatPolynomial divide_exact(const RatPolynomial& p, std::int64_t c) {
  if (c < 0) throw std::invalid_argument("divide_exact: negative exponent");
  RatPolynomial current = p;
  for (std::int64_t step = 0; step < c; ++step) {
    if (current.zero()) continue;  // 0 / (1-t) = 0 exactly
    // p = (1-t) q + p(1): the quotient coefficients are the prefix sums of
    // p's coefficients, and the division is exact iff the total sum is 0.
    RatPolynomial quotient;
    Rational running(0);
    std::int64_t last = -1;
    for (const auto& [deg, coeff] : current.coefficients()) {
      // Degrees between stored terms repeat the running sum.
      if (last >= 0 && running != 0) {
        for (std::int64_t i = last; i < deg; ++i) {
          quotient.set_coefficient(i, running);
        }
      }
      running += coeff;
      last = deg;
    }
    if (running != 0) {
      throw NotDivisibleError("not divisible by (1-t)^" + std::to_string(c) +
                              ": remainder " + betti::to_string(running) +
                              " after " + std::to_string(step) +
                              " exact step(s) on " + p.to_string());
    }
    current = std::move(quotient);
  }
  return current;
}

Rational multiplicity(const BettiDiagram& d) {
  const std::int64_t codim = d.projective_dimension();
  return divide_exact(alternating_numerator(d), codim).evaluate(Rational(1));
}

}  // namespace betti
