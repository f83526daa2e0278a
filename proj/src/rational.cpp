#include "rational.hpp"

#include <cctype>
#include <stdexcept>

namespace betti {

Rational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(Integer(static_cast<long>(num)),
                       Integer(static_cast<long>(den)));
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw std::invalid_argument("rational denominator must be nonzero");
  }
  Rational value(num, den);
  value.canonicalize();
  return value;
}

namespace {

bool is_digit_run(const std::string& s, std::size_t begin, std::size_t end) {
  if (begin >= end) return false;
  for (std::size_t i = begin; i < end; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  const std::string num_part = text.substr(0, slash);
  std::size_t num_begin = 0;
  if (!num_part.empty() && num_part[0] == '-') num_begin = 1;
  const bool num_ok = is_digit_run(num_part, num_begin, num_part.size());

  if (slash == std::string::npos) {
    if (!num_ok) {
      throw std::invalid_argument("malformed rational: '" + text + "'");
    }
    Rational value;
    value = Integer(num_part);
    return value;
  }

  const std::string den_part = text.substr(slash + 1);
  if (!num_ok || !is_digit_run(den_part, 0, den_part.size())) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  const Integer den(den_part);
  if (den == 0) {
    throw std::invalid_argument("malformed rational (zero denominator): '" +
                                text + "'");
  }
  return make_rational(Integer(num_part), den);
}

std::string to_string(const Rational& value) {
  return value.get_str();
}

bool is_integer(const Rational& value) {
  return value.get_den() == 1;
}

Integer factorial_int(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer binomial_int(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return Integer(0);
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

}  // namespace betti
