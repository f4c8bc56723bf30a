#ifndef DECGROUP_RATIONAL_HPP
#define DECGROUP_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace decgroup {

/// Exact rational number. GMP keeps it canonical: gcd(num, den) = 1, den > 0.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const std::string& text) {
  Rational q(text, 10);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline bool is_one(const Rational& q) { return q == 1; }

}  // namespace decgroup

#endif  // DECGROUP_RATIONAL_HPP
