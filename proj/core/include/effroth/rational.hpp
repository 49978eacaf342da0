#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace effroth {

// Exact rationals are GMP mpq_class throughout; mpq_class keeps values
// canonical (reduced, positive denominator) after canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// "num/den" (or "num" for integers), the exact on-disk format.
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("rational: bad literal '" + s + "'");
  r.canonicalize();
  return r;
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Largest integer <= r.
inline Integer rational_floor(const Rational& r) { return floor_div(r.get_num(), r.get_den()); }

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace effroth
