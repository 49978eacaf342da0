#pragma once

#include <compare>
#include <vector>

#include "effroth/polynomial.hpp"
#include "effroth/rational.hpp"

namespace effroth {

enum class Ordering { Less, Equal, Greater };

// A real algebraic number: primitive normalized irreducible minimal polynomial
// plus an isolating interval bracketing exactly one of its real roots.
// Values are immutable; refinement produces working copies.
class AlgebraicNumber {
 public:
  AlgebraicNumber(IntPolynomial minpoly, RootInterval isolation);

  const IntPolynomial& minpoly() const { return minpoly_; }
  const RootInterval& isolation() const { return isolation_; }
  int degree() const { return minpoly_.degree(); }
  Integer height() const { return minpoly_.height(); }

  // Index of this root among the real roots of minpoly (0-based, ascending).
  // Exact; used as the canonical identity tie-breaker.
  int root_index() const;

  // A copy whose isolating interval has width <= w.
  AlgebraicNumber refined(const Rational& w) const;

  double approx_double() const;

  // Exact floor of the value.
  Integer floor() const;

  bool operator==(const AlgebraicNumber& o) const;

  std::string str() const;

 private:
  IntPolynomial minpoly_;
  RootInterval isolation_;
};

// Exact ordering of alpha against a rational (degree >= 2 values never equal a
// rational; Equal can only surface for a degree-1 minimal polynomial).
Ordering compare_to_rational(const AlgebraicNumber& alpha, const Rational& r);

// Exact total order on algebraic numbers.
Ordering compare_algebraic(const AlgebraicNumber& a, const AlgebraicNumber& b);

// alpha + n, with the minimal polynomial transported by x -> x - n.
AlgebraicNumber shift_by_integer(const AlgebraicNumber& alpha, const Integer& n);

// All real roots of an irreducible primitive normalized polynomial, ascending.
std::vector<AlgebraicNumber> algebraic_roots(const IntPolynomial& p, const Rational& width);

}  // namespace effroth
