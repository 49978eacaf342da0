#pragma once

#include <optional>
#include <string>
#include <vector>

#include "effroth/rational.hpp"

namespace effroth {

// Integer polynomial a0 + a1 x + ... + ad x^d with ad != 0 (empty = zero).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  static IntPolynomial from_longs(std::initializer_list<long> a0_to_ad);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& coeff(size_t k) const { return coeffs_[k]; }
  const Integer& leading() const { return coeffs_.back(); }

  Integer height() const;  // max_k |a_k|
  Integer content() const; // gcd of coefficients, >= 1; error on zero poly
  bool is_primitive_normalized() const;  // content 1 and positive leading coeff
  IntPolynomial primitive_normalized() const;

  IntPolynomial derivative() const;
  IntPolynomial negated_argument() const;              // p(-x)
  IntPolynomial shifted_argument(const Integer& n) const;  // p(x - n)

  Rational eval(const Rational& x) const;
  // Sign of p(u/v) for v > 0, via the homogenized integer value.
  int sign_at(const Rational& x) const;
  double eval_double(double x) const;

  bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }
  std::string str() const;  // human-readable, e.g. "x^2+x-1"

 private:
  std::vector<Integer> coeffs_;
};

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);

// True iff b divides a exactly over Q (then also over Z up to content).
bool divides_exactly(const IntPolynomial& a, const IntPolynomial& b);

// Primitive gcd via a primitive pseudo-remainder sequence.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

bool is_squarefree(const IntPolynomial& p);

// Sturm sequence of a squarefree polynomial; sign variation counting gives
// exact root counts in rational intervals.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& p);
  // Number of sign variations at x.
  int variations_at(const Rational& x) const;
  int variations_at_minus_inf() const;
  int variations_at_plus_inf() const;
  // Distinct real roots in (a, b], requires p(a) != 0.
  int count_roots(const Rational& a, const Rational& b) const;
  int count_all_roots() const;

 private:
  std::vector<IntPolynomial> seq_;
};

struct RootInterval {
  Rational lo, hi;
  std::optional<Rational> exact_point;  // set iff lo == hi == exact rational root

  bool is_exact() const { return exact_point.has_value(); }
  Rational width() const { return hi - lo; }
};

// Pre: p squarefree. Isolates every real root in a disjoint rational interval of
// width <= max_width; non-exact intervals carry strictly alternating endpoint
// signs of p.
std::vector<RootInterval> real_roots(const IntPolynomial& p, const Rational& max_width);

// content of p; error on the zero polynomial.
Integer content(const IntPolynomial& p);

// Pre: degree >= 1 and primitive normalized (throws otherwise).
// Degree <= 3: rational-root test. Degree >= 4: rational roots plus an
// exhaustive search for integer factors of degree <= d/2 with coefficients
// bounded by a Mignotte-type bound.
bool is_irreducible(const IntPolynomial& p);

}  // namespace effroth
