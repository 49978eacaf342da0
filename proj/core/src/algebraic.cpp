#include "effroth/algebraic.hpp"

#include <stdexcept>

namespace effroth {

AlgebraicNumber::AlgebraicNumber(IntPolynomial minpoly, RootInterval isolation)
    : minpoly_(std::move(minpoly)), isolation_(std::move(isolation)) {
  if (minpoly_.degree() < 1) throw std::invalid_argument("algebraic: degree must be >= 1");
  if (isolation_.lo > isolation_.hi) throw std::invalid_argument("algebraic: bad isolation");
}

namespace {

// One bisection step; isolation endpoints carry opposite signs of p.
RootInterval bisect_once(const IntPolynomial& p, const RootInterval& iv) {
  if (iv.is_exact()) return iv;
  Rational mid = (iv.lo + iv.hi) / 2;
  int sm = p.sign_at(mid);
  if (sm == 0) return RootInterval{mid, mid, mid};
  if (p.sign_at(iv.lo) * sm < 0) return RootInterval{iv.lo, mid, std::nullopt};
  return RootInterval{mid, iv.hi, std::nullopt};
}

}  // namespace

int AlgebraicNumber::root_index() const {
  SturmSequence sturm(minpoly_);
  if (isolation_.is_exact())
    throw std::logic_error("root_index: exact rational root of irreducible minpoly");
  // Roots strictly below this one = roots in (-inf, lo] (lo is not a root).
  return sturm.variations_at_minus_inf() - sturm.variations_at(isolation_.lo);
}

AlgebraicNumber AlgebraicNumber::refined(const Rational& w) const {
  RootInterval iv = isolation_;
  while (!iv.is_exact() && iv.hi - iv.lo > w) iv = bisect_once(minpoly_, iv);
  return AlgebraicNumber(minpoly_, iv);
}

double AlgebraicNumber::approx_double() const {
  AlgebraicNumber r = refined(Rational(1, Integer(1) << 70));
  return (to_double(r.isolation().lo) + to_double(r.isolation().hi)) / 2;
}

Integer AlgebraicNumber::floor() const {
  if (isolation_.is_exact()) return rational_floor(*isolation_.exact_point);
  if (minpoly_.degree() == 1) {
    Rational v(-minpoly_.coeff(0), minpoly_.coeff(1));
    v.canonicalize();
    return rational_floor(v);
  }
  // Degree >= 2 and irreducible: the value is irrational, so refinement
  // eventually places the interval strictly inside one unit cell.
  RootInterval iv = isolation_;
  while (true) {
    Integer flo = rational_floor(iv.lo);
    Integer fhi = rational_floor(iv.hi);
    if (flo == fhi && Rational(fhi) != iv.hi) return flo;
    iv = bisect_once(minpoly_, iv);
  }
}

bool AlgebraicNumber::operator==(const AlgebraicNumber& o) const {
  return compare_algebraic(*this, o) == Ordering::Equal;
}

std::string AlgebraicNumber::str() const {
  return "root#" + std::to_string(root_index()) + "(" + minpoly_.str() + ")~" +
         std::to_string(approx_double());
}

Ordering compare_to_rational(const AlgebraicNumber& alpha, const Rational& r) {
  const RootInterval& iv = alpha.isolation();
  if (iv.is_exact()) {
    if (*iv.exact_point < r) return Ordering::Less;
    if (*iv.exact_point > r) return Ordering::Greater;
    return Ordering::Equal;
  }
  if (r < iv.lo) return Ordering::Greater;
  if (r > iv.hi) return Ordering::Less;
  int sr = alpha.minpoly().sign_at(r);
  if (sr == 0) return Ordering::Equal;  // only possible for degree 1
  // Exactly one simple root in [lo, hi]; matching signs put it right of r.
  if (sr == alpha.minpoly().sign_at(iv.lo)) return Ordering::Greater;
  return Ordering::Less;
}

Ordering compare_algebraic(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.minpoly() == b.minpoly()) {
    int ia = a.isolation().is_exact() || b.isolation().is_exact() ? -1 : a.root_index();
    if (ia >= 0) {
      int ib = b.root_index();
      if (ia == ib) return Ordering::Equal;
      return ia < ib ? Ordering::Less : Ordering::Greater;
    }
  }
  if (a.isolation().is_exact())
    return compare_to_rational(b, *a.isolation().exact_point) == Ordering::Less
               ? Ordering::Greater
           : compare_to_rational(b, *a.isolation().exact_point) == Ordering::Greater
               ? Ordering::Less
               : Ordering::Equal;
  if (b.isolation().is_exact()) return compare_to_rational(a, *b.isolation().exact_point);
  // Distinct algebraic numbers: refine until the intervals separate.
  AlgebraicNumber x = a, y = b;
  while (true) {
    if (x.isolation().hi < y.isolation().lo) return Ordering::Less;
    if (y.isolation().hi < x.isolation().lo) return Ordering::Greater;
    // Use each other's rational endpoints as exact separators when possible.
    Ordering o1 = compare_to_rational(x, y.isolation().lo);
    Ordering o2 = compare_to_rational(y, x.isolation().lo);
    if (o1 == Ordering::Less) return Ordering::Less;
    if (o2 == Ordering::Less) return Ordering::Greater;
    x = x.refined(x.isolation().width() / 4);
    y = y.refined(y.isolation().width() / 4);
  }
}

AlgebraicNumber shift_by_integer(const AlgebraicNumber& alpha, const Integer& n) {
  IntPolynomial p = alpha.minpoly().shifted_argument(n).primitive_normalized();
  RootInterval iv = alpha.isolation();
  iv.lo += Rational(n);
  iv.hi += Rational(n);
  if (iv.exact_point) *iv.exact_point += Rational(n);
  return AlgebraicNumber(std::move(p), std::move(iv));
}

std::vector<AlgebraicNumber> algebraic_roots(const IntPolynomial& p, const Rational& width) {
  std::vector<AlgebraicNumber> out;
  for (auto& iv : real_roots(p, width)) out.emplace_back(p, std::move(iv));
  return out;
}

}  // namespace effroth
