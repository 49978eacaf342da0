#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "effroth/rational.hpp"

namespace effroth {

inline constexpr mpfr_prec_t kDefaultPrec = 320;

// Value-semantic wrapper over mpfr_t. Rounding is always explicit at the
// call site; this class only manages storage.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = kDefaultPrec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(Real o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_inf() const { return mpfr_inf_p(v_); }
  bool is_nan() const { return mpfr_nan_p(v_); }
  int sign() const { return mpfr_sgn(v_); }

  std::string str(int digits = 40) const;

  static Real from_long(long x, mpfr_prec_t prec = kDefaultPrec);
  static Real from_double(double x, mpfr_prec_t prec = kDefaultPrec);
  static Real from_mpz(const Integer& z, mpfr_rnd_t rnd, mpfr_prec_t prec = kDefaultPrec);
  static Real from_mpq(const Rational& q, mpfr_rnd_t rnd, mpfr_prec_t prec = kDefaultPrec);

 private:
  mpfr_t v_;
};

int cmp(const Real& a, const Real& b);

// Closed interval [lo, hi] with outward (directed) rounding on every
// operation; the exact mathematical result is always contained.
class Interval {
 public:
  Real lo, hi;

  Interval() = default;
  Interval(Real l, Real h) : lo(std::move(l)), hi(std::move(h)) {}

  static Interval point_long(long x, mpfr_prec_t prec = kDefaultPrec);
  static Interval point_double(double x, mpfr_prec_t prec = kDefaultPrec);
  static Interval from_mpz(const Integer& z, mpfr_prec_t prec = kDefaultPrec);
  static Interval from_mpq(const Rational& q, mpfr_prec_t prec = kDefaultPrec);
  // [lo_q, hi_q] rounded outward.
  static Interval from_mpq_pair(const Rational& lo_q, const Rational& hi_q,
                                mpfr_prec_t prec = kDefaultPrec);
  static Interval pi(mpfr_prec_t prec = kDefaultPrec);
  static Interval zeta_ui(unsigned long s, mpfr_prec_t prec = kDefaultPrec);
  // ln(z) for integer z >= 1.
  static Interval log_mpz(const Integer& z, mpfr_prec_t prec = kDefaultPrec);
  static Interval log_mpq(const Rational& q, mpfr_prec_t prec = kDefaultPrec);

  bool valid() const { return !lo.is_nan() && !hi.is_nan() && cmp(lo, hi) <= 0; }
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  double mid() const { return 0.5 * (lo.to_double() + hi.to_double()); }
  double wid() const;
  std::string str(int digits = 30) const;

  Interval operator-() const;
  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator*(const Interval& o) const;
  Interval operator/(const Interval& o) const;  // o must not contain zero

  Interval add_long(long x) const;
  Interval mul_long(long x) const;
  Interval mul_mpz(const Integer& z) const;
  Interval div_mpz(const Integer& z) const;

  Interval log() const;     // requires lo > 0
  Interval log1p() const;   // requires lo > -1
  Interval exp() const;     // may saturate to +inf in hi on overflow
  Interval sqrt() const;    // requires lo >= 0
  Interval pow_mpz(const Integer& e) const;       // lo > 0
  Interval pow_mpq(const Rational& e) const;      // lo > 0; exp(e*log x)
  Interval abs() const;

  Interval hull(const Interval& o) const;
  Interval intersect(const Interval& o) const;  // must overlap

  bool definitely_lt(const Interval& o) const;  // hi < o.lo
  bool definitely_gt(const Interval& o) const;  // lo > o.hi
  bool definitely_le(const Interval& o) const;
  bool definitely_ge(const Interval& o) const;
};

// Widen mpfr exponent range once per process (large ledger constants need it).
void ensure_bigfloat_init();

}  // namespace effroth
