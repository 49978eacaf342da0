#include "effroth/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace effroth {

void ensure_bigfloat_init() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    mpfr_set_emin(mpfr_get_emin_min());
    mpfr_set_emax(mpfr_get_emax_max());
  });
}

namespace {
struct InitOnLoad {
  InitOnLoad() { ensure_bigfloat_init(); }
} init_on_load;

mpfr_prec_t join_prec(const Interval& a, const Interval& b) {
  return std::max(a.lo.prec(), b.lo.prec());
}
}  // namespace

std::string Real::str(int digits) const {
  char buf[256];
  std::string fmt = "%." + std::to_string(digits) + "Re";
  mpfr_snprintf(buf, sizeof(buf), fmt.c_str(), v_);
  return buf;
}

Real Real::from_long(long x, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si(r.get(), x, MPFR_RNDN);
  return r;
}

Real Real::from_double(double x, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_d(r.get(), x, MPFR_RNDN);
  return r;
}

Real Real::from_mpz(const Integer& z, mpfr_rnd_t rnd, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_z(r.get(), z.get_mpz_t(), rnd);
  return r;
}

Real Real::from_mpq(const Rational& q, mpfr_rnd_t rnd, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_q(r.get(), q.get_mpq_t(), rnd);
  return r;
}

int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.get(), b.get()); }

Interval Interval::point_long(long x, mpfr_prec_t prec) {
  return {Real::from_long(x, prec), Real::from_long(x, prec)};
}

Interval Interval::point_double(double x, mpfr_prec_t prec) {
  return {Real::from_double(x, prec), Real::from_double(x, prec)};
}

Interval Interval::from_mpz(const Integer& z, mpfr_prec_t prec) {
  return {Real::from_mpz(z, MPFR_RNDD, prec), Real::from_mpz(z, MPFR_RNDU, prec)};
}

Interval Interval::from_mpq(const Rational& q, mpfr_prec_t prec) {
  return {Real::from_mpq(q, MPFR_RNDD, prec), Real::from_mpq(q, MPFR_RNDU, prec)};
}

Interval Interval::from_mpq_pair(const Rational& lo_q, const Rational& hi_q, mpfr_prec_t prec) {
  if (lo_q > hi_q) throw std::invalid_argument("interval: lo > hi");
  return {Real::from_mpq(lo_q, MPFR_RNDD, prec), Real::from_mpq(hi_q, MPFR_RNDU, prec)};
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval r{Real(prec), Real(prec)};
  mpfr_const_pi(r.lo.get(), MPFR_RNDD);
  mpfr_const_pi(r.hi.get(), MPFR_RNDU);
  return r;
}

Interval Interval::zeta_ui(unsigned long s, mpfr_prec_t prec) {
  Interval r{Real(prec), Real(prec)};
  mpfr_zeta_ui(r.lo.get(), s, MPFR_RNDD);
  mpfr_zeta_ui(r.hi.get(), s, MPFR_RNDU);
  return r;
}

Interval Interval::log_mpz(const Integer& z, mpfr_prec_t prec) {
  return Interval::from_mpz(z, prec).log();
}

Interval Interval::log_mpq(const Rational& q, mpfr_prec_t prec) {
  return Interval::from_mpq(q, prec).log();
}

double Interval::wid() const {
  Real w(lo.prec());
  mpfr_sub(w.get(), hi.get(), lo.get(), MPFR_RNDU);
  return w.to_double();
}

std::string Interval::str(int digits) const {
  return "[" + lo.str(digits) + ", " + hi.str(digits) + "]";
}

Interval Interval::operator-() const {
  Interval r{Real(lo.prec()), Real(lo.prec())};
  mpfr_neg(r.lo.get(), hi.get(), MPFR_RNDD);
  mpfr_neg(r.hi.get(), lo.get(), MPFR_RNDU);
  return r;
}

Interval Interval::operator+(const Interval& o) const {
  mpfr_prec_t p = join_prec(*this, o);
  Interval r{Real(p), Real(p)};
  mpfr_add(r.lo.get(), lo.get(), o.lo.get(), MPFR_RNDD);
  mpfr_add(r.hi.get(), hi.get(), o.hi.get(), MPFR_RNDU);
  return r;
}

Interval Interval::operator-(const Interval& o) const {
  mpfr_prec_t p = join_prec(*this, o);
  Interval r{Real(p), Real(p)};
  mpfr_sub(r.lo.get(), lo.get(), o.hi.get(), MPFR_RNDD);
  mpfr_sub(r.hi.get(), hi.get(), o.lo.get(), MPFR_RNDU);
  return r;
}

Interval Interval::operator*(const Interval& o) const {
  mpfr_prec_t p = join_prec(*this, o);
  Interval r{Real(p), Real(p)};
  // lo: min of the four cross products rounded down; hi: max rounded up.
  Real t(p);
  bool first = true;
  auto consider = [&](mpfr_srcptr a, mpfr_srcptr b) {
    mpfr_mul(t.get(), a, b, MPFR_RNDD);
    if (first || mpfr_cmp(t.get(), r.lo.get()) < 0) mpfr_set(r.lo.get(), t.get(), MPFR_RNDD);
    mpfr_mul(t.get(), a, b, MPFR_RNDU);
    if (first || mpfr_cmp(t.get(), r.hi.get()) > 0) mpfr_set(r.hi.get(), t.get(), MPFR_RNDU);
    first = false;
  };
  consider(lo.get(), o.lo.get());
  consider(lo.get(), o.hi.get());
  consider(hi.get(), o.lo.get());
  consider(hi.get(), o.hi.get());
  return r;
}

Interval Interval::operator/(const Interval& o) const {
  if (o.contains_zero()) throw std::domain_error("interval: division by interval containing 0");
  mpfr_prec_t p = join_prec(*this, o);
  Interval r{Real(p), Real(p)};
  Real t(p);
  bool first = true;
  auto consider = [&](mpfr_srcptr a, mpfr_srcptr b) {
    mpfr_div(t.get(), a, b, MPFR_RNDD);
    if (first || mpfr_cmp(t.get(), r.lo.get()) < 0) mpfr_set(r.lo.get(), t.get(), MPFR_RNDD);
    mpfr_div(t.get(), a, b, MPFR_RNDU);
    if (first || mpfr_cmp(t.get(), r.hi.get()) > 0) mpfr_set(r.hi.get(), t.get(), MPFR_RNDU);
    first = false;
  };
  consider(lo.get(), o.lo.get());
  consider(lo.get(), o.hi.get());
  consider(hi.get(), o.lo.get());
  consider(hi.get(), o.hi.get());
  return r;
}

Interval Interval::add_long(long x) const {
  Interval r{Real(lo.prec()), Real(lo.prec())};
  mpfr_add_si(r.lo.get(), lo.get(), x, MPFR_RNDD);
  mpfr_add_si(r.hi.get(), hi.get(), x, MPFR_RNDU);
  return r;
}

Interval Interval::mul_long(long x) const { return *this * Interval::point_long(x, lo.prec()); }

Interval Interval::mul_mpz(const Integer& z) const {
  return *this * Interval::from_mpz(z, lo.prec());
}

Interval Interval::div_mpz(const Integer& z) const {
  return *this / Interval::from_mpz(z, lo.prec());
}

Interval Interval::log() const {
  if (lo.sign() <= 0) throw std::domain_error("interval: log of nonpositive");
  Interval r{Real(lo.prec()), Real(lo.prec())};
  mpfr_log(r.lo.get(), lo.get(), MPFR_RNDD);
  mpfr_log(r.hi.get(), hi.get(), MPFR_RNDU);
  return r;
}

Interval Interval::log1p() const {
  Interval r{Real(lo.prec()), Real(lo.prec())};
  mpfr_log1p(r.lo.get(), lo.get(), MPFR_RNDD);
  mpfr_log1p(r.hi.get(), hi.get(), MPFR_RNDU);
  return r;
}

Interval Interval::exp() const {
  Interval r{Real(lo.prec()), Real(lo.prec())};
  mpfr_exp(r.lo.get(), lo.get(), MPFR_RNDD);
  mpfr_exp(r.hi.get(), hi.get(), MPFR_RNDU);
  return r;
}

Interval Interval::sqrt() const {
  if (lo.sign() < 0) throw std::domain_error("interval: sqrt of negative");
  Interval r{Real(lo.prec()), Real(lo.prec())};
  mpfr_sqrt(r.lo.get(), lo.get(), MPFR_RNDD);
  mpfr_sqrt(r.hi.get(), hi.get(), MPFR_RNDU);
  return r;
}

Interval Interval::pow_mpz(const Integer& e) const {
  if (lo.sign() <= 0) throw std::domain_error("interval: pow base must be positive");
  if (e == 0) return Interval::point_long(1, lo.prec());
  Interval lg = log().mul_mpz(e);
  if (e < 0) std::swap(lg.lo, lg.hi);
  return lg.exp();
}

Interval Interval::pow_mpq(const Rational& e) const {
  if (lo.sign() <= 0) throw std::domain_error("interval: pow base must be positive");
  Interval lg = log() * Interval::from_mpq(e, lo.prec());
  return lg.exp();
}

Interval Interval::abs() const {
  if (lo.sign() >= 0) return *this;
  if (hi.sign() <= 0) return -*this;
  Interval r{Real(lo.prec()), Real(lo.prec())};
  mpfr_set_zero(r.lo.get(), 1);
  mpfr_neg(r.hi.get(), lo.get(), MPFR_RNDU);
  if (mpfr_cmp(r.hi.get(), hi.get()) < 0) mpfr_set(r.hi.get(), hi.get(), MPFR_RNDU);
  return r;
}

Interval Interval::hull(const Interval& o) const {
  Interval r = *this;
  if (mpfr_cmp(o.lo.get(), r.lo.get()) < 0) r.lo = o.lo;
  if (mpfr_cmp(o.hi.get(), r.hi.get()) > 0) r.hi = o.hi;
  return r;
}

Interval Interval::intersect(const Interval& o) const {
  Interval r = *this;
  if (mpfr_cmp(o.lo.get(), r.lo.get()) > 0) r.lo = o.lo;
  if (mpfr_cmp(o.hi.get(), r.hi.get()) < 0) r.hi = o.hi;
  if (!r.valid()) throw std::domain_error("interval: empty intersection");
  return r;
}

bool Interval::definitely_lt(const Interval& o) const { return mpfr_cmp(hi.get(), o.lo.get()) < 0; }
bool Interval::definitely_gt(const Interval& o) const { return mpfr_cmp(lo.get(), o.hi.get()) > 0; }
bool Interval::definitely_le(const Interval& o) const { return mpfr_cmp(hi.get(), o.lo.get()) <= 0; }
bool Interval::definitely_ge(const Interval& o) const { return mpfr_cmp(lo.get(), o.hi.get()) >= 0; }

}  // namespace effroth
