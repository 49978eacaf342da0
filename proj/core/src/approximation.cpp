#include "effroth/approximation.hpp"

#include <mpfr.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "effroth/bigfloat.hpp"

namespace effroth {

namespace {

// Outward rational bounds of an Interval via mantissa/exponent extraction.
Rational real_to_rational(const Real& x, bool round_up) {
  if (x.sign() == 0) return Rational(0);
  Integer m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x.get());
  Rational r;
  if (e >= 0) {
    Integer p = m << static_cast<unsigned long>(e);
    r = Rational(p);
  } else {
    Integer den = Integer(1) << static_cast<unsigned long>(-e);
    r = make_rational(m, den);
  }
  (void)round_up;  // conversion is exact; rounding handled by mpfr modes
  return r;
}

std::pair<Rational, Rational> interval_to_rational(const Interval& iv) {
  return {real_to_rational(iv.lo, false), real_to_rational(iv.hi, true)};
}

}  // namespace

ApproximationFunction ApproximationFunction::power(const Rational& eps) {
  if (eps < 0) throw std::invalid_argument("psi: power exponent must be >= 0");
  ApproximationFunction f;
  f.family_ = Family::Power;
  f.eps_ = eps;
  f.monotone_ = true;
  return f;
}

ApproximationFunction ApproximationFunction::log_power(long a, long b) {
  if (a < 1 || b < 0) throw std::invalid_argument("psi: logpower needs a >= 1, b >= 0");
  ApproximationFunction f;
  f.family_ = Family::LogPower;
  f.log_a_ = a;
  f.pow_b_ = b;
  f.monotone_ = true;  // on q >= 2, which is the only domain we evaluate
  return f;
}

ApproximationFunction ApproximationFunction::constant(const Rational& c) {
  if (c < 0) throw std::invalid_argument("psi: constant must be >= 0");
  ApproximationFunction f;
  f.family_ = Family::Constant;
  f.const_c_ = c;
  f.monotone_ = true;
  return f;
}

ApproximationFunction ApproximationFunction::table(std::map<long, Rational> values) {
  ApproximationFunction f;
  f.family_ = Family::Table;
  bool mono = true;
  Rational prev(-1);
  long prev_q = 0;
  for (auto& [q, v] : values) {
    if (q < 1 || v < 0) throw std::invalid_argument("psi: table entries need q >= 1, v >= 0");
    if (prev_q != 0 && (v > prev || q != prev_q + 1)) mono = false;
    prev = v;
    prev_q = q;
  }
  // The implicit zero tail keeps monotonicity; gaps inside the table break it.
  f.table_ = std::move(values);
  f.monotone_ = mono;
  return f;
}

bool ApproximationFunction::exact() const {
  switch (family_) {
    case Family::Power:
      return eps_.get_den() == 1;
    case Family::LogPower:
      return false;
    case Family::Constant:
    case Family::Table:
      return true;
  }
  return false;
}

Rational ApproximationFunction::exact_at(long q) const {
  if (q < 1) throw std::invalid_argument("psi: q must be >= 1");
  switch (family_) {
    case Family::Power: {
      if (eps_.get_den() != 1) throw std::domain_error("psi: fractional power is not exact");
      unsigned long e = mpz_get_ui(eps_.get_num().get_mpz_t());
      Integer qe;
      mpz_ui_pow_ui(qe.get_mpz_t(), static_cast<unsigned long>(q), e);
      return make_rational(Integer(1), qe);
    }
    case Family::Constant:
      return const_c_;
    case Family::Table: {
      auto it = table_.find(q);
      return it == table_.end() ? Rational(0) : it->second;
    }
    case Family::LogPower:
      throw std::domain_error("psi: logpower is not exact");
  }
  throw std::logic_error("psi: bad family");
}

std::pair<Rational, Rational> ApproximationFunction::bounds_at(long q) const {
  if (exact()) {
    Rational v = exact_at(q);
    return {v, v};
  }
  const mpfr_prec_t prec = 128;
  if (family_ == Family::Power) {
    // q^(-eps) = exp(-eps log q)
    Interval lq = Interval::log_mpz(Integer(q), prec);
    Interval e = Interval::from_mpq(eps_, prec);
    Interval v = (-(e * lq)).exp();
    return interval_to_rational(v);
  }
  // LogPower: 1/(q^b (log q)^a)
  if (q == 1) throw std::domain_error("psi: logpower undefined at q = 1");
  Interval lq = Interval::log_mpz(Integer(q), prec);
  Interval den = lq.pow_mpz(Integer(log_a_));
  Integer qb;
  mpz_ui_pow_ui(qb.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(pow_b_));
  den = den.mul_mpz(qb);
  Interval v = Interval::point_long(1, prec) / den;
  return interval_to_rational(v);
}

double ApproximationFunction::approx_at(long q) const {
  auto [lo, hi] = bounds_at(q);
  return (to_double(lo) + to_double(hi)) / 2;
}

std::string ApproximationFunction::str() const {
  switch (family_) {
    case Family::Power:
      return "power:" + to_string(eps_);
    case Family::LogPower:
      return "logpower:" + std::to_string(log_a_) + "," + std::to_string(pow_b_);
    case Family::Constant:
      return "const:" + to_string(const_c_);
    case Family::Table: {
      std::string s = "table:";
      bool first = true;
      for (const auto& [q, v] : table_) {
        if (!first) s += ",";
        s += std::to_string(q) + "=" + to_string(v);
        first = false;
      }
      return s;
    }
  }
  return "?";
}

ApproximationFunction ApproximationFunction::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("psi: expected '<family>:<params>'");
  std::string fam = text.substr(0, colon);
  std::string args = text.substr(colon + 1);
  if (fam == "power") return power(rational_from_string(args));
  if (fam == "const") return constant(rational_from_string(args));
  if (fam == "logpower") {
    auto comma = args.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("psi: logpower:a,b");
    return log_power(std::stol(args.substr(0, comma)), std::stol(args.substr(comma + 1)));
  }
  if (fam == "table") {
    std::map<long, Rational> vals;
    std::stringstream ss(args);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("psi: table:q=v,...");
      vals[std::stol(item.substr(0, eq))] = rational_from_string(item.substr(eq + 1));
    }
    return table(std::move(vals));
  }
  throw std::invalid_argument("psi: unknown family '" + fam + "'");
}

}  // namespace effroth
