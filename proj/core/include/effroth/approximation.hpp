#pragma once

#include <map>
#include <string>
#include <utility>

#include "effroth/rational.hpp"

namespace effroth {

// Approximation function psi(q) >= 0 over integer q >= 1. Power and Constant
// (and Table) evaluate to exact rationals; LogPower and fractional powers only
// admit directed rational bounds.
class ApproximationFunction {
 public:
  enum class Family { Power, LogPower, Constant, Table };

  // q^(-eps), eps >= 0; exact iff eps is an integer.
  static ApproximationFunction power(const Rational& eps);
  // 1/(q^b (log q)^a), a >= 1, b >= 0; undefined at q = 1.
  static ApproximationFunction log_power(long a, long b);
  static ApproximationFunction constant(const Rational& c);
  // Explicit values; zero outside the table. The nonincreasing flag is set
  // when the table (padded with its implicit zero tail) is nonincreasing.
  static ApproximationFunction table(std::map<long, Rational> values);

  Family family() const { return family_; }
  bool exact() const;
  bool monotone_nonincreasing() const { return monotone_; }

  // Exact value at q (throws for non-exact families).
  Rational exact_at(long q) const;
  // Directed rational bounds lo <= psi(q) <= hi.
  std::pair<Rational, Rational> bounds_at(long q) const;
  double approx_at(long q) const;

  std::string str() const;
  // Parses the CLI syntax: "power:3", "logpower:2,1", "const:1/100",
  // "table:1=1/2,2=1/3".
  static ApproximationFunction parse(const std::string& text);

 private:
  ApproximationFunction() = default;
  Family family_ = Family::Constant;
  Rational eps_;                  // Power
  long log_a_ = 0, pow_b_ = 0;    // LogPower
  Rational const_c_;              // Constant
  std::map<long, Rational> table_;
  bool monotone_ = false;
};

}  // namespace effroth
