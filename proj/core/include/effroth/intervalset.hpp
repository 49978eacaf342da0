#pragma once

#include <string>
#include <vector>

#include "effroth/approximation.hpp"
#include "effroth/rational.hpp"

namespace effroth {

enum class Rounding { Inner, Outer, Exact };

// Normalized finite union of closed rational-endpoint intervals inside [0,1].
// Overlapping or touching components are merged; degenerate points allowed.
class RationalIntervalSet {
 public:
  struct Component {
    Rational lo, hi;
    Rational length() const { return hi - lo; }
  };

  RationalIntervalSet() = default;
  static RationalIntervalSet empty() { return {}; }
  static RationalIntervalSet full();
  static RationalIntervalSet from_components(std::vector<Component> raw);  // normalizes

  const std::vector<Component>& components() const { return comps_; }
  bool is_empty() const { return comps_.empty(); }
  size_t size() const { return comps_.size(); }

  Rational measure() const;
  bool contains(const Rational& x) const;
  // Closure of [0,1] minus this set (degenerate components vanish under closure).
  RationalIntervalSet complement_closure() const;
  // Minimal component length; 0 for the empty set or any degenerate component.
  Rational len_star() const;
  RationalIntervalSet union_with(const RationalIntervalSet& o) const;

  bool operator==(const RationalIntervalSet& o) const = default;

 private:
  std::vector<Component> comps_;  // sorted, pairwise separated
};

// J_psi(Q1, Q2): union over Q1 <= q < Q2, 0 <= p <= q (non-reduced included)
// of [p/q - psi(q)/q, p/q + psi(q)/q] clipped to [0,1].
RationalIntervalSet build_J(const ApproximationFunction& psi, long q1, long q2,
                            Rounding rounding = Rounding::Exact);

// min over Q1 <= q < Q2 of 2 psi(q)/q; exact psi only.
Rational theta(const ApproximationFunction& psi, long q1, long q2);
std::pair<Rational, Rational> theta_bounds(const ApproximationFunction& psi, long q1, long q2);

// Sum over Q1 <= q < Q2 of the total per-q ball length 2 psi(q); exact psi only.
Rational sigma_sum(const ApproximationFunction& psi, long q1, long q2);
std::pair<Rational, Rational> sigma_bounds(const ApproximationFunction& psi, long q1, long q2);

struct SieveReport {
  Rational sigma;
  Rational measure;
  bool lower_holds = false;  // sigma - 25 sigma^2 <= |J|
  bool upper_holds = false;  // |J| <= sigma
};

// Exact check of the sieve inequalities against measure(build_J).
SieveReport sieve_check(const ApproximationFunction& psi, long q1, long q2);

}  // namespace effroth
