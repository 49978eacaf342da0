#pragma once

#include <utility>
#include <vector>

#include "effroth/approximation.hpp"
#include "effroth/rational.hpp"

namespace effroth {

struct FareyFraction {
  long p = 0;
  long q = 1;  // reduced, 0 <= p <= q, gcd(p,q) = 1
  Rational value() const {
    Rational r(p, q);
    r.canonicalize();
    return r;
  }
  bool operator==(const FareyFraction&) const = default;
};

// Farey sequence of the given order, ascending, generated by the
// denominator recursion q_k = floor((order + q_{k-2})/q_{k-1}) q_{k-1} - q_{k-2}
// seeded with 0/1, 1/order.
std::vector<FareyFraction> farey(long order);

// Euler totient sum: expected length of farey(order) minus one.
long totient_sum(long order);

// Modified approximating radius at a reduced center: max over multiples
// s of f.q with s <= Q2-1 of psi(s)/s. Reduces to psi(q)/q for
// nonincreasing psi. Exact psi only.
Rational tau(const FareyFraction& f, const ApproximationFunction& psi, long q2);

// len* of the closure of [0,1] minus J_psi(Q1,Q2), evaluated from the Farey
// enumeration and per-center radii; agrees exactly with
// complement_closure(build_J(psi,Q1,Q2)).len_star() for exact psi.
Rational len_star_farey(const ApproximationFunction& psi, long q1, long q2);

struct LenStarBounds {
  Rational lo, hi;
  bool component_definite = false;  // some complement component certainly exists
};

// Sound enclosure of len* for non-exact psi (directed radii, fixed-point
// scans). Requires psi(q) bounds strictly positive or exactly zero per q.
LenStarBounds len_star_farey_bounds(const ApproximationFunction& psi, long q1, long q2);

}  // namespace effroth
