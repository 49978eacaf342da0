#include "effroth/intervalset.hpp"

#include <algorithm>
#include <stdexcept>

namespace effroth {

RationalIntervalSet RationalIntervalSet::full() {
  RationalIntervalSet s;
  s.comps_.push_back({Rational(0), Rational(1)});
  return s;
}

RationalIntervalSet RationalIntervalSet::from_components(std::vector<Component> raw) {
  for (auto& c : raw) {
    if (c.lo > c.hi) throw std::invalid_argument("interval set: lo > hi");
    if (c.lo < 0) c.lo = 0;
    if (c.hi > 1) c.hi = 1;
    if (c.lo > 1 || c.hi < 0) throw std::invalid_argument("interval set: outside [0,1]");
  }
  std::sort(raw.begin(), raw.end(),
            [](const Component& a, const Component& b) { return a.lo < b.lo; });
  RationalIntervalSet s;
  for (auto& c : raw) {
    if (!s.comps_.empty() && c.lo <= s.comps_.back().hi) {
      if (c.hi > s.comps_.back().hi) s.comps_.back().hi = c.hi;
    } else {
      s.comps_.push_back(std::move(c));
    }
  }
  return s;
}

Rational RationalIntervalSet::measure() const {
  Rational m = 0;
  for (const auto& c : comps_) m += c.hi - c.lo;
  return m;
}

bool RationalIntervalSet::contains(const Rational& x) const {
  // Binary search on component starts.
  size_t lo = 0, hi = comps_.size();
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    if (comps_[mid].lo <= x)
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo > 0 && x <= comps_[lo - 1].hi;
}

RationalIntervalSet RationalIntervalSet::complement_closure() const {
  RationalIntervalSet out;
  Rational cursor(0);
  for (const auto& c : comps_) {
    if (c.lo == c.hi) continue;  // point components vanish under closure
    if (c.lo > cursor) out.comps_.push_back({cursor, c.lo});
    if (c.hi > cursor) cursor = c.hi;
  }
  if (cursor < 1) out.comps_.push_back({cursor, Rational(1)});
  return out;
}

Rational RationalIntervalSet::len_star() const {
  if (comps_.empty()) return Rational(0);
  Rational m = comps_[0].length();
  for (const auto& c : comps_)
    if (c.length() < m) m = c.length();
  return m;
}

RationalIntervalSet RationalIntervalSet::union_with(const RationalIntervalSet& o) const {
  std::vector<Component> all = comps_;
  all.insert(all.end(), o.comps_.begin(), o.comps_.end());
  return from_components(std::move(all));
}

namespace {

Rational clamp01(const Rational& x) {
  if (x < 0) return Rational(0);
  if (x > 1) return Rational(1);
  return x;
}

Rational radius_at(const ApproximationFunction& psi, long q, Rounding rounding) {
  if (rounding == Rounding::Exact) {
    if (!psi.exact())
      throw std::invalid_argument("build_J: exact rounding requires an exact psi");
    return psi.exact_at(q) / q;
  }
  auto [lo, hi] = psi.bounds_at(q);
  return (rounding == Rounding::Inner ? lo : hi) / q;
}

}  // namespace

RationalIntervalSet build_J(const ApproximationFunction& psi, long q1, long q2,
                            Rounding rounding) {
  if (!(1 <= q1 && q1 < q2)) throw std::invalid_argument("build_J: need 1 <= Q1 < Q2");
  std::vector<RationalIntervalSet::Component> comps;
  for (long q = q1; q < q2; ++q) {
    Rational r = radius_at(psi, q, rounding);
    for (long p = 0; p <= q; ++p) {
      Rational center(p, q);
      center.canonicalize();
      comps.push_back({clamp01(center - r), clamp01(center + r)});
    }
  }
  return RationalIntervalSet::from_components(std::move(comps));
}

Rational theta(const ApproximationFunction& psi, long q1, long q2) {
  if (!(1 <= q1 && q1 < q2)) throw std::invalid_argument("theta: need 1 <= Q1 < Q2");
  if (!psi.exact()) throw std::invalid_argument("theta: exact psi required");
  Rational best;
  bool have = false;
  for (long q = q1; q < q2; ++q) {
    Rational v = 2 * psi.exact_at(q) / q;
    if (!have || v < best) {
      best = v;
      have = true;
    }
  }
  return best;
}

std::pair<Rational, Rational> theta_bounds(const ApproximationFunction& psi, long q1, long q2) {
  if (!(1 <= q1 && q1 < q2)) throw std::invalid_argument("theta: need 1 <= Q1 < Q2");
  Rational blo, bhi;
  bool have = false;
  for (long q = q1; q < q2; ++q) {
    auto [lo, hi] = psi.bounds_at(q);
    Rational vlo = 2 * lo / q, vhi = 2 * hi / q;
    if (!have) {
      blo = vlo;
      bhi = vhi;
      have = true;
    } else {
      if (vlo < blo) blo = vlo;
      if (vhi < bhi) bhi = vhi;
    }
  }
  return {blo, bhi};
}

Rational sigma_sum(const ApproximationFunction& psi, long q1, long q2) {
  if (!(1 <= q1 && q1 < q2)) throw std::invalid_argument("sigma: need 1 <= Q1 < Q2");
  if (!psi.exact()) throw std::invalid_argument("sigma: exact psi required");
  Rational s = 0;
  for (long q = q1; q < q2; ++q) s += 2 * psi.exact_at(q);
  return s;
}

std::pair<Rational, Rational> sigma_bounds(const ApproximationFunction& psi, long q1, long q2) {
  if (!(1 <= q1 && q1 < q2)) throw std::invalid_argument("sigma: need 1 <= Q1 < Q2");
  Rational slo = 0, shi = 0;
  for (long q = q1; q < q2; ++q) {
    auto [lo, hi] = psi.bounds_at(q);
    slo += 2 * lo;
    shi += 2 * hi;
  }
  return {slo, shi};
}

SieveReport sieve_check(const ApproximationFunction& psi, long q1, long q2) {
  SieveReport rep;
  rep.sigma = sigma_sum(psi, q1, q2);
  rep.measure = build_J(psi, q1, q2, Rounding::Exact).measure();
  rep.lower_holds = rep.sigma - 25 * rep.sigma * rep.sigma <= rep.measure;
  rep.upper_holds = rep.measure <= rep.sigma;
  return rep;
}

}  // namespace effroth
