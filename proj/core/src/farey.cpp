#include "effroth/farey.hpp"

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace effroth {

std::vector<FareyFraction> farey(long order) {
  if (order < 1) throw std::invalid_argument("farey: order must be >= 1");
  std::vector<FareyFraction> out;
  out.push_back({0, 1});
  if (order == 1) {
    out.push_back({1, 1});
    return out;
  }
  long p0 = 0, q0 = 1, p1 = 1, q1 = order;
  out.push_back({p1, q1});
  while (!(p1 == 1 && q1 == 1)) {
    long k = (order + q0) / q1;
    long q2 = k * q1 - q0;
    long p2 = k * p1 - p0;
    out.push_back({p2, q2});
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
  return out;
}

long totient_sum(long order) {
  // Sieve phi(1..order) and sum.
  std::vector<long> phi(order + 1);
  for (long i = 0; i <= order; ++i) phi[i] = i;
  for (long i = 2; i <= order; ++i) {
    if (phi[i] != i) continue;  // not prime
    for (long j = i; j <= order; j += i) phi[j] -= phi[j] / i;
  }
  long s = 0;
  for (long i = 1; i <= order; ++i) s += phi[i];
  return s;
}

namespace {

// Per-center eligible radius: max over multiples s of q with
// lo_q <= s <= hi_q of psi(s)/s; nullopt when no eligible s or the max is 0
// (a radius-0 ball is a point and vanishes under complement closure).
std::optional<Rational> center_radius(const ApproximationFunction& psi, long q, long lo_q,
                                      long hi_q) {
  std::optional<Rational> best;
  long s0 = ((lo_q + q - 1) / q) * q;
  if (s0 < q) s0 = q;
  for (long s = s0; s <= hi_q; s += q) {
    Rational v = psi.exact_at(s) / s;
    if (!best || v > *best) best = v;
  }
  if (best && *best > 0) return best;
  return std::nullopt;
}

}  // namespace

Rational tau(const FareyFraction& f, const ApproximationFunction& psi, long q2) {
  if (f.q >= q2) throw std::invalid_argument("tau: center denominator must be < Q2");
  auto r = center_radius(psi, f.q, 1, q2 - 1);
  return r ? *r : Rational(0);
}

Rational len_star_farey(const ApproximationFunction& psi, long q1, long q2) {
  if (!(1 <= q1 && q1 < q2)) throw std::invalid_argument("len_star_farey: need 1 <= Q1 < Q2");
  if (!psi.exact()) throw std::invalid_argument("len_star_farey: exact psi required");
  const long order = q2 - 1;
  auto fr = farey(order);

  std::vector<std::optional<Rational>> rad(order + 1);
  for (long q = 1; q <= order; ++q) rad[q] = center_radius(psi, q, q1, order);

  std::vector<size_t> anchors;
  for (size_t i = 0; i < fr.size(); ++i)
    if (rad[fr[i].q]) anchors.push_back(i);
  if (anchors.empty()) return Rational(1);  // no balls: complement is [0,1]

  // Suffix minima of left edges: everything covered left of L[k] near anchor k
  // comes from anchors >= k.
  std::vector<Rational> left_edge_min(anchors.size());
  for (size_t k = anchors.size(); k-- > 0;) {
    const FareyFraction& f = fr[anchors[k]];
    Rational e = f.value() - *rad[f.q];
    left_edge_min[k] = (k + 1 < anchors.size() && left_edge_min[k + 1] < e)
                           ? left_edge_min[k + 1]
                           : e;
  }

  Rational best(-1);
  auto consider = [&](const Rational& len) {
    if (len > 0 && (best < 0 || len < best)) best = len;
  };

  consider(left_edge_min[0]);  // [0, first coverage]
  const FareyFraction& f0 = fr[anchors[0]];
  Rational right_reach = f0.value() + *rad[f0.q];
  for (size_t k = 0; k + 1 < anchors.size(); ++k) {
    consider(left_edge_min[k + 1] - right_reach);
    const FareyFraction& fn = fr[anchors[k + 1]];
    Rational e = fn.value() + *rad[fn.q];
    if (e > right_reach) right_reach = e;
  }
  consider(Rational(1) - right_reach);  // [last coverage, 1]

  return best > 0 ? best : Rational(0);
}

namespace {

constexpr int kFixBits = 50;

// Directed fixed-point at scale 2^-kFixBits; +-1 ulp of slack absorbs the
// floor division.
int64_t fix_floor(const Rational& x) {
  Integer num = x.get_num() << kFixBits;
  Integer f = floor_div(num, x.get_den());
  if (!f.fits_slong_p()) throw std::overflow_error("len* fixed point overflow");
  return f.get_si();
}

int64_t fix_ceil(const Rational& x) { return -fix_floor(-x); }

Rational fix_to_rational(int64_t v) {
  return make_rational(Integer(v), Integer(1) << kFixBits);
}

}  // namespace

LenStarBounds len_star_farey_bounds(const ApproximationFunction& psi, long q1, long q2) {
  if (!(1 <= q1 && q1 < q2))
    throw std::invalid_argument("len_star_farey_bounds: need 1 <= Q1 < Q2");
  const long order = q2 - 1;

  // Directed per-q radius bounds in fixed point.
  std::vector<int64_t> rad_lo(order + 1, -1), rad_hi(order + 1, -1);
  for (long q = 1; q <= order; ++q) {
    Rational best_lo(-1), best_hi(-1);
    long s0 = ((q1 + q - 1) / q) * q;
    if (s0 < q) s0 = q;
    for (long s = s0; s <= order; s += q) {
      auto [blo, bhi] = psi.bounds_at(s);
      Rational vlo = blo / s, vhi = bhi / s;
      if (vlo > best_lo) best_lo = vlo;
      if (vhi > best_hi) best_hi = vhi;
    }
    if (best_hi <= 0) continue;  // no ball
    if (best_lo <= 0)
      throw std::invalid_argument("len_star_farey_bounds: radius sign must be certain");
    rad_lo[q] = fix_floor(best_lo);
    rad_hi[q] = fix_ceil(best_hi);
  }

  // Suffix minima of left edges (lo/hi directed) over the mirrored stream:
  // the mirror p/q -> (q-p)/q of an ascending Farey walk enumerates
  // descending order with identical radii.
  long count = totient_sum(order) + 1;
  std::vector<int64_t> suffix_lo(count), suffix_hi(count);
  std::vector<int32_t> frac_p(count), frac_q(count);
  {
    auto seq = farey(order);
    if (static_cast<long>(seq.size()) != count)
      throw std::logic_error("farey: length disagrees with totient sum");
    for (long i = 0; i < count; ++i) {
      frac_p[i] = static_cast<int32_t>(seq[i].p);
      frac_q[i] = static_cast<int32_t>(seq[i].q);
    }
  }
  // Center in fixed point: p 2^kFixBits / q, directed.
  auto center_fix = [&](long i, bool up) {
    __int128 num = static_cast<__int128>(frac_p[i]) << kFixBits;
    int64_t d = frac_q[i];
    int64_t fl = static_cast<int64_t>(num / d);
    if (static_cast<__int128>(fl) * d != num && up) ++fl;
    return fl;
  };

  bool have = false;
  int64_t run_lo = INT64_MAX, run_hi = INT64_MAX;
  for (long i = count; i-- > 0;) {
    if (rad_hi[frac_q[i]] >= 0) {
      int64_t elo = center_fix(i, false) - rad_hi[frac_q[i]];
      int64_t ehi = center_fix(i, true) - rad_lo[frac_q[i]];
      if (elo < run_lo) run_lo = elo;
      if (ehi < run_hi) run_hi = ehi;
      have = true;
    }
    suffix_lo[i] = run_lo;
    suffix_hi[i] = run_hi;
  }
  if (!have) return {Rational(1), Rational(1), true};  // no balls at all

  // Forward scan: prefix maxima of right edges; collect per-gap bounds.
  const int64_t one_fix = int64_t(1) << kFixBits;
  bool any_definite = false, any_possible = false;
  int64_t min_lo_possible = INT64_MAX;  // lower bounds among possible gaps
  int64_t min_hi_definite = INT64_MAX;  // upper bounds among definite gaps
  int64_t max_hi_possible = INT64_MIN;
  auto consider = [&](int64_t glo, int64_t ghi) {
    // one candidate complement component with length in [glo, ghi]
    if (ghi <= 0) return;  // certainly covered
    any_possible = true;
    int64_t l = glo > 0 ? glo : 0;
    if (l < min_lo_possible) min_lo_possible = l;
    if (glo > 0) {
      any_definite = true;
      if (ghi < min_hi_definite) min_hi_definite = ghi;
    }
    if (ghi > max_hi_possible) max_hi_possible = ghi;
  };

  long first = 0;
  while (first < count && rad_hi[frac_q[first]] < 0) ++first;
  consider(suffix_lo[first], suffix_hi[first]);  // [0, first coverage]
  bool have_reach = false;
  int64_t reach_lo = 0, reach_hi = 0;
  for (long i = first; i < count; ++i) {
    if (rad_hi[frac_q[i]] < 0) continue;
    if (have_reach) consider(suffix_lo[i] - reach_hi, suffix_hi[i] - reach_lo);
    int64_t rlo = center_fix(i, false) + rad_lo[frac_q[i]];
    int64_t rhi = center_fix(i, true) + rad_hi[frac_q[i]];
    if (!have_reach || rlo > reach_lo) reach_lo = rlo;
    if (!have_reach || rhi > reach_hi) reach_hi = rhi;
    have_reach = true;
  }
  consider(one_fix - reach_hi, one_fix - reach_lo);  // [last coverage, 1]

  LenStarBounds out;
  if (!any_possible) {
    out.lo = out.hi = Rational(0);
    out.component_definite = false;
    return out;
  }
  out.lo = fix_to_rational(min_lo_possible);
  out.component_definite = any_definite;
  out.hi = fix_to_rational(any_definite ? min_hi_definite : max_hi_possible);
  return out;
}

}  // namespace effroth
