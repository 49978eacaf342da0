#include "effroth/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace effroth {

namespace {

void strip_leading_zeros(std::vector<Integer>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  strip_leading_zeros(coeffs_);
}

IntPolynomial IntPolynomial::from_longs(std::initializer_list<long> a) {
  std::vector<Integer> c;
  c.reserve(a.size());
  for (long x : a) c.emplace_back(x);
  return IntPolynomial(std::move(c));
}

Integer IntPolynomial::height() const {
  Integer h = 0;
  for (const auto& a : coeffs_) {
    Integer v = abs(a);
    if (v > h) h = v;
  }
  return h;
}

Integer IntPolynomial::content() const { return effroth::content(*this); }

Integer content(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("content: zero polynomial");
  Integer g = 0;
  for (const auto& a : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

bool IntPolynomial::is_primitive_normalized() const {
  return !is_zero() && leading() > 0 && content() == 1;
}

IntPolynomial IntPolynomial::primitive_normalized() const {
  if (is_zero()) throw std::invalid_argument("primitive_normalized: zero polynomial");
  Integer c = content();
  if (leading() < 0) c = -c;
  std::vector<Integer> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] / c;
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::derivative() const {
  if (degree() <= 0) return IntPolynomial();
  std::vector<Integer> out(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<long>(k);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::negated_argument() const {
  std::vector<Integer> out = coeffs_;
  for (size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::shifted_argument(const Integer& n) const {
  // Taylor shift: coefficients of p(x + t) with t = -n.
  if (is_zero()) return IntPolynomial();
  std::vector<Integer> c = coeffs_;
  const int d = static_cast<int>(c.size()) - 1;
  Integer t = -n;
  for (int i = 0; i < d; ++i)
    for (int k = d - 1; k >= i; --k) c[k] += t * c[k + 1];
  return IntPolynomial(std::move(c));
}

Rational IntPolynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + Rational(coeffs_[k]);
  return acc;
}

int IntPolynomial::sign_at(const Rational& x) const {
  if (is_zero()) return 0;
  // sign of v^d p(u/v) = sum a_k u^k v^(d-k), an exact integer (v > 0).
  const Integer& u = x.get_num();
  const Integer& v = x.get_den();
  Integer acc = coeffs_.back();
  Integer vpow = 1;
  for (size_t k = coeffs_.size() - 1; k-- > 0;) {
    vpow *= v;
    acc = acc * u + coeffs_[k] * vpow;
  }
  return sgn(acc);
}

double IntPolynomial::eval_double(double x) const {
  double acc = 0;
  for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k].get_d();
  return acc;
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] == 0) continue;
    Integer a = coeffs_[k];
    if (!s.empty())
      s += (a > 0 ? "+" : "-");
    else if (a < 0)
      s += "-";
    Integer av = abs(a);
    if (k == 0 || av != 1) s += av.get_str();
    if (k >= 1) s += "x";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<Integer> out(a.coeffs().size() + b.coeffs().size() - 1, Integer(0));
  for (size_t i = 0; i < a.coeffs().size(); ++i)
    for (size_t j = 0; j < b.coeffs().size(); ++j) out[i + j] += a.coeff(i) * b.coeff(j);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> out(std::max(a.coeffs().size(), b.coeffs().size()), Integer(0));
  for (size_t i = 0; i < a.coeffs().size(); ++i) out[i] += a.coeff(i);
  for (size_t i = 0; i < b.coeffs().size(); ++i) out[i] -= b.coeff(i);
  return IntPolynomial(std::move(out));
}

namespace {

// Pseudo-remainder of a by b carrying the sign of the exact rational
// remainder: lc(b)^e a = q b + r after e reduction steps, so the sign is
// corrected when lc(b) < 0 and e is odd. Sturm sign sequences stay valid.
IntPolynomial signed_prem(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const Integer& lb = b.leading();
  long steps = 0;
  strip_leading_zeros(r);
  while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
    int dr = static_cast<int>(r.size()) - 1;
    Integer top = r.back();
    for (auto& c : r) c *= lb;
    for (int i = 0; i <= db; ++i) r[dr - db + i] -= top * bc[i];
    strip_leading_zeros(r);
    ++steps;
  }
  if (lb < 0 && steps % 2 == 1)
    for (auto& c : r) c = -c;
  return IntPolynomial(std::move(r));
}

}  // namespace

bool divides_exactly(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("divides_exactly: zero divisor");
  if (a.is_zero()) return true;
  if (a.degree() < b.degree()) return false;
  std::vector<Rational> r(a.coeffs().size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = Rational(a.coeff(i));
  Rational lb{b.leading()};
  for (int k = a.degree(); k >= b.degree(); --k) {
    if (r[k] == 0) continue;
    Rational q = r[k] / lb;
    for (int i = 0; i <= b.degree(); ++i) r[k - b.degree() + i] -= q * Rational(b.coeff(i));
  }
  for (int i = 0; i < b.degree(); ++i)
    if (r[i] != 0) return false;
  return true;
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial f = a, g = b;
  if (f.is_zero() && g.is_zero()) return f;
  if (f.is_zero()) return g.primitive_normalized();
  if (g.is_zero()) return f.primitive_normalized();
  f = f.primitive_normalized();
  g = g.primitive_normalized();
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    IntPolynomial r = signed_prem(f, g);
    f = g;
    g = r.is_zero() ? r : r.primitive_normalized();
  }
  return f.primitive_normalized();
}

bool is_squarefree(const IntPolynomial& p) {
  if (p.is_zero()) return false;
  if (p.degree() <= 1) return true;
  return poly_gcd(p, p.derivative()).degree() == 0;
}

SturmSequence::SturmSequence(const IntPolynomial& p) {
  seq_.push_back(p);
  IntPolynomial d = p.derivative();
  if (d.is_zero()) return;
  seq_.push_back(d.primitive_normalized());
  while (seq_.back().degree() > 0) {
    IntPolynomial r = signed_prem(seq_[seq_.size() - 2], seq_.back());
    if (r.is_zero()) break;
    // Next element is -r made primitive without disturbing its sign.
    Integer c = content(r);
    std::vector<Integer> out(r.coeffs().size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = -r.coeff(i) / c;
    seq_.push_back(IntPolynomial(std::move(out)));
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  int var = 0, prev = 0;
  for (const auto& s : seq_) {
    int sg = s.sign_at(x);
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++var;
    prev = sg;
  }
  return var;
}

namespace {
int sign_at_inf(const IntPolynomial& p, bool plus) {
  if (p.is_zero()) return 0;
  int s = sgn(p.leading());
  if (!plus && p.degree() % 2 == 1) s = -s;
  return s;
}
}  // namespace

int SturmSequence::variations_at_plus_inf() const {
  int var = 0, prev = 0;
  for (const auto& s : seq_) {
    int sg = sign_at_inf(s, true);
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++var;
    prev = sg;
  }
  return var;
}

int SturmSequence::variations_at_minus_inf() const {
  int var = 0, prev = 0;
  for (const auto& s : seq_) {
    int sg = sign_at_inf(s, false);
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++var;
    prev = sg;
  }
  return var;
}

int SturmSequence::count_roots(const Rational& a, const Rational& b) const {
  if (a >= b) return 0;
  return variations_at(a) - variations_at(b);
}

int SturmSequence::count_all_roots() const {
  return variations_at_minus_inf() - variations_at_plus_inf();
}

namespace {

// All real roots lie strictly inside [-M, M].
Rational cauchy_bound(const IntPolynomial& p) {
  Rational m(p.height(), abs(p.leading()));
  m.canonicalize();
  return m + 1;
}

struct IsolTask {
  Rational a, b;
  int va, vb;
};

}  // namespace

std::vector<RootInterval> real_roots(const IntPolynomial& p, const Rational& max_width) {
  if (p.is_zero()) throw std::invalid_argument("real_roots: zero polynomial");
  if (max_width <= 0) throw std::invalid_argument("real_roots: width must be positive");
  std::vector<RootInterval> out;
  if (p.degree() <= 0) return out;
  SturmSequence sturm(p);

  Rational bound = cauchy_bound(p) + 1;
  std::vector<IsolTask> stack;
  stack.push_back({-bound, bound, sturm.variations_at(-bound), sturm.variations_at(bound)});

  while (!stack.empty()) {
    IsolTask t = stack.back();
    stack.pop_back();
    int count = t.va - t.vb;
    if (count <= 0) continue;
    if (count == 1) {
      Rational a = t.a, b = t.b;
      int va = t.va;
      bool exact = false;
      while (b - a > max_width) {
        Rational mid = (a + b) / 2;
        if (p.sign_at(mid) == 0) {
          out.push_back(RootInterval{mid, mid, mid});
          exact = true;
          break;
        }
        int vm = sturm.variations_at(mid);
        if (va - vm == 1) {
          b = mid;
        } else {
          a = mid;
          va = vm;
        }
      }
      if (!exact) out.push_back(RootInterval{a, b, std::nullopt});
      continue;
    }
    Rational mid = (t.a + t.b) / 2;
    if (p.sign_at(mid) == 0) {
      out.push_back(RootInterval{mid, mid, mid});
      // Carve out a symmetric neighbourhood holding only this root.
      Rational eps = (t.b - t.a) / 4;
      while (true) {
        Rational lo = mid - eps, hi = mid + eps;
        if (p.sign_at(lo) != 0 && p.sign_at(hi) != 0) {
          int vlo = sturm.variations_at(lo), vhi = sturm.variations_at(hi);
          if (vlo - vhi == 1) {
            stack.push_back({t.a, lo, t.va, vlo});
            stack.push_back({hi, t.b, vhi, t.vb});
            break;
          }
        }
        eps /= 2;
      }
      continue;
    }
    int vm = sturm.variations_at(mid);
    stack.push_back({t.a, mid, t.va, vm});
    stack.push_back({mid, t.b, vm, t.vb});
  }

  std::sort(out.begin(), out.end(),
            [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });

  // Adjacent intervals may touch at a bisection point; shrink until disjoint.
  for (size_t i = 0; i + 1 < out.size(); ++i) {
    while (out[i].hi >= out[i + 1].lo) {
      RootInterval& r = out[i].is_exact() ? out[i + 1] : out[i];
      Rational mid = (r.lo + r.hi) / 2;
      if (p.sign_at(mid) == 0) {
        r = RootInterval{mid, mid, mid};
        break;
      }
      if (p.sign_at(r.lo) * p.sign_at(mid) < 0)
        r.hi = mid;
      else
        r.lo = mid;
    }
  }
  return out;
}

namespace {

std::vector<Integer> positive_divisors(const Integer& n) {
  std::vector<Integer> divs;
  Integer a = abs(n);
  if (a == 0) return divs;
  for (Integer i = 1; i * i <= a; ++i) {
    if (a % i == 0) {
      divs.push_back(i);
      Integer j = a / i;
      if (j != i) divs.push_back(j);
    }
  }
  return divs;
}

bool has_rational_root(const IntPolynomial& p) {
  const Integer& a0 = p.coeff(0);
  if (a0 == 0) return true;
  auto nums = positive_divisors(a0);
  auto dens = positive_divisors(p.leading());
  for (const auto& u : nums)
    for (const auto& v : dens) {
      Rational r = make_rational(u, v);
      if (p.sign_at(r) == 0 || p.sign_at(-r) == 0) return true;
    }
  return false;
}

// Coefficients of any integer factor of degree m are bounded by
// binom(m, m/2) (||p||_2 + |lc(p)|).
Integer factor_coeff_bound(const IntPolynomial& p, int m) {
  Integer sq = 0;
  for (const auto& a : p.coeffs()) sq += a * a;
  Integer two_norm_ceil = sqrt(sq) + 1;
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), m, m / 2);
  return binom * (two_norm_ceil + abs(p.leading()));
}

bool has_factor_of_degree(const IntPolynomial& p, int m) {
  if (p.coeff(0) == 0) return true;
  Integer bound = factor_coeff_bound(p, m);
  auto lead_divs = positive_divisors(p.leading());
  auto const_divs = positive_divisors(p.coeff(0));

  std::vector<Integer> mid(m - 1);
  for (const auto& lc : lead_divs) {
    for (const auto& c0 : const_divs) {
      for (int s = 0; s < 2; ++s) {
        Integer cst = (s == 0) ? c0 : Integer(-c0);
        std::fill(mid.begin(), mid.end(), -bound);
        while (true) {
          std::vector<Integer> g(m + 1);
          g[0] = cst;
          for (int i = 1; i < m; ++i) g[i] = mid[i - 1];
          g[m] = lc;
          if (divides_exactly(p, IntPolynomial(std::move(g)))) return true;
          int i = 0;
          for (; i < m - 1; ++i) {
            if (mid[i] < bound) {
              mid[i] += 1;
              break;
            }
            mid[i] = -bound;
          }
          if (i == m - 1) break;
        }
      }
    }
  }
  return false;
}

}  // namespace

bool is_irreducible(const IntPolynomial& p) {
  if (p.degree() < 1) throw std::invalid_argument("is_irreducible: degree must be >= 1");
  if (!p.is_primitive_normalized())
    throw std::invalid_argument("is_irreducible: input must be primitive normalized");
  if (p.degree() == 1) return true;
  if (has_rational_root(p)) return false;
  if (p.degree() <= 3) return true;
  for (int m = 2; m <= p.degree() / 2; ++m)
    if (has_factor_of_degree(p, m)) return false;
  return true;
}

}  // namespace effroth
