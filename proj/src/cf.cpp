#include "thue/cf.hpp"

#include <algorithm>

namespace thue {

BigInt eval(const IntCubic& p, const BigInt& x) {
  BigInt acc = p[3];
  for (int k = 2; k >= 0; --k) acc = acc * x + p[k];
  return acc;
}

int sign_at(const IntCubic& p, const Rational& x) {
  // den^3 * p(num/den) keeps the sign since den > 0.
  const BigInt& n = x.get_num();
  const BigInt& d = x.get_den();
  BigInt acc = p[3];
  BigInt dpow = 1;
  for (int k = 2; k >= 0; --k) {
    dpow *= d;
    acc = acc * n + p[k] * dpow;
  }
  return sign(acc);
}

IntCubic taylor_shift(const IntCubic& p, const BigInt& a) {
  IntCubic q = p;
  for (int i = 0; i < 3; ++i) {
    for (int k = 2; k >= i; --k) q[k] += a * q[k + 1];
  }
  return q;
}

int sign_variations_above_one(const IntCubic& p) {
  const IntCubic q = taylor_shift(p, 1);
  int variations = 0;
  int last = 0;
  for (int k = 3; k >= 0; --k) {
    const int s = sign(q[k]);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

namespace {

using RatPoly = std::vector<Rational>;  // low -> high

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly remainder(RatPoly a, const RatPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

int sign_of(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return sign(acc);
}

int variations_at(const std::vector<RatPoly>& chain, const Rational& x) {
  int count = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sign_of(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

IntCubic integral_coeffs(const CubicPoly& poly) {
  IntCubic p;
  for (std::size_t k = 0; k < 4; ++k) {
    if (poly.coeff(k).get_den() != 1) throw std::invalid_argument("cubic is not integral");
    p[k] = poly.coeff(k).get_num();
  }
  return p;
}

std::vector<BigInt> signed_divisors(const BigInt& n) {
  std::vector<BigInt> out;
  for (auto& d : divisors(factor(abs(n)))) {
    out.push_back(d);
    out.push_back(-d);
  }
  return out;
}

void quadratic_rational_roots(const BigInt& a, const BigInt& b, const BigInt& c, std::vector<Rational>& out) {
  if (a == 0) {
    if (b != 0) out.push_back(make_rational(-c, b));
    return;
  }
  const BigInt disc = b * b - 4 * a * c;
  if (disc < 0) return;
  BigInt root;
  if (!mpz_perfect_square_p(disc.get_mpz_t())) return;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
  out.push_back(make_rational(-b - root, 2 * a));
  out.push_back(make_rational(-b + root, 2 * a));
}

}  // namespace

std::vector<Rational> rational_roots(const CubicPoly& poly) {
  BigInt lcm = 1;
  for (std::size_t k = 0; k < 4; ++k) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), poly.coeff(k).get_den_mpz_t());
  IntCubic p;
  for (std::size_t k = 0; k < 4; ++k) p[k] = Rational(poly.coeff(k) * lcm).get_num();

  std::vector<Rational> roots;
  if (p[0] == 0) {
    roots.push_back(0);
    quadratic_rational_roots(p[3], p[2], p[1], roots);
  } else {
    const auto numerators = signed_divisors(p[0]);
    const auto denominators = divisors(factor(abs(p[3])));
    for (const auto& v : denominators) {
      for (const auto& u : numerators) {
        if (gcd(u, v) != 1) continue;
        const Rational r = make_rational(u, v);
        if (sign_at(p, r) == 0) roots.push_back(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

int count_real_roots(const CubicPoly& poly, const Rational& lo, const Rational& hi) {
  std::vector<RatPoly> chain;
  chain.push_back({poly.coeff(0), poly.coeff(1), poly.coeff(2), poly.coeff(3)});
  chain.push_back({poly.coeff(1), 2 * poly.coeff(2), 3 * poly.coeff(3)});
  while (true) {
    RatPoly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  if (poly.eval(lo) == 0 || poly.eval(hi) == 0) {
    throw std::invalid_argument("count_real_roots: interval endpoint is a root");
  }
  return variations_at(chain, lo) - variations_at(chain, hi);
}

// ---------------------------------------------------------------------------
// IsolatedRoot

IsolatedRoot::IsolatedRoot(CubicPoly poly, Rational lo, Rational hi)
    : poly_(std::move(poly)), lo_(std::move(lo)), hi_(std::move(hi)) {
  lo_.canonicalize();
  hi_.canonicalize();
  if (!poly_.is_integral()) throw std::invalid_argument("IsolatedRoot: polynomial must have integer coefficients");
  if (!(lo_ < hi_)) throw std::invalid_argument("IsolatedRoot: empty bracket");
  for (const auto& r : rational_roots(poly_)) {
    if (lo_ <= r && r <= hi_) throw RationalRootError("rational root " + to_string(r) + " inside bracket");
  }
  const int s_lo = sign(poly_.eval(lo_));
  const int s_hi = sign(poly_.eval(hi_));
  if (s_lo == s_hi) throw std::invalid_argument("IsolatedRoot: no sign change across bracket");
  if (count_real_roots(poly_, lo_, hi_) != 1) {
    throw std::invalid_argument("IsolatedRoot: bracket holds more than one root");
  }
}

int IsolatedRoot::compare(const Rational& v) const {
  if (v <= lo_) return -1;
  if (v >= hi_) return 1;
  const int s = sign(poly_.eval(v));
  if (s == 0) throw RationalRootError("rational root " + to_string(v));
  return s == sign(poly_.eval(lo_)) ? -1 : 1;
}

IsolatedRoot refine(const IsolatedRoot& root, const Rational& max_width) {
  if (max_width <= 0) throw std::invalid_argument("refine: width must be positive");
  Rational lo = root.lo();
  Rational hi = root.hi();
  const int s_lo = sign(root.poly().eval(lo));
  while (hi - lo > max_width) {
    Rational mid = (lo + hi) / 2;
    mid.canonicalize();
    const int s = sign(root.poly().eval(mid));
    if (s == 0) throw RationalRootError("rational root " + to_string(mid));
    (s == s_lo ? lo : hi) = mid;
  }
  return IsolatedRoot(IsolatedRoot::Unchecked{}, root.poly(), lo, hi);
}

namespace {

SeriesBounds series_bounds(const BigInt& m, long c3) {
  if (m == 0) throw std::invalid_argument("series bounds need m != 0");
  const Rational inv = make_rational(1, m);
  const Rational i2 = inv * inv, i3 = i2 * inv, i4 = i3 * inv, i5 = i4 * inv, i6 = i5 * inv;
  Rational head = -inv + 2 * i2 - c3 * i3 - 3 * i4 + 17 * i5;
  SeriesBounds b{head - 28 * i6, head - 27 * i6};
  b.lower.canonicalize();
  b.upper.canonicalize();
  return b;
}

}  // namespace

SeriesBounds theta2_series_bounds(const BigInt& m) { return series_bounds(m, 2); }

SeriesBounds theta2_series_bounds_as_printed(const BigInt& m) { return series_bounds(m, 3); }

IsolatedRoot isolate_theta2(const BigInt& m) {
  if (m < -1) throw std::invalid_argument("isolate_theta2: expected m >= -1");
  const CubicPoly f = poly_fm(Rational(m));
  Rational lo = make_rational(-1, 2);
  Rational hi = 0;
  if (m >= 18) {
    // f_m is positive left of theta2 and negative right of it on (-1/2, 0).
    const SeriesBounds b = theta2_series_bounds(m);
    if (lo < b.lower && b.upper < hi && sign(f.eval(b.lower)) > 0 && sign(f.eval(b.upper)) < 0) {
      lo = b.lower;
      hi = b.upper;
    }
  }
  return IsolatedRoot(f, lo, hi);
}

IsolatedRoot isolate_theta1(const BigInt& m) {
  if (m < -1) throw std::invalid_argument("isolate_theta1: expected m >= -1");
  return IsolatedRoot(poly_fm(Rational(m)), 1, Rational(m + 3));
}

IsolatedRoot isolate_theta3(const BigInt& m) {
  if (m < -1) throw std::invalid_argument("isolate_theta3: expected m >= -1");
  return IsolatedRoot(poly_fm(Rational(m)), -2, -1);
}

// ---------------------------------------------------------------------------
// Continued fractions

CfExpander::CfExpander(const IsolatedRoot& root) : lo_(root.lo()), hi_(root.hi()) {
  poly_ = integral_coeffs(root.poly());
  sign_lo_ = sign_at(poly_, lo_);
}

bool CfExpander::below_root(const BigInt& t) const {
  const Rational tr(t);
  if (tr <= lo_) return true;
  if (hi_ && tr >= *hi_) return false;
  const int s = sign(eval(poly_, t));
  if (s == 0) throw RationalRootError("rational root " + to_string(t) + " during expansion");
  return s == sign_lo_;
}

BigInt CfExpander::next() {
  // floor(beta): largest integer t with t < beta.
  BigInt below = thue::floor(lo_);
  BigInt above;
  if (hi_) {
    above = thue::ceil(*hi_);
  } else {
    BigInt step = 1;
    while (below_root(below + step)) {
      below += step;
      step *= 2;
    }
    above = below + step;
  }
  while (above - below > 1) {
    BigInt mid = floor_div(below + above, 2);
    (below_root(mid) ? below : above) = mid;
  }
  const BigInt a = below;

  // beta in (max(lo, a), min(hi, a+1)); new beta' = 1/(beta - a).
  const Rational left = lo_ > a ? lo_ : Rational(a);
  const Rational right = (hi_ && *hi_ < Rational(a + 1)) ? *hi_ : Rational(a + 1);
  Rational new_lo = 1 / (right - a);
  new_lo.canonicalize();
  std::optional<Rational> new_hi;
  if (left != a) {
    Rational h = 1 / (left - a);
    h.canonicalize();
    new_hi = h;
  }

  // X^3 p(a + 1/X): shift then reverse.
  const IntCubic shifted = taylor_shift(poly_, a);
  IntCubic next_poly{shifted[3], shifted[2], shifted[1], shifted[0]};
  if (next_poly[3] == 0) throw RationalRootError("integer root " + to_string(a) + " during expansion");
  BigInt content = 0;
  for (const auto& c : next_poly) content = gcd(content, c);
  if (sign(next_poly[3]) < 0) content = -content;
  for (auto& c : next_poly) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());

  poly_ = std::move(next_poly);
  lo_ = std::move(new_lo);
  hi_ = std::move(new_hi);
  sign_lo_ = sign_at(poly_, lo_);
  if (sign_lo_ == 0) throw RationalRootError("rational root at bracket end during expansion");
  ++emitted_;
  return a;
}

ContinuedFraction cf_expand(const IsolatedRoot& root, std::size_t k) {
  if (k == 0) throw std::invalid_argument("cf_expand: need at least one term");
  CfExpander expander(root);
  ContinuedFraction cf;
  cf.quotients.reserve(k);
  for (std::size_t i = 0; i < k; ++i) cf.quotients.push_back(expander.next());
  return cf;
}

Convergent ConvergentRecurrence::push(const BigInt& a) {
  BigInt p = a * p_prev_ + p_prev2_;
  BigInt q = a * q_prev_ + q_prev2_;
  p_prev2_ = std::move(p_prev_);
  q_prev2_ = std::move(q_prev_);
  p_prev_ = p;
  q_prev_ = q;
  return {std::move(p), std::move(q), count_++};
}

std::vector<Convergent> convergents(const ContinuedFraction& cf) {
  ConvergentRecurrence rec;
  std::vector<Convergent> out;
  out.reserve(cf.quotients.size());
  for (const auto& a : cf.quotients) out.push_back(rec.push(a));
  return out;
}

namespace {

struct Pattern {
  int residue;
  int minimum;
  // Prefix after [-1; 1, m+1]: the half term, two fixed terms, the
  // (m - shift)/14 term, then fixed terms, then floor((mul*m + add)/6).
  int shift;
  std::vector<int> fixed_tail;
  int mul;
  int add;
  // Replacement for a printed fixed tail that the exact expansion
  // contradicts.
  std::optional<std::vector<int>> corrected_tail = std::nullopt;
};

const std::vector<Pattern>& even_patterns() {
  static const std::vector<Pattern> patterns = {
      {0, 28, 14, {1, 6}, 1, 0},         {2, 156, 2, {}, 49, 72},
      {4, 18, 4, {6, 1}, 1, -4},         {6, 20, 6, {3, 2}, 1, -2},
      {8, 22, 8, {2, 3}, 1, -2},         {10, 24, 10, {1, 1, 2, 1}, 1, -4},
      {12, 68, 12, {1, 2, 1, 1}, 1, -2},
  };
  return patterns;
}

const std::vector<Pattern>& odd_patterns() {
  static const std::vector<Pattern> patterns = {
      {1, 29, 15, {2, 3}, 1, -1},        {3, 31, 17, {1, 1, 2, 1}, 1, -3},
      {5, 33, 19, {1, 2, 1, 1}, 1, -3},  {7, 35, 21, {1, 6}, 1, -1},
      {9, 65, 9, {2, 3}, 49, 73, std::vector<int>{}},        {11, 25, 11, {6, 1}, 1, -5},
      {13, 27, 13, {3, 2}, 1, -3},
  };
  return patterns;
}

const Pattern* find_pattern(const BigInt& m) {
  if (m < 0) return nullptr;
  const int residue = static_cast<int>(BigInt(m % 14).get_si());
  const auto& table = residue % 2 == 0 ? even_patterns() : odd_patterns();
  const auto it = std::find_if(table.begin(), table.end(), [&](const Pattern& p) { return p.residue == residue; });
  if (it == table.end() || m < it->minimum) return nullptr;
  return &*it;
}

std::vector<BigInt> instantiate(const Pattern& pattern, const BigInt& m, const std::vector<int>& tail) {
  std::vector<BigInt> prefix{BigInt(-1), BigInt(1), BigInt(m + 1)};
  if (pattern.residue % 2 == 0) {
    prefix.push_back(m / 2);
    prefix.push_back(1);
    prefix.push_back(3);
  } else {
    prefix.push_back((m + 1) / 2);
    prefix.push_back(3);
    prefix.push_back(1);
  }
  prefix.push_back((m - pattern.shift) / 14);
  for (int t : tail) prefix.push_back(t);
  prefix.push_back(floor_div(pattern.mul * m + pattern.add, 6));
  return prefix;
}

}  // namespace

std::optional<std::vector<BigInt>> residue_pattern(const BigInt& m) {
  const Pattern* p = find_pattern(m);
  if (!p) return std::nullopt;
  return instantiate(*p, m, p->corrected_tail.value_or(p->fixed_tail));
}

std::optional<std::vector<BigInt>> residue_pattern_as_printed(const BigInt& m) {
  const Pattern* p = find_pattern(m);
  if (!p) return std::nullopt;
  return instantiate(*p, m, p->fixed_tail);
}

bool residue_pattern_corrected(const BigInt& m) {
  const Pattern* p = find_pattern(m);
  return p && p->corrected_tail.has_value();
}

std::string format_cf(const ContinuedFraction& cf) {
  std::string out;
  for (std::size_t i = 0; i < cf.quotients.size(); ++i) {
    if (i == 1) out += ';';
    if (i > 1) out += ',';
    out += to_string(cf.quotients[i]);
  }
  return out;
}

}  // namespace thue
