#include "thue/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace thue {

BigInt sqrt_disc(const BigInt& m) { return m * m + 3 * m + 9; }

BigInt eval_form(const BigInt& m, const BigInt& x, const BigInt& y) {
  // Horner in x: ((x - m y) x - (m+3) y^2) x - y^3
  BigInt acc = x - m * y;
  acc = acc * x - (m + 3) * y * y;
  return acc * x - y * y * y;
}

BigInt cross_term(const BigInt& x, const BigInt& y) { return x * y * (x + y); }

bool is_trivial(const BigInt& x, const BigInt& y) { return x == 0 || y == 0 || x + y == 0; }

Point sigma(const Point& p) { return {p.y, -p.x - p.y}; }

OrbitClass::OrbitClass(Point p) {
  members_[0] = std::move(p);
  members_[1] = sigma(members_[0]);
  members_[2] = sigma(members_[1]);
  canonical_ = static_cast<std::size_t>(std::min_element(members_.begin(), members_.end()) - members_.begin());
}

const Point& OrbitClass::canonical() const { return members_[canonical_]; }

std::array<Point, 3> OrbitClass::display_order() const {
  std::size_t start = canonical_;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& p = members_[i];
    if (sign(p.x) != 0 && sign(p.x) == sign(p.y)) {
      start = i;
      break;
    }
  }
  return {members_[start], members_[(start + 1) % 3], members_[(start + 2) % 3]};
}

bool OrbitClass::contains(const Point& p) const {
  return std::find(members_.begin(), members_.end(), p) != members_.end();
}

OrbitClass orbit(const BigInt& x, const BigInt& y) { return OrbitClass({x, y}); }

FamilyIndex normalize_index(const BigInt& m) {
  if (m >= -1) return {m, false};
  return {-m - 3, true};
}

Point swap_negate(const Point& p) { return {-p.y, -p.x}; }

bool Solution::primitive() const { return gcd(point.x, point.y) == 1; }

Solution make_solution(const BigInt& m, const BigInt& x, const BigInt& y) {
  return {{x, y}, eval_form(m, x, y)};
}

CubicPoly::CubicPoly(Rational c3, Rational c2, Rational c1, Rational c0)
    : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {
  if (c_[3] == 0) throw std::invalid_argument("cubic with zero leading coefficient");
  for (auto& c : c_) c.canonicalize();
}

Rational CubicPoly::eval(const Rational& x) const {
  Rational acc = c_[3];
  for (int k = 2; k >= 0; --k) acc = acc * x + c_[k];
  return acc;
}

Rational CubicPoly::derivative_at(const Rational& x) const {
  return (3 * c_[3] * x + 2 * c_[2]) * x + c_[1];
}

Rational CubicPoly::discriminant() const {
  const Rational& a = c_[3];
  const Rational& b = c_[2];
  const Rational& c = c_[1];
  const Rational& d = c_[0];
  Rational disc = 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c - 27 * a * a * d * d;
  disc.canonicalize();
  return disc;
}

bool CubicPoly::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

CubicPoly poly_fm(const Rational& t) { return CubicPoly(1, -t, -(t + 3), -1); }

CubicPoly poly_gm(const BigInt& m) {
  return CubicPoly(1, 3, Rational(-(m * m + 3 * m + 6)), 1);
}

namespace {

BigInt form_p(const BigInt& m, const BigInt& x, const BigInt& y) {
  return 2 * x * x - 2 * m * x * y - x * y - m * y * y - 5 * y * y;
}

BigInt form_q(const BigInt& d, const BigInt& x, const BigInt& y) { return -d * y * (2 * x + y); }

}  // namespace

IdentityWitness identity_witness(const BigInt& m, const BigInt& x, const BigInt& y) {
  const BigInt d = sqrt_disc(m);
  const BigInt h = d * cross_term(x, y);
  const BigInt f = eval_form(m, x, y);
  const BigInt u = -x - y;

  BigInt y5, x5;
  mpz_pow_ui(y5.get_mpz_t(), y.get_mpz_t(), 5);
  mpz_pow_ui(x5.get_mpz_t(), x.get_mpz_t(), 5);

  IdentityWitness w;
  w.lhs_y5 = h * form_p(m, x, y) + f * form_q(d, x, y);
  w.rhs_y5 = d * y5;
  w.lhs_x5 = h * form_p(m, u, x) + f * form_q(d, u, x);
  w.rhs_x5 = d * x5;
  return w;
}

}  // namespace thue
