#pragma once

// The cubic form family F_m(X, Y) = X^3 - m X^2 Y - (m+3) X Y^2 - Y^3,
// its C3 symmetry, and the associated one-variable cubics.

#include <array>
#include <optional>

#include "thue/arith.hpp"

namespace thue {

struct Point {
  BigInt x;
  BigInt y;

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

/// m^2 + 3m + 9, the square root of disc(f_m).
BigInt sqrt_disc(const BigInt& m);

BigInt eval_form(const BigInt& m, const BigInt& x, const BigInt& y);

/// x * y * (x + y); zero exactly on trivial points.
BigInt cross_term(const BigInt& x, const BigInt& y);
bool is_trivial(const BigInt& x, const BigInt& y);

/// sigma: (x, y) -> (y, -x - y).
Point sigma(const Point& p);

/// The three sigma-images of a point, kept in sigma order.
class OrbitClass {
 public:
  explicit OrbitClass(Point p);

  const std::array<Point, 3>& members() const { return members_; }
  /// Lexicographically smallest member.
  const Point& canonical() const;
  /// Members rotated to start at the one whose coordinates share a sign
  /// (the usual way these triples are tabulated). Falls back to the
  /// canonical rotation for trivial orbits.
  std::array<Point, 3> display_order() const;
  bool contains(const Point& p) const;

  friend bool operator==(const OrbitClass& a, const OrbitClass& b) {
    return a.canonical() == b.canonical();
  }

 private:
  std::array<Point, 3> members_;
  std::size_t canonical_ = 0;
};

OrbitClass orbit(const BigInt& x, const BigInt& y);

/// Index with m >= -1 representing the same form up to (x, y) -> (-y, -x).
struct FamilyIndex {
  BigInt m;
  bool transformed = false;
};

FamilyIndex normalize_index(const BigInt& m);

/// Maps a point for the normalized index back to the original one (and
/// vice versa; the map is an involution).
Point swap_negate(const Point& p);

struct Solution {
  Point point;
  BigInt lambda;

  bool primitive() const;
};

/// Solution with lambda = F_m(x, y) attached.
Solution make_solution(const BigInt& m, const BigInt& x, const BigInt& y);

/// Cubic with rational coefficients; coeff(k) is the coefficient of X^k.
class CubicPoly {
 public:
  CubicPoly(Rational c3, Rational c2, Rational c1, Rational c0);

  const Rational& coeff(std::size_t k) const { return c_.at(k); }
  Rational eval(const Rational& x) const;
  Rational derivative_at(const Rational& x) const;
  Rational discriminant() const;
  bool is_integral() const;

  friend bool operator==(const CubicPoly&, const CubicPoly&) = default;

 private:
  std::array<Rational, 4> c_;
};

/// f_t(X) = X^3 - t X^2 - (t+3) X - 1.
CubicPoly poly_fm(const Rational& t);
/// g_m(X) = X^3 + 3 X^2 - (m^2+3m+6) X + 1.
CubicPoly poly_gm(const BigInt& m);

/// Both sides of H*P + F*Q = (m^2+3m+9) y^5 and of its sigma^2 variant
/// H*P(-x-y, x) + F*Q(-x-y, x) = (m^2+3m+9) x^5.
struct IdentityWitness {
  BigInt lhs_y5;
  BigInt rhs_y5;
  BigInt lhs_x5;
  BigInt rhs_x5;

  bool holds() const { return lhs_y5 == rhs_y5 && lhs_x5 == rhs_x5; }
};

IdentityWitness identity_witness(const BigInt& m, const BigInt& x, const BigInt& y);

}  // namespace thue
