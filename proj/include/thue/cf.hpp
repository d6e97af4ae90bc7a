#pragma once

// Exact continued-fraction expansion of real roots of integer cubics,
// specialised to the roots of f_m. All decisions are made by exact sign
// evaluation; no floating point is involved.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "thue/arith.hpp"
#include "thue/family.hpp"

namespace thue {

class RationalRootError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer cubic, c[k] is the coefficient of X^k.
using IntCubic = std::array<BigInt, 4>;

BigInt eval(const IntCubic& p, const BigInt& x);
int sign_at(const IntCubic& p, const Rational& x);
/// p(X + a).
IntCubic taylor_shift(const IntCubic& p, const BigInt& a);
/// Sign changes in the coefficient sequence of p(X + 1); a value of 1
/// proves exactly one root in (1, inf).
int sign_variations_above_one(const IntCubic& p);

/// Rational roots of a cubic, ascending (rational-root theorem on the
/// cleared-denominator integer cubic).
std::vector<Rational> rational_roots(const CubicPoly& poly);

/// Number of distinct real roots in the open interval (lo, hi), by a Sturm
/// sequence. Endpoints must not be roots.
int count_real_roots(const CubicPoly& poly, const Rational& lo, const Rational& hi);

/// An integer cubic with a rational bracket holding exactly one of its
/// real roots, which is irrational.
class IsolatedRoot {
 public:
  /// Throws std::invalid_argument for a non-integral polynomial or a bracket
  /// that does not isolate one root, RationalRootError if the root in the
  /// bracket is rational.
  IsolatedRoot(CubicPoly poly, Rational lo, Rational hi);

  const CubicPoly& poly() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }

  /// -1 if v lies left of the root, +1 if right. v must be rational, so it
  /// never equals the root.
  int compare(const Rational& v) const;

 private:
  friend IsolatedRoot refine(const IsolatedRoot& root, const Rational& max_width);
  struct Unchecked {};
  IsolatedRoot(Unchecked, CubicPoly poly, Rational lo, Rational hi)
      : poly_(std::move(poly)), lo_(std::move(lo)), hi_(std::move(hi)) {}

  CubicPoly poly_;
  Rational lo_;
  Rational hi_;
};

/// Bisects the bracket until hi - lo <= max_width.
IsolatedRoot refine(const IsolatedRoot& root, const Rational& max_width);

/// The root of f_m in (-1/2, 0). For m >= 18 the bracket is tightened to
/// the asymptotic series bounds once they are confirmed by sign checks.
IsolatedRoot isolate_theta2(const BigInt& m);
/// The root of f_m greater than 1.
IsolatedRoot isolate_theta1(const BigInt& m);
/// The root of f_m in (-2, -1).
IsolatedRoot isolate_theta3(const BigInt& m);

struct SeriesBounds {
  Rational lower;  // -1/m + 2/m^2 - 2/m^3 - 3/m^4 + 17/m^5 - 28/m^6
  Rational upper;  // same with -27/m^6
};
SeriesBounds theta2_series_bounds(const BigInt& m);
/// The same bounds with -3/m^3 in place of -2/m^3, as commonly printed. The
/// upper bound then lies below theta2, so these do not bracket the root.
SeriesBounds theta2_series_bounds_as_printed(const BigInt& m);

struct ContinuedFraction {
  std::vector<BigInt> quotients;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

/// Streams partial quotients of an isolated root. The state is the current
/// complete quotient beta, carried as the unique root of an integer cubic
/// inside a bracket (lo, hi), hi possibly infinite.
class CfExpander {
 public:
  explicit CfExpander(const IsolatedRoot& root);

  BigInt next();
  const IntCubic& current_poly() const { return poly_; }
  std::size_t emitted() const { return emitted_; }

 private:
  bool below_root(const BigInt& t) const;

  IntCubic poly_;
  Rational lo_;
  std::optional<Rational> hi_;
  int sign_lo_ = 0;
  std::size_t emitted_ = 0;
};

/// First k partial quotients. Throws std::invalid_argument if k == 0.
ContinuedFraction cf_expand(const IsolatedRoot& root, std::size_t k);

struct Convergent {
  BigInt p;
  BigInt q;
  std::size_t index = 0;
};

/// Incremental p_i = a_i p_{i-1} + p_{i-2}, q_i = a_i q_{i-1} + q_{i-2}.
class ConvergentRecurrence {
 public:
  Convergent push(const BigInt& a);

 private:
  BigInt p_prev_ = 1, p_prev2_ = 0;
  BigInt q_prev_ = 0, q_prev2_ = 1;
  std::size_t count_ = 0;
};

std::vector<Convergent> convergents(const ContinuedFraction& cf);

/// The explicit prefix of the expansion of theta2 predicted for m's residue
/// class mod 14, or nullopt when m is below that class's minimum. For
/// m = 14k+9 the printed pattern carries two spurious terms "2, 3" before
/// floor((49m+73)/6); this function returns the corrected prefix.
std::optional<std::vector<BigInt>> residue_pattern(const BigInt& m);
/// The prefix exactly as printed, without the correction above.
std::optional<std::vector<BigInt>> residue_pattern_as_printed(const BigInt& m);
/// True when residue_pattern(m) differs from the printed prefix.
bool residue_pattern_corrected(const BigInt& m);

/// "a0;a1,a2,..."
std::string format_cf(const ContinuedFraction& cf);

}  // namespace thue
